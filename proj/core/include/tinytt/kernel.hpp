// Copyright 2026 The tinytt Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TINYTT_KERNEL_HPP
#define TINYTT_KERNEL_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tinytt/diagnostic.hpp"
#include "tinytt/eval.hpp"
#include "tinytt/term.hpp"
#include "tinytt/value.hpp"

namespace tinytt {

/// Checking-session switches. `type_in_type` collapses the universe
/// hierarchy (U : U); `enable_k` admits the K eliminator.
struct FlagSet {
  bool type_in_type = false;
  bool enable_k = false;
  std::uint64_t fuel = kDefaultFuel;
};

/// Checked global definitions in declaration order.
class Signature final : public Definitions {
 public:
  struct Entry {
    std::string name;
    Term type;
    Term body;
    Value type_value;
    Span span;
  };

  [[nodiscard]] const Term* definition(std::string_view name) const override;
  [[nodiscard]] const Entry* find(std::string_view name) const;
  [[nodiscard]] bool contains(std::string_view name) const { return find(name) != nullptr; }
  [[nodiscard]] const std::vector<Entry>& entries() const noexcept { return entries_; }
  [[nodiscard]] std::vector<std::string> names() const;

  /// Appends an already-checked entry. Throws E016 on a duplicate name.
  void insert(Entry entry);

 private:
  std::vector<Entry> entries_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

/// Telescope of bound variables. Each variable is represented in `env()` by
/// a fresh neutral at its level.
class Context {
 public:
  [[nodiscard]] Level depth() const noexcept { return static_cast<Level>(types_.size()); }
  [[nodiscard]] const Env& env() const noexcept { return env_; }
  [[nodiscard]] const std::vector<std::string>& names() const noexcept { return names_; }
  [[nodiscard]] const Value& type_of(std::uint32_t index) const {
    return types_[types_.size() - 1 - index];
  }

  [[nodiscard]] Context extend(std::string name, Value type) const;

 private:
  std::vector<std::string> names_;
  std::vector<Value> types_;
  Env env_;
};

/// Bidirectional checker for one session: a fixed signature, flag set and
/// fuel budget.
class TypeChecker {
 public:
  static constexpr std::size_t kDefaultDiagnosticWidth = 80;

  TypeChecker(const Signature& sig, const FlagSet& flags, Fuel& fuel,
              std::size_t diagnostic_width = kDefaultDiagnosticWidth);

  Value infer(const Context& ctx, const Term& t);
  void check(const Context& ctx, const Term& t, const Value& expected);

  /// Checks that `t` is a type and returns the level of its universe.
  std::uint32_t infer_universe(const Context& ctx, const Term& t);

  Value eval(const Context& ctx, const Term& t) { return ev_.eval(ctx.env(), t); }
  Evaluator& evaluator() noexcept { return ev_; }

  /// Normal form of `v` rendered for diagnostics, one line, width-limited.
  std::string show(const Context& ctx, const Value& v, std::size_t prefix = 0);

 private:
  using DomainFn = std::function<Value(const std::vector<Value>& bound)>;

  Value check_motive(const Context& ctx, const Term& motive, std::span<const DomainFn> domains);
  void check_motive_at(const Context& ctx, const Term& motive, std::span<const DomainFn> domains,
                       std::vector<Value>& bound);
  std::uint32_t universe_of(std::uint32_t i, std::uint32_t j) const;
  [[noreturn]] void mismatch(const Context& ctx, const Term& t, const Value& expected,
                             const Value& found);

  const Signature& sig_;
  FlagSet flags_;
  Evaluator ev_;
  std::size_t width_;
};

struct Declaration {
  std::string name;
  Term type;
  Term body;
  Span span;
  Span name_span;
};

/// Checks `decl` against `sig` with a fresh fuel budget and returns the
/// extended signature. Failures are reported as `Error`; a failure located
/// at the whole type or body is attributed to the declared name.
Signature check_declaration(const Signature& sig, const Declaration& decl, const FlagSet& flags);

}  // namespace tinytt

#endif  // TINYTT_KERNEL_HPP
