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

#ifndef TINYTT_EVAL_HPP
#define TINYTT_EVAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string_view>

#include "tinytt/term.hpp"
#include "tinytt/value.hpp"

namespace tinytt {

inline constexpr std::uint64_t kDefaultFuel = 1'000'000;

/// Thrown when a reduction step is requested with no budget left.
class FuelExhausted : public std::runtime_error {
 public:
  explicit FuelExhausted(std::uint64_t steps);
  /// Steps consumed when the budget ran out; always the full budget.
  [[nodiscard]] std::uint64_t steps() const noexcept { return steps_; }

 private:
  std::uint64_t steps_;
};

/// Reduction step budget. One unit is spent per beta, projection, iota
/// (J, K, natElim) or global-unfolding step.
class Fuel {
 public:
  explicit Fuel(std::uint64_t budget = kDefaultFuel) : total_(budget), remaining_(budget) {}

  void tick() {
    if (remaining_ == 0) throw FuelExhausted(total_);
    --remaining_;
  }

  [[nodiscard]] std::uint64_t total() const noexcept { return total_; }
  [[nodiscard]] std::uint64_t remaining() const noexcept { return remaining_; }
  [[nodiscard]] std::uint64_t used() const noexcept { return total_ - remaining_; }

 private:
  std::uint64_t total_;
  std::uint64_t remaining_;
};

/// Source of global definitions for delta-unfolding.
class Definitions {
 public:
  virtual ~Definitions() = default;
  /// Closed body of `name`, or nullptr when unknown.
  [[nodiscard]] virtual const Term* definition(std::string_view name) const = 0;
};

/// An empty set of definitions, for closed terms without globals.
class NoDefinitions final : public Definitions {
 public:
  [[nodiscard]] const Term* definition(std::string_view) const override { return nullptr; }
};

/// Normalization by evaluation over a fixed set of definitions. Every
/// operation draws from the same fuel budget.
class Evaluator {
 public:
  Evaluator(const Definitions& defs, Fuel& fuel) : defs_(defs), fuel_(fuel) {}

  Value eval(Env env, Term t);

  Value apply(const Value& fn, const Value& arg);
  Value instantiate(const Closure& c, const Value& arg);
  Value fst(const Value& v);
  Value snd(const Value& v);
  Value elim_j(const Value& type, const Value& base, const Value& motive, const Value& kase,
               const Value& target, const Value& proof);
  Value elim_k(const Value& type, const Value& base, const Value& motive, const Value& kase,
               const Value& proof);
  Value absurd(const Value& motive, const Value& target);
  Value nat_elim(const Value& motive, const Value& zcase, const Value& scase,
                 const Value& target);

  /// Reads a value back into a beta-normal term under `depth` binders.
  Term quote(Level depth, const Value& v);

  /// Definitional equality: structural, with eta for functions only.
  bool convert(Level depth, const Value& a, const Value& b);

  [[nodiscard]] Fuel& fuel() noexcept { return fuel_; }

 private:
  Term quote_neutral(Level depth, const VNeutral& n);
  bool convert_frame(Level depth, const Frame& a, const Frame& b);

  const Definitions& defs_;
  Fuel& fuel_;
};

/// quote(env.size(), eval(env, t)).
Term normalize(const Definitions& defs, const Env& env, const Term& t, Fuel& fuel);

}  // namespace tinytt

#endif  // TINYTT_EVAL_HPP
