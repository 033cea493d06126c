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

#ifndef TINYTT_TERM_HPP
#define TINYTT_TERM_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "tinytt/span.hpp"

namespace tinytt {

/// Core term formers. Bound variables are de Bruijn indices (innermost = 0).
enum class TermKind : std::uint8_t {
  Universe,
  Var,
  Pi,       // [domain, codomain*]
  Lambda,   // [body*]
  App,      // [fn, arg]
  Sigma,    // [first, second*]
  Pair,     // [first, second]
  Fst,      // [target]
  Snd,      // [target]
  Id,       // [type, lhs, rhs]
  Refl,
  ElimJ,    // [type, base, motive, case, target, proof]
  ElimK,    // [type, base, motive, case, proof]
  Empty,
  Absurd,   // [motive, target]
  Unit,
  TT,
  Nat,
  Zero,
  Succ,     // [pred]
  NatElim,  // [motive, zcase, scase, target]
  Global,
};
// (* = child binds one variable)

/// Number of children a former carries.
std::size_t arity(TermKind kind) noexcept;

/// True when child `i` of `kind` is under one additional binder.
bool binds(TermKind kind, std::size_t i) noexcept;

const char* kind_name(TermKind kind) noexcept;

/// Immutable, shareable handle to a core term node.
class Term {
 public:
  Term() = default;

  [[nodiscard]] TermKind kind() const noexcept { return node_->kind; }
  [[nodiscard]] const Span& span() const noexcept { return node_->span; }
  /// Binder name hint (Pi, Lambda, Sigma) or the referenced name (Global).
  [[nodiscard]] const std::string& name() const noexcept { return node_->name; }
  [[nodiscard]] std::uint32_t index() const noexcept { return node_->index; }
  [[nodiscard]] std::span<const Term> children() const noexcept { return node_->children; }
  [[nodiscard]] const Term& operator[](std::size_t i) const noexcept { return node_->children[i]; }

  [[nodiscard]] bool is(TermKind k) const noexcept { return node_ && node_->kind == k; }
  explicit operator bool() const noexcept { return node_ != nullptr; }
  [[nodiscard]] bool same_node(const Term& other) const noexcept { return node_ == other.node_; }

  static Term make(TermKind kind, std::vector<Term> children, Span span = {},
                   std::string name = {}, std::uint32_t index = 0);

  /// Same former, hint and span as `this` with different children.
  [[nodiscard]] Term with_children(std::vector<Term> children) const;
  [[nodiscard]] Term with_span(Span span) const;

 private:
  struct Node {
    TermKind kind;
    Span span;
    std::string name;
    std::uint32_t index;
    std::vector<Term> children;
  };
  std::shared_ptr<const Node> node_;
};

namespace mk {
Term universe(Span s = {});
Term var(std::uint32_t index, Span s = {});
Term pi(std::string hint, Term domain, Term codomain, Span s = {});
/// Non-dependent function type; `codomain` is shifted under the binder.
Term arrow(Term domain, Term codomain, Span s = {});
Term lambda(std::string hint, Term body, Span s = {});
Term app(Term fn, Term arg, Span s = {});
Term apps(Term fn, std::initializer_list<Term> args);
Term sigma(std::string hint, Term first, Term second, Span s = {});
Term product(Term first, Term second, Span s = {});
Term pair(Term first, Term second, Span s = {});
Term fst(Term target, Span s = {});
Term snd(Term target, Span s = {});
Term id(Term type, Term lhs, Term rhs, Span s = {});
Term refl(Span s = {});
Term elim_j(Term type, Term base, Term motive, Term kase, Term target, Term proof, Span s = {});
Term elim_k(Term type, Term base, Term motive, Term kase, Term proof, Span s = {});
Term empty(Span s = {});
Term absurd(Term motive, Term target, Span s = {});
Term unit(Span s = {});
Term tt(Span s = {});
Term nat(Span s = {});
Term zero(Span s = {});
Term succ(Term pred, Span s = {});
Term numeral(unsigned n);
Term nat_elim(Term motive, Term zcase, Term scase, Term target, Span s = {});
Term global(std::string name, Span s = {});
}  // namespace mk

/// Adds `amount` to every free index >= `cutoff`. `amount` may be negative
/// as long as no index at or above the cutoff drops below it.
Term shift(const Term& t, std::uint32_t cutoff, std::int64_t amount);

/// Structural equality ignoring name hints and spans.
bool alpha_equal(const Term& a, const Term& b);

/// Does index `index` (relative to the root of `t`) occur free in `t`?
bool occurs_free(const Term& t, std::uint32_t index);

/// Smallest n such that every free index in `t` is below n.
std::uint32_t free_demand(const Term& t);

/// First node of kind `kind` in pre-order, or nullptr.
const Term* find_first(const Term& t, TermKind kind);

/// Names of every Global node in `t`.
void collect_globals(const Term& t, std::vector<std::string>& out);

}  // namespace tinytt

#endif  // TINYTT_TERM_HPP
