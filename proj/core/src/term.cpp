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

#include "tinytt/term.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace tinytt {

std::size_t arity(TermKind kind) noexcept {
  switch (kind) {
    case TermKind::Pi:
    case TermKind::App:
    case TermKind::Sigma:
    case TermKind::Pair:
    case TermKind::Absurd:
      return 2;
    case TermKind::Lambda:
    case TermKind::Fst:
    case TermKind::Snd:
    case TermKind::Succ:
      return 1;
    case TermKind::Id:
      return 3;
    case TermKind::NatElim:
      return 4;
    case TermKind::ElimK:
      return 5;
    case TermKind::ElimJ:
      return 6;
    default:
      return 0;
  }
}

bool binds(TermKind kind, std::size_t i) noexcept {
  switch (kind) {
    case TermKind::Pi:
    case TermKind::Sigma:
      return i == 1;
    case TermKind::Lambda:
      return i == 0;
    default:
      return false;
  }
}

const char* kind_name(TermKind kind) noexcept {
  switch (kind) {
    case TermKind::Universe: return "Universe";
    case TermKind::Var: return "Var";
    case TermKind::Pi: return "Pi";
    case TermKind::Lambda: return "Lambda";
    case TermKind::App: return "App";
    case TermKind::Sigma: return "Sigma";
    case TermKind::Pair: return "Pair";
    case TermKind::Fst: return "Fst";
    case TermKind::Snd: return "Snd";
    case TermKind::Id: return "Id";
    case TermKind::Refl: return "Refl";
    case TermKind::ElimJ: return "ElimJ";
    case TermKind::ElimK: return "ElimK";
    case TermKind::Empty: return "Empty";
    case TermKind::Absurd: return "Absurd";
    case TermKind::Unit: return "Unit";
    case TermKind::TT: return "TT";
    case TermKind::Nat: return "Nat";
    case TermKind::Zero: return "Zero";
    case TermKind::Succ: return "Succ";
    case TermKind::NatElim: return "NatElim";
    case TermKind::Global: return "Global";
  }
  return "?";
}

Term Term::make(TermKind kind, std::vector<Term> children, Span span, std::string name,
                std::uint32_t index) {
  assert(children.size() == arity(kind));
  Term t;
  t.node_ = std::make_shared<const Node>(
      Node{kind, span, std::move(name), index, std::move(children)});
  return t;
}

Term Term::with_children(std::vector<Term> children) const {
  return make(kind(), std::move(children), span(), name(), index());
}

Term Term::with_span(Span span) const {
  return make(kind(), node_->children, span, name(), index());
}

namespace mk {

Term universe(Span s) { return Term::make(TermKind::Universe, {}, s); }
Term var(std::uint32_t index, Span s) { return Term::make(TermKind::Var, {}, s, {}, index); }
Term pi(std::string hint, Term domain, Term codomain, Span s) {
  return Term::make(TermKind::Pi, {std::move(domain), std::move(codomain)}, s, std::move(hint));
}
Term arrow(Term domain, Term codomain, Span s) {
  return pi("_", std::move(domain), shift(codomain, 0, 1), s);
}
Term lambda(std::string hint, Term body, Span s) {
  return Term::make(TermKind::Lambda, {std::move(body)}, s, std::move(hint));
}
Term app(Term fn, Term arg, Span s) {
  return Term::make(TermKind::App, {std::move(fn), std::move(arg)}, s);
}
Term apps(Term fn, std::initializer_list<Term> args) {
  for (const Term& a : args) fn = app(std::move(fn), a);
  return fn;
}
Term sigma(std::string hint, Term first, Term second, Span s) {
  return Term::make(TermKind::Sigma, {std::move(first), std::move(second)}, s, std::move(hint));
}
Term product(Term first, Term second, Span s) {
  return sigma("_", std::move(first), shift(second, 0, 1), s);
}
Term pair(Term first, Term second, Span s) {
  return Term::make(TermKind::Pair, {std::move(first), std::move(second)}, s);
}
Term fst(Term target, Span s) { return Term::make(TermKind::Fst, {std::move(target)}, s); }
Term snd(Term target, Span s) { return Term::make(TermKind::Snd, {std::move(target)}, s); }
Term id(Term type, Term lhs, Term rhs, Span s) {
  return Term::make(TermKind::Id, {std::move(type), std::move(lhs), std::move(rhs)}, s);
}
Term refl(Span s) { return Term::make(TermKind::Refl, {}, s); }
Term elim_j(Term type, Term base, Term motive, Term kase, Term target, Term proof, Span s) {
  return Term::make(TermKind::ElimJ,
                    {std::move(type), std::move(base), std::move(motive), std::move(kase),
                     std::move(target), std::move(proof)},
                    s);
}
Term elim_k(Term type, Term base, Term motive, Term kase, Term proof, Span s) {
  return Term::make(TermKind::ElimK,
                    {std::move(type), std::move(base), std::move(motive), std::move(kase),
                     std::move(proof)},
                    s);
}
Term empty(Span s) { return Term::make(TermKind::Empty, {}, s); }
Term absurd(Term motive, Term target, Span s) {
  return Term::make(TermKind::Absurd, {std::move(motive), std::move(target)}, s);
}
Term unit(Span s) { return Term::make(TermKind::Unit, {}, s); }
Term tt(Span s) { return Term::make(TermKind::TT, {}, s); }
Term nat(Span s) { return Term::make(TermKind::Nat, {}, s); }
Term zero(Span s) { return Term::make(TermKind::Zero, {}, s); }
Term succ(Term pred, Span s) { return Term::make(TermKind::Succ, {std::move(pred)}, s); }
Term numeral(unsigned n) {
  Term t = zero();
  while (n-- > 0) t = succ(std::move(t));
  return t;
}
Term nat_elim(Term motive, Term zcase, Term scase, Term target, Span s) {
  return Term::make(TermKind::NatElim,
                    {std::move(motive), std::move(zcase), std::move(scase), std::move(target)}, s);
}
Term global(std::string name, Span s) {
  return Term::make(TermKind::Global, {}, s, std::move(name));
}

}  // namespace mk

namespace {

Term shift_at(const Term& t, std::uint32_t cutoff, std::int64_t amount) {
  if (t.kind() == TermKind::Var) {
    if (t.index() < cutoff) return t;
    const std::int64_t shifted = static_cast<std::int64_t>(t.index()) + amount;
    assert(shifted >= static_cast<std::int64_t>(cutoff));
    return Term::make(TermKind::Var, {}, t.span(), t.name(), static_cast<std::uint32_t>(shifted));
  }
  auto kids = t.children();
  if (kids.empty()) return t;
  std::vector<Term> out;
  out.reserve(kids.size());
  bool changed = false;
  for (std::size_t i = 0; i < kids.size(); ++i) {
    out.push_back(shift_at(kids[i], cutoff + (binds(t.kind(), i) ? 1 : 0), amount));
    changed = changed || !out.back().same_node(kids[i]);
  }
  return changed ? t.with_children(std::move(out)) : t;
}

}  // namespace

Term shift(const Term& t, std::uint32_t cutoff, std::int64_t amount) {
  if (amount == 0) return t;
  return shift_at(t, cutoff, amount);
}

bool alpha_equal(const Term& a, const Term& b) {
  if (a.same_node(b)) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TermKind::Var:
      return a.index() == b.index();
    case TermKind::Global:
      return a.name() == b.name();
    default:
      break;
  }
  auto ka = a.children();
  auto kb = b.children();
  return std::equal(ka.begin(), ka.end(), kb.begin(), kb.end(),
                    [](const Term& x, const Term& y) { return alpha_equal(x, y); });
}

bool occurs_free(const Term& t, std::uint32_t index) {
  if (t.kind() == TermKind::Var) return t.index() == index;
  auto kids = t.children();
  for (std::size_t i = 0; i < kids.size(); ++i) {
    if (occurs_free(kids[i], index + (binds(t.kind(), i) ? 1 : 0))) return true;
  }
  return false;
}

std::uint32_t free_demand(const Term& t) {
  if (t.kind() == TermKind::Var) return t.index() + 1;
  std::uint32_t demand = 0;
  auto kids = t.children();
  for (std::size_t i = 0; i < kids.size(); ++i) {
    std::uint32_t d = free_demand(kids[i]);
    if (binds(t.kind(), i)) d = d > 0 ? d - 1 : 0;
    demand = std::max(demand, d);
  }
  return demand;
}

const Term* find_first(const Term& t, TermKind kind) {
  if (t.kind() == kind) return &t;
  for (const Term& k : t.children()) {
    if (const Term* hit = find_first(k, kind)) return hit;
  }
  return nullptr;
}

void collect_globals(const Term& t, std::vector<std::string>& out) {
  if (t.kind() == TermKind::Global) {
    out.push_back(t.name());
    return;
  }
  for (const Term& k : t.children()) collect_globals(k, out);
}

}  // namespace tinytt
