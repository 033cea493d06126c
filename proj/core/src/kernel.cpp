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

#include "tinytt/kernel.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <utility>

#include "tinytt/pretty.hpp"

namespace tinytt {

const Term* Signature::definition(std::string_view name) const {
  const Entry* e = find(name);
  return e != nullptr ? &e->body : nullptr;
}

const Signature::Entry* Signature::find(std::string_view name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &entries_[it->second];
}

std::vector<std::string> Signature::names() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.name);
  return out;
}

void Signature::insert(Entry entry) {
  if (contains(entry.name)) {
    throw Error(ErrorCode::DuplicateDefinition,
                fmt::format("duplicate definition '{}'", entry.name), entry.span);
  }
  index_.emplace(entry.name, entries_.size());
  entries_.push_back(std::move(entry));
}

Context Context::extend(std::string name, Value type) const {
  Context c = *this;
  c.env_.push_back(fresh_var(depth()));
  c.names_.push_back(std::move(name));
  c.types_.push_back(std::move(type));
  return c;
}

TypeChecker::TypeChecker(const Signature& sig, const FlagSet& flags, Fuel& fuel,
                         std::size_t diagnostic_width)
    : sig_(sig), flags_(flags), ev_(sig, fuel), width_(diagnostic_width) {}

std::uint32_t TypeChecker::universe_of(std::uint32_t i, std::uint32_t j) const {
  return flags_.type_in_type ? 0 : std::max(i, j);
}

std::string TypeChecker::show(const Context& ctx, const Value& v, std::size_t prefix) {
  // Printing gets its own budget so that a diagnostic never changes how much
  // of the checking budget is left.
  Fuel fuel(flags_.fuel);
  Evaluator printer(sig_, fuel);
  const std::size_t width = width_ > prefix + 2 ? width_ - prefix - 2 : 8;
  try {
    if (const auto* u = v.as<VUniverse>(); u != nullptr && !flags_.type_in_type) {
      return fmt::format("U{}", u->level);
    }
    return pretty_truncated(printer.quote(ctx.depth(), v), ctx.names(), width);
  } catch (const FuelExhausted&) {
    return "<not normalizable within fuel>";
  }
}

void TypeChecker::mismatch(const Context& ctx, const Term& t, const Value& expected,
                           const Value& found) {
  const auto* eu = expected.as<VUniverse>();
  const auto* fu = found.as<VUniverse>();
  if (eu != nullptr && fu != nullptr) {
    throw Error(ErrorCode::UniverseInconsistency,
                fmt::format("universe inconsistency: type lives in U{} but is annotated U{}",
                            fu->level, eu->level),
                t.span());
  }
  throw Error(ErrorCode::TypeMismatch, "type mismatch",
              t.span(),
              {"expected: " + show(ctx, expected, 10), "found:    " + show(ctx, found, 10)});
}

std::uint32_t TypeChecker::infer_universe(const Context& ctx, const Term& t) {
  Value ty = infer(ctx, t);
  if (const auto* u = ty.as<VUniverse>()) return u->level;
  throw Error(ErrorCode::NotAType, "expected a type", t.span(),
              {"found a term of type " + show(ctx, ty, 22)});
}

Value TypeChecker::infer(const Context& ctx, const Term& t) {
  switch (t.kind()) {
    case TermKind::Var:
      return ctx.type_of(t.index());

    case TermKind::Global: {
      const auto* e = sig_.find(t.name());
      if (e == nullptr) {
        throw Error(ErrorCode::UnboundName, fmt::format("unbound name '{}'", t.name()), t.span());
      }
      return e->type_value;
    }

    case TermKind::Universe:
      return Value::make(VUniverse{flags_.type_in_type ? 0u : 1u});

    case TermKind::Pi:
    case TermKind::Sigma: {
      const std::uint32_t i = infer_universe(ctx, t[0]);
      Value dom = eval(ctx, t[0]);
      const std::uint32_t j = infer_universe(ctx.extend(t.name(), dom), t[1]);
      return Value::make(VUniverse{universe_of(i, j)});
    }

    case TermKind::App: {
      Value fty = infer(ctx, t[0]);
      const auto* pi = fty.as<VPi>();
      if (pi == nullptr) {
        throw Error(ErrorCode::NotAFunction, "expected a function", t[0].span(),
                    {"found a term of type " + show(ctx, fty, 22)});
      }
      check(ctx, t[1], pi->domain);
      return ev_.instantiate(pi->codomain, eval(ctx, t[1]));
    }

    case TermKind::Fst:
    case TermKind::Snd: {
      Value ty = infer(ctx, t[0]);
      const auto* sg = ty.as<VSigma>();
      if (sg == nullptr) {
        throw Error(ErrorCode::NotAPairType, "expected a pair", t[0].span(),
                    {"found a term of type " + show(ctx, ty, 22)});
      }
      if (t.kind() == TermKind::Fst) return sg->first;
      return ev_.instantiate(sg->second, ev_.fst(eval(ctx, t[0])));
    }

    case TermKind::Id: {
      const std::uint32_t i = infer_universe(ctx, t[0]);
      Value a = eval(ctx, t[0]);
      check(ctx, t[1], a);
      check(ctx, t[2], a);
      return Value::make(VUniverse{universe_of(i, 0)});
    }

    case TermKind::ElimJ: {
      infer_universe(ctx, t[0]);
      Value a = eval(ctx, t[0]);
      check(ctx, t[1], a);
      Value x = eval(ctx, t[1]);
      const DomainFn domains[] = {
          [&](const std::vector<Value>&) { return a; },
          [&](const std::vector<Value>& b) { return Value::make(VId{a, x, b[0]}); },
      };
      Value motive = check_motive(ctx, t[2], domains);
      check(ctx, t[3], ev_.apply(ev_.apply(motive, x), Value::make(VRefl{})));
      check(ctx, t[4], a);
      Value y = eval(ctx, t[4]);
      check(ctx, t[5], Value::make(VId{a, x, y}));
      return ev_.apply(ev_.apply(motive, y), eval(ctx, t[5]));
    }

    case TermKind::ElimK: {
      if (!flags_.enable_k) {
        throw Error(ErrorCode::KDisabled, "K eliminator requires --enable-K", t.span());
      }
      infer_universe(ctx, t[0]);
      Value a = eval(ctx, t[0]);
      check(ctx, t[1], a);
      Value x = eval(ctx, t[1]);
      Value self_id = Value::make(VId{a, x, x});
      const DomainFn domains[] = {[&](const std::vector<Value>&) { return self_id; }};
      Value motive = check_motive(ctx, t[2], domains);
      check(ctx, t[3], ev_.apply(motive, Value::make(VRefl{})));
      check(ctx, t[4], self_id);
      return ev_.apply(motive, eval(ctx, t[4]));
    }

    case TermKind::Absurd: {
      const DomainFn domains[] = {
          [](const std::vector<Value>&) { return Value::make(VEmpty{}); }};
      Value motive = check_motive(ctx, t[0], domains);
      check(ctx, t[1], Value::make(VEmpty{}));
      return ev_.apply(motive, eval(ctx, t[1]));
    }

    case TermKind::NatElim: {
      const DomainFn domains[] = {[](const std::vector<Value>&) { return Value::make(VNat{}); }};
      Value motive = check_motive(ctx, t[0], domains);
      check(ctx, t[1], ev_.apply(motive, Value::make(VZero{})));
      // (m : Nat) -> P m -> P (succ m), with P captured in the closure.
      Term step = mk::pi("ih", mk::app(mk::var(1), mk::var(0)),
                         mk::app(mk::var(2), mk::succ(mk::var(1))));
      check(ctx, t[2], Value::make(VPi{Value::make(VNat{}), Closure{{motive}, step, "m"}}));
      check(ctx, t[3], Value::make(VNat{}));
      return ev_.apply(motive, eval(ctx, t[3]));
    }

    case TermKind::Empty:
    case TermKind::Unit:
    case TermKind::Nat:
      return Value::make(VUniverse{0});
    case TermKind::TT:
      return Value::make(VUnit{});
    case TermKind::Zero:
      return Value::make(VNat{});
    case TermKind::Succ:
      check(ctx, t[0], Value::make(VNat{}));
      return Value::make(VNat{});

    case TermKind::Lambda:
      throw Error(ErrorCode::CannotInfer, "cannot infer the type of a lambda", t.span());
    case TermKind::Pair:
      throw Error(ErrorCode::CannotInfer, "cannot infer the type of a pair", t.span());
    case TermKind::Refl:
      throw Error(ErrorCode::CannotInfer, "cannot infer the type of refl", t.span());
  }
  throw std::logic_error("infer: unknown term former");
}

void TypeChecker::check(const Context& ctx, const Term& t, const Value& expected) {
  switch (t.kind()) {
    case TermKind::Lambda:
      if (const auto* pi = expected.as<VPi>()) {
        Value x = fresh_var(ctx.depth());
        check(ctx.extend(t.name(), pi->domain), t[0], ev_.instantiate(pi->codomain, x));
        return;
      }
      throw Error(ErrorCode::TypeMismatch, "type mismatch: a lambda cannot have this type",
                  t.span(), {"expected: " + show(ctx, expected, 10)});

    case TermKind::Pair:
      if (const auto* sg = expected.as<VSigma>()) {
        check(ctx, t[0], sg->first);
        check(ctx, t[1], ev_.instantiate(sg->second, eval(ctx, t[0])));
        return;
      }
      throw Error(ErrorCode::TypeMismatch, "type mismatch: a pair cannot have this type",
                  t.span(), {"expected: " + show(ctx, expected, 10)});

    case TermKind::Refl:
      if (const auto* id = expected.as<VId>()) {
        if (!ev_.convert(ctx.depth(), id->lhs, id->rhs)) {
          throw Error(ErrorCode::ReflEndpointsDiffer, "refl endpoints differ", t.span(),
                      {"left:  " + show(ctx, id->lhs, 7), "right: " + show(ctx, id->rhs, 7)});
        }
        return;
      }
      throw Error(ErrorCode::TypeMismatch, "type mismatch: refl needs an identity type",
                  t.span(), {"expected: " + show(ctx, expected, 10)});

    default: {
      Value found = infer(ctx, t);
      if (!ev_.convert(ctx.depth(), found, expected)) mismatch(ctx, t, expected, found);
    }
  }
}

Value TypeChecker::check_motive(const Context& ctx, const Term& motive,
                                std::span<const DomainFn> domains) {
  std::vector<Value> bound;
  check_motive_at(ctx, motive, domains, bound);
  return eval(ctx, motive);
}

// A motive is a function over `domains` returning a type in any universe.
// Lambdas are peeled binder by binder; anything else must infer a matching
// Pi telescope.
void TypeChecker::check_motive_at(const Context& ctx, const Term& motive,
                                  std::span<const DomainFn> domains, std::vector<Value>& bound) {
  if (domains.empty()) {
    infer_universe(ctx, motive);
    return;
  }
  Value dom = domains.front()(bound);
  if (motive.kind() == TermKind::Lambda) {
    bound.push_back(fresh_var(ctx.depth()));
    check_motive_at(ctx.extend(motive.name(), dom), motive[0], domains.subspan(1), bound);
    return;
  }
  Value ty = infer(ctx, motive);
  Level depth = ctx.depth();
  for (const DomainFn& next : domains) {
    const auto* pi = ty.as<VPi>();
    if (pi == nullptr || !ev_.convert(depth, pi->domain, next(bound))) {
      throw Error(ErrorCode::TypeMismatch, "motive has the wrong domain", motive.span(),
                  {"motive type: " + show(ctx, ty, 13)});
    }
    Value x = fresh_var(depth++);
    bound.push_back(x);
    ty = ev_.instantiate(pi->codomain, x);
  }
  if (!ty.is<VUniverse>()) {
    throw Error(ErrorCode::TypeMismatch, "motive must return a type", motive.span());
  }
}

Signature check_declaration(const Signature& sig, const Declaration& decl, const FlagSet& flags) {
  const Span at = decl.name_span.valid() ? decl.name_span : decl.span;
  if (sig.contains(decl.name)) {
    throw Error(ErrorCode::DuplicateDefinition, fmt::format("duplicate definition '{}'", decl.name),
                at);
  }
  if (!flags.enable_k) {
    for (const Term* part : {&decl.type, &decl.body}) {
      if (const Term* k = find_first(*part, TermKind::ElimK)) {
        throw Error(ErrorCode::KDisabled, "K eliminator requires --enable-K", k->span(),
                    {fmt::format("in definition of '{}'", decl.name)});
      }
    }
  }
  Fuel fuel(flags.fuel);
  TypeChecker tc(sig, flags, fuel);
  const Context ctx;
  Value type_value;
  try {
    tc.infer_universe(ctx, decl.type);
    type_value = tc.eval(ctx, decl.type);
    tc.check(ctx, decl.body, type_value);
  } catch (Error& e) {
    Diagnostic& d = e.diagnostic();
    if (d.span == decl.body.span() || d.span == decl.type.span()) {
      d.span = at;
    } else {
      d.notes.push_back(fmt::format("in definition of '{}'", decl.name));
    }
    throw;
  } catch (const FuelExhausted& f) {
    throw Error(ErrorCode::FuelExhausted,
                fmt::format("fuel exhausted after {} reduction steps", f.steps()), at,
                {fmt::format("while checking definition of '{}'", decl.name)});
  }
  Signature out = sig;
  out.insert({decl.name, decl.type, decl.body, std::move(type_value), decl.span});
  return out;
}

}  // namespace tinytt
