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

#include "tinytt/eval.hpp"

#include <cassert>
#include <string>
#include <utility>

namespace tinytt {

namespace {

[[noreturn]] void ill_typed(const char* what) {
  throw std::logic_error(std::string("evaluation of ill-typed term: ") + what);
}

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

}  // namespace

FuelExhausted::FuelExhausted(std::uint64_t steps)
    : std::runtime_error("fuel exhausted after " + std::to_string(steps) + " reduction steps"),
      steps_(steps) {}

Value Evaluator::eval(Env env, Term t) {
  // Application of a lambda and global unfolding continue in this frame
  // instead of recursing, so a looping term does not grow the native stack.
  for (;;) {
    switch (t.kind()) {
      case TermKind::Var: {
        assert(t.index() < env.size());
        return env[env.size() - 1 - t.index()];
      }
      case TermKind::Global: {
        const Term* body = defs_.definition(t.name());
        if (body == nullptr) throw std::logic_error("unknown global '" + t.name() + "'");
        fuel_.tick();
        env.clear();
        t = *body;
        continue;
      }
      case TermKind::App: {
        Value fn = eval(env, t[0]);
        Value arg = eval(env, t[1]);
        if (const auto* lam = fn.as<VLambda>()) {
          fuel_.tick();
          Term body = lam->body.body;
          env = lam->body.env;
          env.push_back(std::move(arg));
          t = std::move(body);
          continue;
        }
        return apply(fn, arg);
      }
      case TermKind::Universe:
        return Value::make(VUniverse{0});
      case TermKind::Pi: {
        Value dom = eval(env, t[0]);
        return Value::make(VPi{std::move(dom), Closure{std::move(env), t[1], t.name()}});
      }
      case TermKind::Lambda:
        return Value::make(VLambda{Closure{std::move(env), t[0], t.name()}});
      case TermKind::Sigma: {
        Value first = eval(env, t[0]);
        return Value::make(VSigma{std::move(first), Closure{std::move(env), t[1], t.name()}});
      }
      case TermKind::Pair: {
        Value a = eval(env, t[0]);
        Value b = eval(env, t[1]);
        return Value::make(VPair{std::move(a), std::move(b)});
      }
      case TermKind::Fst:
        return fst(eval(std::move(env), t[0]));
      case TermKind::Snd:
        return snd(eval(std::move(env), t[0]));
      case TermKind::Id: {
        Value ty = eval(env, t[0]);
        Value lhs = eval(env, t[1]);
        Value rhs = eval(env, t[2]);
        return Value::make(VId{std::move(ty), std::move(lhs), std::move(rhs)});
      }
      case TermKind::Refl:
        return Value::make(VRefl{});
      case TermKind::ElimJ:
        return elim_j(eval(env, t[0]), eval(env, t[1]), eval(env, t[2]), eval(env, t[3]),
                      eval(env, t[4]), eval(env, t[5]));
      case TermKind::ElimK:
        return elim_k(eval(env, t[0]), eval(env, t[1]), eval(env, t[2]), eval(env, t[3]),
                      eval(env, t[4]));
      case TermKind::Empty:
        return Value::make(VEmpty{});
      case TermKind::Absurd:
        return absurd(eval(env, t[0]), eval(env, t[1]));
      case TermKind::Unit:
        return Value::make(VUnit{});
      case TermKind::TT:
        return Value::make(VTT{});
      case TermKind::Nat:
        return Value::make(VNat{});
      case TermKind::Zero:
        return Value::make(VZero{});
      case TermKind::Succ:
        return Value::make(VSucc{eval(std::move(env), t[0])});
      case TermKind::NatElim:
        return nat_elim(eval(env, t[0]), eval(env, t[1]), eval(env, t[2]), eval(env, t[3]));
    }
    ill_typed("unknown term former");
  }
}

Value Evaluator::instantiate(const Closure& c, const Value& arg) {
  Env env = c.env;
  env.push_back(arg);
  return eval(std::move(env), c.body);
}

Value Evaluator::apply(const Value& fn, const Value& arg) {
  if (const auto* lam = fn.as<VLambda>()) {
    fuel_.tick();
    return instantiate(lam->body, arg);
  }
  if (const auto* n = fn.as<VNeutral>()) return push_frame(*n, FApp{arg});
  ill_typed("application of a non-function");
}

Value Evaluator::fst(const Value& v) {
  if (const auto* p = v.as<VPair>()) {
    fuel_.tick();
    return p->first;
  }
  if (const auto* n = v.as<VNeutral>()) return push_frame(*n, FFst{});
  ill_typed("fst of a non-pair");
}

Value Evaluator::snd(const Value& v) {
  if (const auto* p = v.as<VPair>()) {
    fuel_.tick();
    return p->second;
  }
  if (const auto* n = v.as<VNeutral>()) return push_frame(*n, FSnd{});
  ill_typed("snd of a non-pair");
}

Value Evaluator::elim_j(const Value& type, const Value& base, const Value& motive,
                        const Value& kase, const Value& target, const Value& proof) {
  if (proof.is<VRefl>()) {
    fuel_.tick();
    return kase;
  }
  if (const auto* n = proof.as<VNeutral>()) return push_frame(*n, FJ{type, base, motive, kase, target});
  ill_typed("J on a non-identity proof");
}

Value Evaluator::elim_k(const Value& type, const Value& base, const Value& motive,
                        const Value& kase, const Value& proof) {
  if (proof.is<VRefl>()) {
    fuel_.tick();
    return kase;
  }
  if (const auto* n = proof.as<VNeutral>()) return push_frame(*n, FK{type, base, motive, kase});
  ill_typed("K on a non-identity proof");
}

Value Evaluator::absurd(const Value& motive, const Value& target) {
  if (const auto* n = target.as<VNeutral>()) return push_frame(*n, FAbsurd{motive});
  ill_typed("absurd on a canonical value");
}

Value Evaluator::nat_elim(const Value& motive, const Value& zcase, const Value& scase,
                          const Value& target) {
  if (target.is<VZero>()) {
    fuel_.tick();
    return zcase;
  }
  if (const auto* s = target.as<VSucc>()) {
    fuel_.tick();
    Value rec = nat_elim(motive, zcase, scase, s->pred);
    return apply(apply(scase, s->pred), rec);
  }
  if (const auto* n = target.as<VNeutral>()) {
    return push_frame(*n, FNatElim{motive, zcase, scase});
  }
  ill_typed("natElim on a non-numeral");
}

Term Evaluator::quote(Level depth, const Value& v) {
  return std::visit(
      overloaded{
          [&](const VUniverse&) { return mk::universe(); },
          [&](const VPi& p) {
            Term dom = quote(depth, p.domain);
            Term cod = quote(depth + 1, instantiate(p.codomain, fresh_var(depth)));
            return mk::pi(p.codomain.hint, std::move(dom), std::move(cod));
          },
          [&](const VLambda& l) {
            return mk::lambda(l.body.hint, quote(depth + 1, instantiate(l.body, fresh_var(depth))));
          },
          [&](const VSigma& s) {
            Term first = quote(depth, s.first);
            Term second = quote(depth + 1, instantiate(s.second, fresh_var(depth)));
            return mk::sigma(s.second.hint, std::move(first), std::move(second));
          },
          [&](const VPair& p) { return mk::pair(quote(depth, p.first), quote(depth, p.second)); },
          [&](const VId& i) {
            return mk::id(quote(depth, i.type), quote(depth, i.lhs), quote(depth, i.rhs));
          },
          [&](const VRefl&) { return mk::refl(); },
          [&](const VEmpty&) { return mk::empty(); },
          [&](const VUnit&) { return mk::unit(); },
          [&](const VTT&) { return mk::tt(); },
          [&](const VNat&) { return mk::nat(); },
          [&](const VZero&) { return mk::zero(); },
          [&](const VSucc& s) { return mk::succ(quote(depth, s.pred)); },
          [&](const VNeutral& n) { return quote_neutral(depth, n); },
      },
      v.node().v);
}

Term Evaluator::quote_neutral(Level depth, const VNeutral& n) {
  assert(n.head < depth);
  Term t = mk::var(depth - 1 - n.head);
  for (const Frame& f : n.spine) {
    t = std::visit(
        overloaded{
            [&](const FApp& a) { return mk::app(t, quote(depth, a.arg)); },
            [&](const FFst&) { return mk::fst(t); },
            [&](const FSnd&) { return mk::snd(t); },
            [&](const FJ& j) {
              return mk::elim_j(quote(depth, j.type), quote(depth, j.base),
                                quote(depth, j.motive), quote(depth, j.kase),
                                quote(depth, j.target), t);
            },
            [&](const FK& k) {
              return mk::elim_k(quote(depth, k.type), quote(depth, k.base),
                                quote(depth, k.motive), quote(depth, k.kase), t);
            },
            [&](const FAbsurd& a) { return mk::absurd(quote(depth, a.motive), t); },
            [&](const FNatElim& e) {
              return mk::nat_elim(quote(depth, e.motive), quote(depth, e.zcase),
                                  quote(depth, e.scase), t);
            },
        },
        f);
  }
  return t;
}

bool Evaluator::convert(Level depth, const Value& a, const Value& b) {
  // Function eta: compare a lambda against anything by applying both sides
  // to a fresh variable.
  if (a.is<VLambda>() || b.is<VLambda>()) {
    if (!(a.is<VLambda>() || a.is<VNeutral>()) || !(b.is<VLambda>() || b.is<VNeutral>())) {
      return false;
    }
    Value x = fresh_var(depth);
    return convert(depth + 1, apply(a, x), apply(b, x));
  }
  if (a.node().v.index() != b.node().v.index()) return false;

  return std::visit(
      overloaded{
          [&](const VUniverse& u) { return u.level == b.as<VUniverse>()->level; },
          [&](const VPi& p) {
            const auto& q = *b.as<VPi>();
            if (!convert(depth, p.domain, q.domain)) return false;
            Value x = fresh_var(depth);
            return convert(depth + 1, instantiate(p.codomain, x), instantiate(q.codomain, x));
          },
          [&](const VLambda&) { return false; },  // handled above
          [&](const VSigma& s) {
            const auto& r = *b.as<VSigma>();
            if (!convert(depth, s.first, r.first)) return false;
            Value x = fresh_var(depth);
            return convert(depth + 1, instantiate(s.second, x), instantiate(r.second, x));
          },
          [&](const VPair& p) {
            const auto& q = *b.as<VPair>();
            return convert(depth, p.first, q.first) && convert(depth, p.second, q.second);
          },
          [&](const VId& i) {
            const auto& j = *b.as<VId>();
            return convert(depth, i.type, j.type) && convert(depth, i.lhs, j.lhs) &&
                   convert(depth, i.rhs, j.rhs);
          },
          [&](const VSucc& s) { return convert(depth, s.pred, b.as<VSucc>()->pred); },
          [&](const VNeutral& n) {
            const auto& m = *b.as<VNeutral>();
            if (n.head != m.head || n.spine.size() != m.spine.size()) return false;
            for (std::size_t i = 0; i < n.spine.size(); ++i) {
              if (!convert_frame(depth, n.spine[i], m.spine[i])) return false;
            }
            return true;
          },
          // Nullary canonical forms: equal tags suffice.
          [&](const auto&) { return true; },
      },
      a.node().v);
}

bool Evaluator::convert_frame(Level depth, const Frame& a, const Frame& b) {
  if (a.index() != b.index()) return false;
  return std::visit(
      overloaded{
          [&](const FApp& x) { return convert(depth, x.arg, std::get<FApp>(b).arg); },
          [&](const FFst&) { return true; },
          [&](const FSnd&) { return true; },
          [&](const FJ& x) {
            const auto& y = std::get<FJ>(b);
            return convert(depth, x.type, y.type) && convert(depth, x.base, y.base) &&
                   convert(depth, x.motive, y.motive) && convert(depth, x.kase, y.kase) &&
                   convert(depth, x.target, y.target);
          },
          [&](const FK& x) {
            const auto& y = std::get<FK>(b);
            return convert(depth, x.type, y.type) && convert(depth, x.base, y.base) &&
                   convert(depth, x.motive, y.motive) && convert(depth, x.kase, y.kase);
          },
          [&](const FAbsurd& x) { return convert(depth, x.motive, std::get<FAbsurd>(b).motive); },
          [&](const FNatElim& x) {
            const auto& y = std::get<FNatElim>(b);
            return convert(depth, x.motive, y.motive) && convert(depth, x.zcase, y.zcase) &&
                   convert(depth, x.scase, y.scase);
          },
      },
      a);
}

Term normalize(const Definitions& defs, const Env& env, const Term& t, Fuel& fuel) {
  Evaluator ev(defs, fuel);
  return ev.quote(static_cast<Level>(env.size()), ev.eval(env, t));
}

}  // namespace tinytt
