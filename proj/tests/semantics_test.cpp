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

#include <gtest/gtest.h>

#include <vector>

#include "support/generators.hpp"
#include "support/reference.hpp"
#include "support/test_support.hpp"
#include "tinytt/eval.hpp"
#include "tinytt/pretty.hpp"

namespace tinytt {
namespace {

using testing::load_corpus;
using testing::paradox_flags;
using testing::parse_term;

const Signature& russell() {
  static const Signature sig = load_corpus("russell.tt", paradox_flags());
  return sig;
}

Term nf(const Term& t, const Definitions& defs = NoDefinitions(), std::uint64_t fuel = 10'000) {
  Fuel f(fuel);
  return normalize(defs, {}, t, f);
}

TEST(EvalTest, Beta) {
  Fuel fuel(100);
  Evaluator ev(NoDefinitions(), fuel);
  Value v = ev.eval({}, mk::app(mk::lambda("x", mk::var(0)), mk::tt()));
  EXPECT_TRUE(v.is<VTT>());
  EXPECT_EQ(fuel.used(), 1u);
}

TEST(EvalTest, Projection) {
  Fuel fuel(100);
  Evaluator ev(NoDefinitions(), fuel);
  EXPECT_TRUE(ev.eval({}, mk::fst(mk::pair(mk::zero(), mk::tt()))).is<VZero>());
  EXPECT_TRUE(ev.eval({}, mk::snd(mk::pair(mk::zero(), mk::tt()))).is<VTT>());
}

TEST(EvalTest, CoeOnReflIsIdentity) {
  Fuel fuel(1000);
  Evaluator ev(russell(), fuel);
  EXPECT_TRUE(ev.eval({}, parse_term("coe U U refl Nat", russell())).is<VNat>());

  // With a free element: coe U U refl a evaluates to a itself.
  Value a = fresh_var(0);
  Value v = ev.eval({a}, parse_term("coe U U refl a", russell(), {"a"}));
  const auto* n = v.as<VNeutral>();
  ASSERT_NE(n, nullptr);
  EXPECT_EQ(n->head, 0u);
  EXPECT_TRUE(n->spine.empty());
}

TEST(EvalTest, NatElimComputes) {
  // natElim (fun _ => Nat) 3 (fun m ih => succ ih) 2 = 5
  Term add = mk::nat_elim(mk::lambda("_", mk::nat()), mk::numeral(3),
                          mk::lambda("m", mk::lambda("ih", mk::succ(mk::var(0)))), mk::numeral(2));
  EXPECT_TRUE(alpha_equal(nf(add), mk::numeral(5)));
}

TEST(EvalTest, EliminatorsOnNeutralsAreStuck) {
  Fuel fuel(100);
  Evaluator ev(NoDefinitions(), fuel);
  Env env{fresh_var(0)};
  Term absurd = mk::absurd(mk::lambda("_", mk::nat()), mk::var(0));
  EXPECT_TRUE(alpha_equal(ev.quote(1, ev.eval(env, absurd)), absurd));
  Term rec = mk::nat_elim(mk::lambda("_", mk::nat()), mk::zero(),
                          mk::lambda("m", mk::lambda("ih", mk::var(0))), mk::var(0));
  EXPECT_TRUE(alpha_equal(ev.quote(1, ev.eval(env, rec)), rec));
}

TEST(EvalTest, FalsumExhaustsEveryBudget) {
  const Term falsum = mk::global("falsum");
  for (std::uint64_t budget : {1ull, 10ull, 1000ull, 100'000ull}) {
    Fuel fuel(budget);
    Evaluator ev(russell(), fuel);
    try {
      ev.eval({}, falsum);
      FAIL() << "falsum normalized with budget " << budget;
    } catch (const FuelExhausted& e) {
      EXPECT_EQ(e.steps(), budget);
      EXPECT_EQ(fuel.used(), budget);
      EXPECT_EQ(fuel.remaining(), 0u);
    }
  }
}

// The reduction of falsum revisits a state (under the independent
// call-by-value reducer), so it has no normal form under any strategy that
// agrees with it; the cycle passes through lemma1 applied to lemma2's value.
TEST(EvalTest, FalsumReductionCycles) {
  auto cycle = testing::reference::find_cycle(mk::global("falsum"), russell(), 500);
  ASSERT_TRUE(cycle.has_value());
  EXPECT_GT(cycle->period, 1u);
  ASSERT_EQ(cycle->state.kind(), TermKind::App);
  const Term& arg = cycle->state[1];
  ASSERT_EQ(arg.kind(), TermKind::Pair);
  EXPECT_EQ(arg[0].kind(), TermKind::Refl);
  // The function position and the pair's second component are both the
  // unfolded body of lemma1.
  const Term* lemma1 = russell().definition("lemma1");
  ASSERT_NE(lemma1, nullptr);
  EXPECT_TRUE(alpha_equal(arg[1], *lemma1));
  EXPECT_TRUE(alpha_equal(cycle->state[0], *lemma1));
}

TEST(QuoteTest, Canonical) {
  Fuel fuel(10);
  Evaluator ev(NoDefinitions(), fuel);
  EXPECT_TRUE(alpha_equal(ev.quote(0, Value::make(VTT{})), mk::tt()));
}

TEST(QuoteTest, StuckCoeReadsBackAsJ) {
  Fuel fuel(1000);
  Evaluator ev(russell(), fuel);
  Term t = parse_term("coe U Nat p zero", russell(), {"p"});
  Term q = ev.quote(1, ev.eval({fresh_var(0)}, t));
  // J U U (fun B' _ => U -> B') (fun x => x) Nat p applied to zero
  Term motive = mk::lambda("B'", mk::lambda("_", mk::pi("_", mk::universe(), mk::var(2))));
  Term expected = mk::app(mk::elim_j(mk::universe(), mk::universe(), motive,
                                     mk::lambda("x", mk::var(0)), mk::nat(), mk::var(0)),
                          mk::zero());
  EXPECT_TRUE(alpha_equal(q, expected)) << pretty(q, {"p"});
}

TEST(QuoteTest, MembershipTypeUnfolds) {
  Term q = nf(parse_term("elem V R R", russell()), russell());
  ASSERT_EQ(q.kind(), TermKind::Sigma);
  Term id_vv = nf(parse_term("Id U V V", russell()), russell());
  EXPECT_TRUE(alpha_equal(q[0], id_vv)) << pretty(q[0]);
  // V unfolds to its definition on both sides.
  Term v_def = mk::sigma("A", mk::universe(), mk::arrow(mk::var(0), mk::universe()));
  EXPECT_TRUE(alpha_equal(id_vv, mk::id(mk::universe(), v_def, v_def)));
}

TEST(ConvertTest, AlphaEquivalentLambdas) {
  Fuel fuel(100);
  Evaluator ev(NoDefinitions(), fuel);
  Value a = ev.eval({}, mk::lambda("x", mk::var(0)));
  Value b = ev.eval({}, mk::lambda("y", mk::var(0)));
  EXPECT_TRUE(ev.convert(0, a, b));
}

TEST(ConvertTest, FunctionEta) {
  Fuel fuel(100);
  Evaluator ev(NoDefinitions(), fuel);
  Value f = fresh_var(0);
  Value eta = ev.eval({f}, mk::lambda("x", mk::app(mk::var(1), mk::var(0))));
  EXPECT_TRUE(ev.convert(1, f, eta));
  EXPECT_TRUE(ev.convert(1, eta, f));
}

TEST(ConvertTest, NoPairEta) {
  Fuel fuel(100);
  Evaluator ev(NoDefinitions(), fuel);
  Value p = fresh_var(0);
  Value eta = ev.eval({p}, mk::pair(mk::fst(mk::var(0)), mk::snd(mk::var(0))));
  EXPECT_FALSE(ev.convert(1, p, eta));
}

TEST(ConvertTest, CoeAlongReflIsDefinitional) {
  Fuel fuel(10'000);
  Evaluator ev(russell(), fuel);
  Value coerced = ev.eval({}, parse_term("coe V V refl R", russell()));
  Value r = ev.eval({}, mk::global("R"));
  EXPECT_TRUE(ev.convert(0, coerced, r));
}

TEST(ConvertTest, DistinguishesUniverseLevels) {
  Fuel fuel(10);
  Evaluator ev(NoDefinitions(), fuel);
  EXPECT_FALSE(ev.convert(0, Value::make(VUniverse{0}), Value::make(VUniverse{1})));
  EXPECT_TRUE(ev.convert(0, Value::make(VUniverse{1}), Value::make(VUniverse{1})));
}

TEST(NormalizeTest, ProjectionOfRussellPair) {
  Term t = parse_term("fst (V , fun x => elem V x x -> Empty)", russell());
  Term v_def = mk::sigma("A", mk::universe(), mk::arrow(mk::var(0), mk::universe()));
  EXPECT_TRUE(alpha_equal(nf(t, russell()), v_def));
}

TEST(NormalizeTest, CanonicalNumeral) {
  EXPECT_TRUE(alpha_equal(nf(mk::numeral(2)), mk::succ(mk::succ(mk::zero()))));
}

TEST(NormalizeTest, FalsumHasNoNormalForm) {
  EXPECT_THROW(nf(mk::global("falsum"), russell(), 1'000'000), FuelExhausted);
}

TEST(NormalizeTest, UnderBinders) {
  // fun x => (fun y => y) x  ~>  fun x => x
  Term t = mk::lambda("x", mk::app(mk::lambda("y", mk::var(0)), mk::var(0)));
  EXPECT_TRUE(alpha_equal(nf(t), mk::lambda("x", mk::var(0))));
}

// Property: NbE agrees with the substitution-based reference reducer on
// closed first-order terms.
TEST(NormalizeProperty, AgreesWithReferenceReducer) {
  testing::TermGen gen(2024);
  for (int i = 0; i < 200; ++i) {
    Term t = i % 2 == 0 ? gen.nat(5, 0, true) : gen.unit(5);
    auto ref = testing::reference::reduce(t, NoDefinitions(), 100'000);
    ASSERT_TRUE(ref.finished);
    EXPECT_TRUE(alpha_equal(nf(t), ref.term)) << pretty(t);
  }
}

// Property: normalize is idempotent.
TEST(NormalizeProperty, Idempotent) {
  testing::TermGen gen(99);
  for (int i = 0; i < 150; ++i) {
    Term t = gen.nat(5, 2, true);
    Fuel f1(10'000), f2(10'000);
    Env env{fresh_var(0), fresh_var(1)};
    Term once = normalize(NoDefinitions(), env, t, f1);
    Term twice = normalize(NoDefinitions(), env, once, f2);
    EXPECT_TRUE(alpha_equal(once, twice)) << pretty(t, {"a", "b"});
  }
  for (const auto& e : russell().entries()) {
    if (e.name == "falsum") continue;
    Term once = nf(e.body, russell(), 100'000);
    EXPECT_TRUE(alpha_equal(nf(once, russell(), 100'000), once)) << e.name;
  }
}

// Property: a budget that suffices once suffices for every larger budget and
// yields the identical term; one step less is not enough.
TEST(NormalizeProperty, FuelMonotonicity) {
  testing::TermGen gen(5);
  for (int i = 0; i < 100; ++i) {
    Term t = gen.nat(5, 0, true);
    Fuel probe(100'000);
    Term expected = normalize(NoDefinitions(), {}, t, probe);
    const std::uint64_t needed = probe.used();
    for (std::uint64_t budget : {needed, needed + 1, needed * 2 + 7}) {
      if (budget == 0) continue;
      Fuel f(budget);
      EXPECT_TRUE(alpha_equal(normalize(NoDefinitions(), {}, t, f), expected));
    }
    if (needed > 0) {
      Fuel short_fuel(needed - 1);
      EXPECT_THROW(normalize(NoDefinitions(), {}, t, short_fuel), FuelExhausted);
    }
  }
}

// Property: convert is an equivalence and coincides with equality of
// normal forms on closed numerals.
TEST(ConvertProperty, EquivalenceOnGeneratedValues) {
  testing::TermGen gen(31);
  std::vector<Term> terms;
  for (int i = 0; i < 40; ++i) terms.push_back(gen.nat(4));
  Fuel fuel(1'000'000);
  Evaluator ev(NoDefinitions(), fuel);
  std::vector<Value> vals;
  std::vector<Term> nfs;
  for (const Term& t : terms) {
    vals.push_back(ev.eval({}, t));
    nfs.push_back(ev.quote(0, vals.back()));
  }
  for (std::size_t a = 0; a < vals.size(); ++a) {
    EXPECT_TRUE(ev.convert(0, vals[a], vals[a]));
    for (std::size_t b = 0; b < vals.size(); ++b) {
      const bool ab = ev.convert(0, vals[a], vals[b]);
      EXPECT_EQ(ab, ev.convert(0, vals[b], vals[a]));
      EXPECT_EQ(ab, alpha_equal(nfs[a], nfs[b]));
      if (!ab) continue;
      for (std::size_t c = 0; c < vals.size(); ++c) {
        if (ev.convert(0, vals[b], vals[c])) EXPECT_TRUE(ev.convert(0, vals[a], vals[c]));
      }
    }
  }
}

// Property: every signature entry is definitionally equal to its body.
TEST(ConvertProperty, GlobalTransparency) {
  for (const auto& e : russell().entries()) {
    if (e.name == "falsum") continue;  // both sides diverge
    Fuel fuel(100'000);
    Evaluator ev(russell(), fuel);
    EXPECT_TRUE(ev.convert(0, ev.eval({}, mk::global(e.name)), ev.eval({}, e.body))) << e.name;
  }
}

}  // namespace
}  // namespace tinytt
