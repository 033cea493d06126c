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

#include <string>

#include "support/generators.hpp"
#include "support/test_support.hpp"
#include "tinytt/kernel.hpp"
#include "tinytt/pretty.hpp"

namespace tinytt {
namespace {

using testing::error_code_of;
using testing::load;
using testing::load_corpus;
using testing::paradox_flags;
using testing::parse_term;

constexpr FlagSet kStrict{false, false, 100'000};
constexpr FlagSet kStrictK{false, true, 100'000};
constexpr FlagSet kTypeInType{true, false, 100'000};

const Signature& russell() {
  static const Signature sig = load_corpus("russell.tt", paradox_flags());
  return sig;
}

const Signature& sets() {
  static const Signature sig = load_corpus("sets.tt", paradox_flags());
  return sig;
}

struct Session {
  Session(const Signature& sig, FlagSet flags) : fuel(flags.fuel), tc(sig, flags, fuel) {}
  Fuel fuel;
  TypeChecker tc;
};

Declaration decl(const Signature& sig, const std::string& name, const std::string& type,
                 const std::string& body) {
  return Declaration{name, parse_term(type, sig), parse_term(body, sig), {}, {}};
}

TEST(InferTest, UniverseUnderTypeInType) {
  Session s({}, kTypeInType);
  Value t = s.tc.infer({}, mk::universe());
  ASSERT_TRUE(t.is<VUniverse>());
  EXPECT_EQ(t.as<VUniverse>()->level, 0u);
}

TEST(InferTest, UniverseStrict) {
  Session s({}, kStrict);
  Value t = s.tc.infer({}, mk::universe());
  ASSERT_TRUE(t.is<VUniverse>());
  EXPECT_EQ(t.as<VUniverse>()->level, 1u);
}

TEST(InferTest, StrictFormationLevels) {
  Session s({}, kStrict);
  EXPECT_EQ(s.tc.infer_universe({}, parse_term("Nat -> Nat")), 0u);
  EXPECT_EQ(s.tc.infer_universe({}, parse_term("(A : U) -> A -> A")), 1u);
  EXPECT_EQ(s.tc.infer_universe({}, parse_term("Id U Nat Nat")), 1u);
  EXPECT_EQ(s.tc.infer_universe({}, parse_term("Id Nat zero zero")), 0u);
  EXPECT_EQ(s.tc.infer_universe({}, parse_term("Nat * Unit")), 0u);
}

TEST(InferTest, DependentSecondProjection) {
  const Signature& sig = russell();
  Session s(sig, paradox_flags());
  Term h_type = parse_term(
      "(h : Id U V V) * (elem V (coe V V h R) (coe V V h R) -> Empty)", sig);
  Context ctx = Context().extend("H", s.tc.eval({}, h_type));
  Value inferred = s.tc.infer(ctx, mk::snd(mk::var(0)));
  Value expected = s.tc.eval(
      ctx, parse_term("elem V (coe V V (fst H) R) (coe V V (fst H) R) -> Empty", sig, {"H"}));
  EXPECT_TRUE(s.tc.evaluator().convert(1, inferred, expected));
  // The instantiation really mentions fst H, not a fresh variable.
  Value wrong = s.tc.eval(ctx, parse_term("elem V R R -> Empty", sig, {"H"}));
  EXPECT_FALSE(s.tc.evaluator().convert(1, inferred, wrong));
}

TEST(InferTest, ErrorsForUninferableForms) {
  Session s({}, kStrict);
  for (const char* src : {"fun x => x", "(zero , tt)", "refl"}) {
    EXPECT_EQ(error_code_of([&] { s.tc.infer({}, parse_term(src)); }), ErrorCode::CannotInfer)
        << src;
  }
}

TEST(InferTest, NotAFunctionAndNotAPair) {
  Session s({}, kStrict);
  EXPECT_EQ(error_code_of([&] { s.tc.infer({}, parse_term("zero zero")); }),
            ErrorCode::NotAFunction);
  EXPECT_EQ(error_code_of([&] { s.tc.infer({}, parse_term("fst zero")); }),
            ErrorCode::NotAPairType);
}

TEST(CheckTest, RussellMembershipWitness) {
  const Signature& sig = russell();
  Session s(sig, paradox_flags());
  Value expected = s.tc.eval({}, parse_term("elem V R R", sig));
  EXPECT_NO_THROW(s.tc.check({}, parse_term("(refl , lemma1)", sig), expected));
}

TEST(CheckTest, ReflEndpointsDiffer) {
  Session s({}, kStrict);
  Value expected = s.tc.eval({}, parse_term("Id Nat zero (succ zero)"));
  EXPECT_EQ(error_code_of([&] { s.tc.check({}, mk::refl(), expected); }),
            ErrorCode::ReflEndpointsDiffer);
}

TEST(CheckTest, ZeroIsANaturalNumber) {
  const Signature& sig = sets();
  Session s(sig, paradox_flags());
  Value expected = s.tc.eval({}, parse_term("elem Nat zero NatSet", sig));
  EXPECT_NO_THROW(s.tc.check({}, parse_term("(refl , tt)", sig), expected));
}

TEST(CheckTest, MismatchPrintsBothTypes) {
  Session s({}, kStrict);
  try {
    s.tc.check({}, mk::tt(), Value::make(VNat{}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TypeMismatch);
    ASSERT_EQ(e.diagnostic().notes.size(), 2u);
    EXPECT_EQ(e.diagnostic().notes[0], "expected: Nat");
    EXPECT_EQ(e.diagnostic().notes[1], "found:    Unit");
  }
}

TEST(CheckTest, MismatchNotesFitInEightyColumns) {
  const Signature& sig = russell();
  Session s(sig, paradox_flags());
  try {
    s.tc.check({}, mk::zero(), s.tc.eval({}, parse_term("elem V R R", sig)));
    FAIL();
  } catch (const Error& e) {
    for (const auto& note : e.diagnostic().notes) EXPECT_LE(note.size() + 2, 80u) << note;
  }
}

TEST(CheckTest, MotivesMayLandInAnyUniverseWhenStrict) {
  Signature sig = load(
      "def pick : (A : U) -> Id U A Nat -> U := fun A h => J U A (fun B _ => U) Nat Nat h;",
      kStrict);
  EXPECT_TRUE(sig.contains("pick"));
}

TEST(CheckTest, MotiveMayBeAGlobal) {
  Signature sig = load(
      "def P : Nat -> U := fun n => Nat;\n"
      "def three : Nat := natElim P zero (fun m ih => succ ih) (succ (succ (succ zero)));",
      kStrict);
  Fuel fuel(1000);
  EXPECT_TRUE(alpha_equal(normalize(sig, {}, mk::global("three"), fuel), mk::numeral(3)));
}

TEST(CheckTest, MotiveWithWrongDomainIsRejected) {
  EXPECT_EQ(error_code_of([] {
              load("def P : Unit -> U := fun n => Nat;\n"
                   "def bad : Nat := natElim P zero (fun m ih => ih) zero;",
                   kStrict);
            }),
            ErrorCode::TypeMismatch);
}

TEST(CheckDeclarationTest, TypeOfSetsUnderTypeInType) {
  Signature sig =
      check_declaration({}, decl({}, "V", "U", "(A : U) * (A -> U)"), kTypeInType);
  ASSERT_TRUE(sig.contains("V"));
  EXPECT_EQ(sig.entries().size(), 1u);
}

TEST(CheckDeclarationTest, TypeOfSetsStrict) {
  try {
    check_declaration({}, decl({}, "V", "U", "(A : U) * (A -> U)"), kStrict);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UniverseInconsistency);
    EXPECT_EQ(e.diagnostic().message,
              "universe inconsistency: type lives in U1 but is annotated U0");
  }
}

TEST(CheckDeclarationTest, Duplicate) {
  Signature sig =
      check_declaration({}, decl({}, "V", "U", "(A : U) * (A -> U)"), kTypeInType);
  EXPECT_EQ(error_code_of([&] {
              check_declaration(sig, decl(sig, "V", "U", "Nat"), kTypeInType);
            }),
            ErrorCode::DuplicateDefinition);
}

TEST(CheckDeclarationTest, UniverseInUniverseStrict) {
  EXPECT_EQ(error_code_of([] { check_declaration({}, decl({}, "T", "U", "U"), kStrict); }),
            ErrorCode::UniverseInconsistency);
  EXPECT_NO_THROW(check_declaration({}, decl({}, "T", "U", "U"), kTypeInType));
}

TEST(CheckDeclarationTest, TypeMustBeAType) {
  EXPECT_EQ(error_code_of([] { check_declaration({}, decl({}, "x", "zero", "zero"), kStrict); }),
            ErrorCode::NotAType);
}

TEST(CheckDeclarationTest, KDisabledRegardlessOfOtherErrors) {
  // The body is ill-typed before K is reached, but K is still what is reported.
  const char* body = "tt (K Nat zero (fun _ => Nat) zero refl)";
  for (FlagSet flags : {kStrict, kTypeInType}) {
    EXPECT_EQ(error_code_of([&] { check_declaration({}, decl({}, "k", "Nat", body), flags); }),
              ErrorCode::KDisabled);
  }
  EXPECT_EQ(error_code_of([&] { check_declaration({}, decl({}, "k", "Nat", body), kStrictK); }),
            ErrorCode::NotAFunction);
  EXPECT_NO_THROW(check_declaration(
      {}, decl({}, "k", "Nat", "K Nat zero (fun _ => Nat) zero refl"), kStrictK));
}

TEST(CheckDeclarationTest, FuelExhaustionDuringChecking) {
  FlagSet flags = paradox_flags(50);
  EXPECT_EQ(error_code_of([&] { load_corpus("russell.tt", flags); }), ErrorCode::FuelExhausted);
}

TEST(CheckDeclarationTest, ErrorsAtWholeBodyUseTheName) {
  Declaration d = decl({}, "x", "Nat", "tt");
  d.name_span = Span{1, 1, 5, 1, 6};
  try {
    check_declaration({}, d, kStrict);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.diagnostic().span, d.name_span);
  }
}

// Property: whatever infers also checks against its inferred type.
TEST(BidirectionalProperty, InferThenCheck) {
  testing::TermGen gen(17);
  for (int i = 0; i < 200; ++i) {
    Term t = gen.nat(5, 0, true);
    Session s({}, kStrictK);
    Value ty = s.tc.infer({}, t);
    EXPECT_TRUE(ty.is<VNat>());
    EXPECT_NO_THROW(s.tc.check({}, t, ty)) << pretty(t);
  }
  for (const auto& e : russell().entries()) {
    Session s(russell(), paradox_flags());
    Value ty = s.tc.infer({}, mk::global(e.name));
    EXPECT_NO_THROW(s.tc.check({}, mk::global(e.name), ty)) << e.name;
  }
}

// Property: normal forms of checked corpus bodies still check against the
// declared type.
TEST(TypePreservationProperty, CorpusNormalForms) {
  struct Case {
    const char* file;
    FlagSet flags;
  };
  for (const Case& c : {Case{"prelude.tt", kStrictK}, Case{"sets.tt", paradox_flags()},
                        Case{"russell.tt", paradox_flags()}}) {
    Signature sig = load_corpus(c.file, c.flags);
    for (const auto& e : sig.entries()) {
      Fuel fuel(100'000);
      Term body;
      try {
        body = normalize(sig, {}, e.body, fuel);
      } catch (const FuelExhausted&) {
        EXPECT_EQ(e.name, "falsum");
        continue;
      }
      Session s(sig, c.flags);
      EXPECT_NO_THROW(s.tc.check({}, body, e.type_value)) << c.file << ": " << e.name << " = "
                                                           << pretty(body);
    }
  }
}

}  // namespace
}  // namespace tinytt
