#include <gtest/gtest.h>

#include "oracles.hpp"
#include "slnkit/generators.hpp"
#include "slnkit/normalizer.hpp"
#include "slnkit/pa_semantics.hpp"
#include "slnkit/parser.hpp"
#include "slnkit/printer.hpp"
#include "slnkit/syntax.hpp"
#include "test_util.hpp"

using namespace slnkit;

namespace {

const char* kWorkedBox =
    "exists (x1 = x + s(x)) exists (x2 = x + x1) forall y <= x2. exists (x3 = x + y) exists (x4 = y * x3) "
    "exists (x5 = x + x4) 0 <= x5";

VarAssignment at_x(Nat n) { return VarAssignment{}.with("x", n); }

}  // namespace

TEST(Assignment, DefaultsToZero) {
  const VarAssignment sigma = VarAssignment::parse("x=2,y=0");
  EXPECT_EQ(sigma("x"), 2u);
  EXPECT_EQ(sigma("y"), 0u);
  EXPECT_EQ(sigma("z"), 0u);
}

TEST(Assignment, UpdateLaw) {
  const VarAssignment sigma = VarAssignment::parse("x=2,y=5");
  const VarAssignment tau = sigma.with("x", 7);
  EXPECT_EQ(tau("x"), 7u);
  EXPECT_EQ(tau("y"), 5u);
  EXPECT_EQ(sigma("x"), 2u);
}

TEST(Assignment, RejectsMalformed) {
  EXPECT_THROW(VarAssignment::parse("x=-1"), std::invalid_argument);
  EXPECT_THROW(VarAssignment::parse("x"), std::invalid_argument);
}

TEST(EvalTerm, Examples) {
  EXPECT_EQ(eval_term(at_x(2), parse_pa_term("x + s(x)")), 5u);
  EXPECT_EQ(eval_term(VarAssignment{}, parse_pa_term("s(s(s(0)))")), 3u);
  EXPECT_EQ(eval_term(at_x(1), parse_pa_term("x + (x + s(x))")), 4u);
}

TEST(EvalBounded, Examples) {
  EXPECT_FALSE(eval_bounded(at_x(1), parse_pa("x + x <= x")));
  EXPECT_TRUE(eval_bounded(at_x(0), parse_pa("forall y <= x + (x + s(x)). 0 <= x + (y * (x + y))")));
  for (Nat k = 0; k < 5; ++k) EXPECT_FALSE(eval_bounded(at_x(k), parse_pa("exists (z = x + 0) !(z = x)")));
}

TEST(EvalBounded, RejectsUnbounded) {
  EXPECT_THROW(eval_bounded(VarAssignment{}, parse_pa("forall x. x = x")), std::invalid_argument);
}

TEST(EvalBounded, AgreesWithExpansionOracle) {
  Generator gen(41);
  for (int i = 0; i < 500; ++i) {
    const pa::Formula f = gen.bounded_pa({"x", "y"});
    const VarAssignment sigma = gen.assignment({"x", "y"}, 3);
    ASSERT_EQ(eval_bounded(sigma, f), oracle::pa_formula(testutil::env_of(sigma), f)) << render(f);
  }
}

TEST(MaxBound, ClosedFormOfWorkedExample) {
  const pa::Formula a = parse_pa(kWorkedBox);
  for (Nat n = 0; n <= 3; ++n) {
    EXPECT_EQ(max_bound(at_x(n), a), n + (3 * n + 1) * (4 * n + 1)) << "x = " << n;
    EXPECT_EQ(max_bound_displayed(at_x(n), a), n + (3 * n + 1) * (4 * n + 1)) << "x = " << n;
  }
  EXPECT_EQ(max_bound(at_x(0), a), 1u);
  EXPECT_EQ(max_bound(at_x(1), a), 21u);
}

TEST(MaxBound, EqualityIsZero) {
  EXPECT_EQ(max_bound(VarAssignment{}, parse_pa("0 = 0")), 0u);
  EXPECT_EQ(max_bound(at_x(9), parse_pa("x = s(x)")), 0u);
}

TEST(MaxBound, LeqTakesBothSides) { EXPECT_EQ(max_bound(VarAssignment::parse("x=2,y=5"), parse_pa("x <= y")), 5u); }

TEST(MaxBound, ZeroProductCountsFactors) {
  const pa::Formula f = parse_pa("exists (z = y * s(s(s(0)))) s(s(s(0))) = z");
  EXPECT_EQ(max_bound_displayed(VarAssignment{}, f), 0u);
  EXPECT_EQ(max_bound(VarAssignment{}, f), 3u);
}

TEST(Normalize, WorkedExample) {
  const pa::Formula f = normalize_bounded(parse_pa("forall y <= x + (x + s(x)). 0 <= x + (y * (x + y))"));
  EXPECT_TRUE(is_normal(f));
  EXPECT_TRUE(alpha_equal(f, parse_pa(kWorkedBox))) << render(f);
}

TEST(Normalize, NoArithmeticIsPrenexDnf) {
  const pa::Formula f = parse_pa("forall y <= x. !(y <= x) \\/ y = x");
  EXPECT_TRUE(alpha_equal(normalize_bounded(f), parse_pa("forall y <= x. x <= y /\\ !(x = y) \\/ y = x")));
}

TEST(Normalize, SigmaBody) {
  EXPECT_TRUE(alpha_equal(normalize_bounded(parse_pa("!(x + 0 = x)")), parse_pa("exists (z = x + 0) !(z = x)")));
}

TEST(Normalize, RejectsUnbounded) {
  EXPECT_THROW(normalize_bounded(parse_pa("forall x. x = 0")), std::invalid_argument);
}

TEST(Normalize, StepsDecreaseArithmetic) {
  Generator gen(51);
  for (int i = 0; i < 100; ++i) {
    std::vector<pa::Formula> steps;
    normalize_bounded(gen.bounded_pa({"x", "y"}), &steps);
    for (std::size_t k = 1; k < steps.size(); ++k) ASSERT_LT(arith_count(steps[k]), arith_count(steps[k - 1]));
  }
}

TEST(Normalize, GeneratedFormulasAreNormalAndEquivalent) {
  Generator gen(52);
  for (int i = 0; i < 200; ++i) {
    const pa::Formula f = gen.bounded_pa({"x", "y"});
    const pa::Formula n = normalize_bounded(f);
    ASSERT_TRUE(is_normal(n)) << render(f) << " -> " << render(n);
    for (const VarAssignment& sigma : testutil::all_assignments({"x", "y"}, 3)) {
      const oracle::Env env = testutil::env_of(sigma);
      ASSERT_EQ(oracle::pa_formula(env, f), oracle::pa_formula(env, n)) << render(f) << " -> " << render(n);
    }
  }
}

TEST(Normalize, DefinitionsAreFlat) {
  Generator gen(53);
  for (int i = 0; i < 100; ++i) {
    pa::Formula f = normalize_bounded(gen.bounded_pa({"x"}));
    while (f->is_binder()) {
      if (f->kind == pa::Kind::ExistsEq) {
        ASSERT_TRUE(f->bound->kind == pa::TermKind::Plus || f->bound->kind == pa::TermKind::Times);
        EXPECT_FALSE(pa::has_arith(f->bound->lhs));
        EXPECT_FALSE(pa::has_arith(f->bound->rhs));
      } else {
        EXPECT_FALSE(pa::has_arith(f->bound));
      }
      f = f->a;
    }
  }
}

TEST(Box, WorkedExample) {
  const pa::Formula f = box_translate(parse_pa("forall x. forall y <= x + (x + s(x)). 0 <= x + (y * (x + y))"));
  ASSERT_EQ(f->kind, pa::Kind::Forall);
  EXPECT_TRUE(alpha_equal(f, pa::forall("x", parse_pa(kWorkedBox))));
}

TEST(Box, AlreadyNormal) {
  EXPECT_TRUE(alpha_equal(box_translate(parse_pa("forall x. x <= x")), parse_pa("forall x. x <= x")));
}

TEST(Box, RejectsNonPi01) { EXPECT_THROW(box_translate(parse_pa("exists x. x = 0")), std::invalid_argument); }
