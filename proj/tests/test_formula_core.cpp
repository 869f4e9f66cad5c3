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

TEST(ParsePa, ForallWithSuccessor) {
  const pa::Formula f = parse_pa("forall x. x <= x + s(0)");
  const pa::Formula expected =
      pa::forall("x", pa::leq(pa::var("x"), pa::plus(pa::var("x"), pa::succ(pa::zero()))));
  EXPECT_TRUE(pa::equal(f, expected));
}

TEST(ParsePa, BoundedForallOfWorkedExample) {
  const pa::Formula f = parse_pa("forall y <= x + (x + s(x)). 0 <= x + (y * (x + y))");
  const pa::Term x = pa::var("x"), y = pa::var("y");
  const pa::Formula expected = pa::bounded_forall(
      "y", pa::plus(x, pa::plus(x, pa::succ(x))), pa::leq(pa::zero(), pa::plus(x, pa::times(y, pa::plus(x, y)))));
  EXPECT_TRUE(pa::equal(f, expected));
}

TEST(ParsePa, ExistsEq) {
  const pa::Formula f = parse_pa("exists (z = x + 0) !(z = x)");
  const pa::Formula expected = pa::exists_eq("z", pa::plus(pa::var("x"), pa::zero()),
                                             pa::neg(pa::eq(pa::var("z"), pa::var("x"))));
  EXPECT_TRUE(pa::equal(f, expected));
}

TEST(ParsePa, RejectsPointsTo) { EXPECT_THROW(parse_pa("x |-> y"), SyntaxError); }

TEST(ParsePa, SyntaxErrorCarriesPosition) {
  try {
    parse_pa("x = y /\\\n  <= z");
    FAIL() << "expected a syntax error";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
  }
}

TEST(ParsePa, ImplicationDesugars) {
  EXPECT_TRUE(pa::equal(parse_pa("x = 0 => y = 0"), parse_pa("!(x = 0) \\/ y = 0")));
}

TEST(ParsePa, Precedence) {
  EXPECT_TRUE(pa::equal(parse_pa("!x = 0 /\\ y = 0 \\/ z = 0"),
                        parse_pa("((!(x = 0)) /\\ y = 0) \\/ z = 0")));
}

TEST(ParseSln, ExampleWithSuccessors) {
  const sln::Formula f = parse_sln("forall x (x |-> s(y) \\/ x = s(z))");
  const sln::Formula expected = sln::forall(
      "x", sln::disj(sln::points_to(sln::var("x"), sln::var("y", 1)), sln::eq(sln::var("x"), sln::var("z", 1))));
  EXPECT_TRUE(sln::equal(f, expected));
}

TEST(ParseSln, NumeralValue) {
  const sln::Formula f = parse_sln("exists a (a |-> s(s(0)))");
  EXPECT_TRUE(sln::equal(f, sln::exists("a", sln::points_to(sln::var("a"), sln::numeral(2)))));
}

TEST(ParseSln, RejectsPlus) { EXPECT_THROW(parse_sln("x + y = z"), SyntaxError); }

TEST(ParseSln, RejectsBoundedQuantifier) { EXPECT_THROW(parse_sln("forall x <= y. x = y"), SyntaxError); }

TEST(Render, Forall) { EXPECT_EQ(render(pa::forall("x", pa::leq(pa::var("x"), pa::var("x")))), "forall x. x <= x"); }

TEST(Render, GuardedForall) {
  EXPECT_EQ(render(sln::guarded_forall("x", 3, sln::eq(sln::var("x"), sln::var("z", 1)))), "forall x >= 3. x = s(z)");
}

TEST(Render, TruthConstants) {
  EXPECT_EQ(render(sln::truth(true)), "0 = 0");
  EXPECT_EQ(render(sln::truth(false)), "!(0 = 0)");
}

TEST(Render, RoundTripPa) {
  Generator gen(11);
  for (int i = 0; i < 1000; ++i) {
    pa::Formula f = gen.bounded_pa({"x", "y"});
    if (i % 3 == 1) f = normalize_bounded(f);
    if (i % 5 == 2) f = pa::forall("x", f);
    if (i % 7 == 3) f = pa::exists("y", f);
    const pa::Formula back = parse_pa(render(f));
    ASSERT_TRUE(pa::equal(back, f)) << render(f);
  }
}

TEST(Render, RoundTripSln) {
  Generator gen(12);
  for (int i = 0; i < 1000; ++i) {
    const sln::Formula f = gen.sln_formula({"x", "y"});
    const sln::Formula back = parse_sln(render(f));
    ASSERT_TRUE(sln::equal(back, f)) << render(f);
  }
}

TEST(Render, RoundTripFol) {
  Generator gen(13);
  for (int i = 0; i < 1000; ++i) {
    const fol::Formula f = gen.fol_formula({"x"});
    ASSERT_TRUE(fol::equal(parse_fol(render(f)), f)) << render(f);
  }
}

TEST(Substitute, Simple) {
  const pa::Formula f = substitute(parse_pa("x <= y"), "x", pa::succ(pa::zero()));
  EXPECT_TRUE(pa::equal(f, parse_pa("s(0) <= y")));
}

TEST(Substitute, AvoidsCapture) {
  const pa::Formula f = substitute(parse_pa("exists y. x = y"), "x", pa::succ(pa::var("y")));
  ASSERT_EQ(f->kind, pa::Kind::Exists);
  EXPECT_NE(f->var, "y");
  EXPECT_TRUE(pa::equal(f->a, pa::eq(pa::succ(pa::var("y")), pa::var(f->var))));
  EXPECT_EQ(free_vars(f), VarSet({"y"}));
}

TEST(Substitute, NotFreeLeavesFormula) {
  const pa::Formula f = parse_pa("forall x <= y. x = y");
  EXPECT_TRUE(alpha_equal(substitute(f, "x", pa::var("z")), f));
}

TEST(Substitute, SlnAvoidsCapture) {
  const sln::Formula f = substitute(parse_sln("exists y. x |-> y"), "x", sln::var("y", 2));
  ASSERT_EQ(f->kind, sln::Kind::Exists);
  EXPECT_NE(f->var, "y");
  EXPECT_EQ(free_vars(f), VarSet({"y"}));
}

TEST(Substitute, LemmaOnGeneratedFormulas) {
  Generator gen(21);
  for (int i = 0; i < 200; ++i) {
    const pa::Formula f = gen.bounded_pa({"x", "y"});
    const pa::Term t = gen.pa_term({"x", "y"}, 2);
    const pa::Formula g = substitute(f, "x", t);
    for (const VarAssignment& sigma : testutil::all_assignments({"x", "y"}, 3)) {
      const Nat v = oracle::pa_term(testutil::env_of(sigma), t);
      ASSERT_EQ(eval_bounded(sigma, g), eval_bounded(sigma.with("x", v), f)) << render(f) << " [x := " << render(t)
                                                                                << "]";
    }
  }
}

TEST(FreeVars, Examples) {
  EXPECT_EQ(free_vars(parse_pa("forall x. x <= y")), VarSet({"y"}));
  EXPECT_EQ(free_vars(parse_pa("exists (z = x + 0) !(z = x)")), VarSet({"x"}));
  EXPECT_TRUE(free_vars(parse_pa("forall x. exists y. x = y")).empty());
  EXPECT_EQ(free_vars(parse_sln("forall x >= 2. x |-> y")), VarSet({"y"}));
}

TEST(Prenex, NegatedBoundedExists) {
  const pa::Formula f = to_prenex(parse_pa("!(exists x <= t. x = y)"));
  EXPECT_TRUE(alpha_equal(f, parse_pa("forall x <= t. !(x = y)")));
}

TEST(Prenex, AlreadyPrenexUnchanged) {
  const pa::Formula f = parse_pa("forall x <= y. exists z <= x. z = x /\\ x <= y");
  EXPECT_TRUE(alpha_equal(to_prenex(f), f));
}

TEST(Prenex, PreservesTruth) {
  Generator gen(31);
  for (int i = 0; i < 300; ++i) {
    const pa::Formula f = gen.bounded_pa({"x", "y"});
    const pa::Formula p = to_prenex(f);
    pa::Formula body = p;
    while (body->is_binder()) body = body->a;
    ASSERT_TRUE(is_quantifier_free(body)) << render(p);
    for (const VarAssignment& sigma : testutil::all_assignments({"x", "y"}, 3)) {
      ASSERT_EQ(oracle::pa_formula(testutil::env_of(sigma), f), oracle::pa_formula(testutil::env_of(sigma), p))
          << render(f) << " vs " << render(p);
    }
  }
}

TEST(Dnf, NegatedLeq) { EXPECT_TRUE(pa::equal(to_dnf(parse_pa("!(t <= u)")), parse_pa("u <= t /\\ !(u = t)"))); }

TEST(Dnf, Distributes) {
  EXPECT_TRUE(pa::equal(to_dnf(parse_pa("a = 0 /\\ (b = 0 \\/ c = 0)")),
                        parse_pa("a = 0 /\\ b = 0 \\/ a = 0 /\\ c = 0")));
}

TEST(Dnf, PreservesTruth) {
  Generator gen(32);
  int checked = 0;
  while (checked < 300) {
    pa::Formula f = gen.bounded_pa({"x", "y"});
    if (!is_quantifier_free(f)) continue;
    ++checked;
    const pa::Formula d = to_dnf(f);
    ASSERT_TRUE(is_dnf(d)) << render(d);
    for (const VarAssignment& sigma : testutil::all_assignments({"x", "y"}, 3)) {
      ASSERT_EQ(eval_bounded(sigma, f), eval_bounded(sigma, d)) << render(f) << " vs " << render(d);
    }
  }
}

TEST(Classes, IsBounded) {
  EXPECT_TRUE(is_bounded(parse_pa("forall x <= y. x <= y")));
  EXPECT_FALSE(is_bounded(parse_pa("forall x. x <= y")));
  EXPECT_FALSE(is_bounded(parse_pa("exists (z = x + 0) !(z = x)")));
}

TEST(Classes, IsPi01) {
  EXPECT_TRUE(is_pi01(parse_pa("forall x. forall y <= x. y <= x")));
  EXPECT_FALSE(is_pi01(parse_pa("exists x. x = 0")));
  EXPECT_FALSE(is_pi01(parse_pa("forall x. exists y. y = x")));
}

TEST(Classes, IsNormal) {
  EXPECT_TRUE(is_normal(parse_pa("exists (x1 = x + s(x)) exists (x2 = x + x1) forall y <= x2. exists (x3 = x + y) "
                                 "exists (x4 = y * x3) exists (x5 = x + x4) 0 <= x5")));
  EXPECT_FALSE(is_normal(parse_pa("exists (z = (x + y) + w) z = z")));
  EXPECT_FALSE(is_normal(parse_pa("forall x <= y + z. x <= y")));
  EXPECT_FALSE(is_normal(parse_pa("!(x <= y)")));
  EXPECT_FALSE(is_normal(parse_pa("x + y = z")));
}

TEST(Unfold, ExpandsBoundedQuantifiers) {
  EXPECT_TRUE(alpha_equal(unfold(parse_pa("forall x <= y. x = 0")), parse_pa("forall x. !(x <= y) \\/ x = 0")));
  EXPECT_TRUE(alpha_equal(unfold(parse_pa("exists (x = y + 0) x = 0")), parse_pa("exists x. x = y + 0 /\\ x = 0")));
}

TEST(Guards, ExpansionPreservesTruth) {
  const sln::Formula f = parse_sln("forall x >= 3. x = s(z)");
  const sln::Formula e = expand_guards(f);
  EXPECT_FALSE(has_points_to(e));
  for (Nat z = 0; z < 8; ++z) {
    const oracle::Env env{{"z", z}};
    EXPECT_EQ(oracle::sln_bounded(env, Heap{}, f, 20), oracle::sln_bounded(env, Heap{}, e, 20));
  }
}

TEST(Alpha, EqualUpToBoundNames) {
  EXPECT_TRUE(alpha_equal(parse_pa("forall a <= y. a = y"), parse_pa("forall b <= y. b = y")));
  EXPECT_FALSE(alpha_equal(parse_pa("forall a <= y. a = y"), parse_pa("forall b <= z. b = z")));
  EXPECT_TRUE(alpha_equal(parse_sln("exists a. a |-> 0"), parse_sln("exists q. q |-> 0")));
}

TEST(Generators, BoundedProfileIsBounded) {
  Generator gen(5);
  for (int i = 0; i < 200; ++i) EXPECT_TRUE(is_bounded(gen.bounded_pa({"x"})));
  for (int i = 0; i < 50; ++i) EXPECT_TRUE(is_pi01(gen.pi01()));
}

TEST(Generators, Deterministic) {
  Generator a(7), b(7);
  for (int i = 0; i < 50; ++i) {
    EXPECT_EQ(render(a.bounded_pa({"x"})), render(b.bounded_pa({"x"})));
    EXPECT_EQ(render(a.sln_formula({"x"})), render(b.sln_formula({"x"})));
    EXPECT_EQ(a.sample_heap(), b.sample_heap());
    EXPECT_EQ(a.structure(), b.structure());
  }
}

TEST(Generators, HeapCaps) {
  Generator gen(9);
  const GeneratorProfile& p = gen.profile();
  for (int i = 0; i < 200; ++i) {
    const Heap h = gen.random_heap();
    EXPECT_LE(h.size(), p.max_heap_cells);
    for (const auto& [a, v] : h.cells()) {
      EXPECT_LE(a, p.max_heap_address);
      EXPECT_LE(v, p.max_heap_value);
    }
  }
}
