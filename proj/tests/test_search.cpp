#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "slnkit/generators.hpp"
#include "slnkit/model_checker.hpp"
#include "slnkit/normalizer.hpp"
#include "slnkit/pa_semantics.hpp"
#include "slnkit/parser.hpp"
#include "slnkit/printer.hpp"
#include "slnkit/search.hpp"
#include "slnkit/syntax.hpp"
#include "slnkit/translator.hpp"

using namespace slnkit;

namespace {

const char* kWorkedBody = "forall y <= x + (x + s(x)). 0 <= x + (y * (x + y))";

SearchLimits small_limits() {
  SearchLimits limits;
  limits.heap_samples = 20;
  limits.table_sizes = {0, 1, 2};
  return limits;
}

}  // namespace

TEST(Counterexample, RevalidatesOnConstruction) {
  const sln::Formula f = parse_sln("0 |-> 0");
  EXPECT_NO_THROW(Counterexample(VarAssignment{}, Heap{}, f, false));
  EXPECT_THROW(Counterexample(VarAssignment{}, Heap{}, f, true), std::logic_error);
}

TEST(Search, FindsDirectedCounterexample) {
  const sln::Formula f = circle_translate(box_translate(parse_pa("forall x. x <= 0")));
  const auto found = bounded_counterexample_search(f, small_limits());
  ASSERT_TRUE(found.has_value());
  EXPECT_EQ(found->assignment()("x"), 1u);
  EXPECT_EQ(found->heap(), simple_table_heap(1));
  EXPECT_FALSE(check(found->assignment(), found->heap(), found->formula()));
}

TEST(Search, NoneForValidFormulas) {
  EXPECT_FALSE(bounded_counterexample_search(circle_translate(box_translate(parse_pa("forall x. 0 <= x"))),
                                             small_limits()));
  EXPECT_FALSE(bounded_counterexample_search(parse_sln("0 = 0"), small_limits()));
}

TEST(Search, FreeVariables) {
  const auto found = bounded_counterexample_search(parse_sln("!(x = s(s(0)))"), small_limits());
  ASSERT_TRUE(found);
  EXPECT_EQ(found->assignment()("x"), 2u);
  EXPECT_TRUE(found->heap().empty());
}

TEST(Search, DeterministicAndParallelSafe) {
  const sln::Formula f = parse_sln("forall a. !(a |-> s(s(s(s(0)))))");
  SearchLimits limits = small_limits();
  const auto one = bounded_counterexample_search(f, limits);
  limits.jobs = 4;
  const auto four = bounded_counterexample_search(f, limits);
  ASSERT_TRUE(one && four);
  EXPECT_EQ(one->heap(), four->heap());
  EXPECT_EQ(one->assignment(), four->assignment());
  EXPECT_EQ(search_heaps(limits), search_heaps(limits));
}

TEST(Pa2Hn, Examples) {
  const pa::Formula body = normalize_bounded(parse_pa(kWorkedBody));
  const Pa2HnResult r = verify_pa2hn(body, VarAssignment{}.with("x", 0));
  EXPECT_EQ(r.n, 1u);
  EXPECT_TRUE(r.pa_verdict);
  EXPECT_TRUE(r.sln_verdict);

  const Pa2HnResult q = verify_pa2hn(parse_pa("x <= 0"), VarAssignment{}.with("x", 1));
  EXPECT_EQ(q.n, 1u);
  EXPECT_FALSE(q.pa_verdict);
  EXPECT_FALSE(q.sln_verdict);

  const Pa2HnResult t = verify_pa2hn(parse_pa("0 = 0"), VarAssignment{}.with("x", 3));
  EXPECT_EQ(t.n, 0u);
  EXPECT_TRUE(t.agree());
  EXPECT_TRUE(t.pa_verdict);
}

TEST(Pa2Hn, RejectsNonNormal) {
  EXPECT_THROW(verify_pa2hn(parse_pa("x + 0 = x"), VarAssignment{}), std::invalid_argument);
}

TEST(Pa2Hn, ZeroProductNeedsFactorRows) {
  const pa::Formula f = parse_pa("exists (z = y * s(s(s(0)))) s(s(s(0))) = z");
  const VarAssignment sigma;
  EXPECT_FALSE(eval_bounded(sigma, f));
  EXPECT_TRUE(check(sigma, simple_table_heap(max_bound_displayed(sigma, f)), circle_translate(f)));
  EXPECT_TRUE(verify_pa2hn(f, sigma).agree());
}

TEST(Hn2ForallH, Examples) {
  const pa::Formula body = normalize_bounded(parse_pa(kWorkedBody));
  const Hn2ForallHResult r = verify_hn2forallh(body, VarAssignment{}.with("x", 0), 50, 1);
  EXPECT_TRUE(r.precondition);
  EXPECT_TRUE(r.failures.empty());
  EXPECT_GE(r.heaps_checked, 50u);

  const Hn2ForallHResult t = verify_hn2forallh(parse_pa("0 = 0"), VarAssignment{}, 20, 2);
  EXPECT_TRUE(t.precondition);
  EXPECT_TRUE(t.failures.empty());

  const Hn2ForallHResult u = verify_hn2forallh(parse_pa("x <= 0"), VarAssignment{}.with("x", 1), 20, 3);
  EXPECT_FALSE(u.precondition);
  EXPECT_EQ(u.heaps_checked, 0u);
}

TEST(Representation, Examples) {
  const SearchLimits limits = small_limits();
  EXPECT_TRUE(verify_representation(parse_pa("forall x. forall y <= x. y <= x"), true, 0, limits).as_expected);
  EXPECT_TRUE(verify_representation(parse_pa("forall x. x <= x"), true, 0, limits).as_expected);
  const RepresentationResult r = verify_representation(parse_pa("forall x. x + x <= x"), false, 1, limits);
  EXPECT_TRUE(r.as_expected);
  ASSERT_TRUE(r.counterexample);
  EXPECT_EQ(r.counterexample->heap(), simple_table_heap(r.n));
  EXPECT_FALSE(r.counterexample->verdict());
}

TEST(Sigma01, TranslationHoldsOnTables) {
  const sln::Formula f = sigma01_translation();
  EXPECT_TRUE(free_vars(f).empty());
  EXPECT_TRUE(check(VarAssignment{}, Heap{}, f));
  EXPECT_TRUE(check(VarAssignment{}, simple_table_heap(2), f));
  const Report r = verify_sigma01(5, 10);
  EXPECT_TRUE(r.passed()) << r.to_json();
  EXPECT_EQ(r.instances, 1u + 5u + 10u);
}

TEST(Report, JsonFields) {
  Report r;
  r.lemma = "fol";
  r.instances = 2;
  r.agreements = 1;
  r.failures.push_back("x");
  r.seed = 9;
  const auto j = nlohmann::json::parse(r.to_json());
  for (const char* key : {"lemma", "instances", "agreements", "failures", "seed", "runtime"}) EXPECT_TRUE(j.contains(key));
  EXPECT_FALSE(r.passed());
}

TEST(Suites, SmallRunsPass) {
  EXPECT_TRUE(verify_pa2hn_suite(3, 10).passed());
  EXPECT_TRUE(verify_hn2forallh_suite(3, 10, 10).passed());
  EXPECT_TRUE(verify_fol_suite(3, 20).passed());
}

TEST(Suites, NormalInstancesStayWithinTable) {
  Generator gen(4);
  for (int i = 0; i < 50; ++i) {
    const auto [f, sigma] = sample_normal_instance(gen, 2, 4);
    EXPECT_TRUE(is_normal(f));
    EXPECT_LE(max_bound(sigma, f), 4u);
    for (const auto& [x, v] : sigma.support()) EXPECT_LE(v, 2u);
  }
}

TEST(TableScan, DetectsWrongRows) {
  EXPECT_TRUE(table_row_violations(simple_table_heap(2)).empty());
  EXPECT_EQ(table_row_violations(Heap({{0, 0}, {1, 4}, {2, 4}, {3, 6}})).size(), 1u);
  EXPECT_EQ(table_row_violations(Heap({{0, 1}, {1, 5}, {2, 5}, {3, 8}})).size(), 1u);
  EXPECT_EQ(table_row_violations(Heap({{0, 2}, {1, 5}, {2, 4}})).size(), 1u);
}
