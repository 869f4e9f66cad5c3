// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "slnkit/fol_finite.hpp"
#include "slnkit/generators.hpp"
#include "slnkit/model_checker.hpp"
#include "slnkit/normalizer.hpp"
#include "slnkit/pa_semantics.hpp"
#include "slnkit/parser.hpp"
#include "slnkit/printer.hpp"
#include "slnkit/search.hpp"
#include "slnkit/succ_arith.hpp"
#include "slnkit/syntax.hpp"
#include "slnkit/translator.hpp"

using namespace slnkit;

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kSeed = 20240601;
constexpr double kTableConditionSeconds = 30.0;
constexpr double kSuiteSeconds = 600.0;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3fs", s);
  return buf;
}

std::string ratio(std::size_t a, std::size_t b) { return std::to_string(a) + "/" + std::to_string(b); }

std::string first_failure(const Report& r) { return r.failures.empty() ? "" : "; first failure: " + r.failures.front(); }

Outcome table_condition() {
  std::string detail;
  bool pass = true;
  for (Nat n = 0; n <= 4; ++n) {
    const auto start = Clock::now();
    const bool holds = check(VarAssignment{}.with("x", 0), simple_table_heap(n), table_heap_condition());
    const double t = since(start);
    pass = pass && holds && t < kTableConditionSeconds;
    detail += (n ? ", " : "") + std::string("h_") + std::to_string(n) + (holds ? " true " : " false ") + fmt_seconds(t);
  }
  return {pass, detail};
}

Outcome table_correctness() {
  const auto start = Clock::now();
  Generator gen(kSeed);
  std::vector<Heap> heaps;
  for (Nat n = 0; n <= 3; ++n) heaps.push_back(simple_table_heap(n));
  for (int i = 0; i < 200; ++i) heaps.push_back(gen.corrupted_table(gen.uniform(0, 3)));
  std::size_t satisfying = 0, violations = 0;
  for (const Heap& h : heaps) {
    if (!check(VarAssignment{}, h, table_heap_condition())) continue;
    ++satisfying;
    violations += table_row_violations(h).size();
  }

  const Heap h3 = simple_table_heap(3);
  const TableLayout layout = TableLayout::of(3);
  std::size_t corrupted = 0, rejected = 0;
  for (Nat row = 0; row < layout.add_rows; ++row) {
    const Nat cell = 4 * row + 3;
    ++corrupted;
    if (!check(VarAssignment{}, h3.with(cell, *h3.lookup(cell) + 1), table_heap_condition())) ++rejected;
  }
  const bool pass = violations == 0 && rejected == corrupted;
  return {pass, std::to_string(satisfying) + " of " + std::to_string(heaps.size()) +
                    " heaps satisfy H, " + std::to_string(violations) + " row violations; " + ratio(rejected, corrupted) +
                    " corrupted addition results of h_3 rejected; " + fmt_seconds(since(start))};
}

Outcome pa_to_table() {
  const Report r = verify_pa2hn_suite(kSeed, 100);
  const bool pass = r.instances == 100 && r.passed() && r.runtime_seconds < kSuiteSeconds;
  return {pass, ratio(r.agreements, r.instances) + " agree, " + fmt_seconds(r.runtime_seconds) + first_failure(r)};
}

Outcome table_to_all_heaps() {
  const Report r = verify_hn2forallh_suite(kSeed, 100, 50);
  const bool pass = r.instances > 0 && r.passed();
  return {pass, ratio(r.agreements, r.instances) + " heaps satisfy A-circle (" + r.notes.front() + "), " +
                    fmt_seconds(r.runtime_seconds) + first_failure(r)};
}

Outcome representation() {
  SearchLimits limits;
  limits.max_assign_value = 4;
  limits.heap_samples = 200;
  limits.table_sizes = {0, 1, 2, 3, 4};
  limits.seed = kSeed;
  const Report r = verify_representation_suite(limits);
  const bool pass = r.instances == 10 && r.passed();
  return {pass, ratio(r.agreements, r.instances) + " as expected, " + fmt_seconds(r.runtime_seconds) + first_failure(r)};
}

Outcome sigma01() {
  const Report r = verify_sigma01(kSeed, 100, 50);
  const bool pass = r.instances == 1 + 5 + 100 && r.passed();
  return {pass, ratio(r.agreements, r.instances) + " (no witness <= 50; empty, h_0..h_3, 100 samples), " +
                    fmt_seconds(r.runtime_seconds) + first_failure(r)};
}

Outcome checker_vs_oracle() {
  const auto start = Clock::now();
  Generator gen(kSeed);
  std::size_t agree = 0, stable = 0;
  std::string first;
  const std::size_t total = 300;
  for (std::size_t i = 0; i < total; ++i) {
    const sln::Formula f = gen.sln_formula({"x", "y"});
    const Heap h = gen.random_heap();
    const VarAssignment sigma = gen.assignment({"x", "y"}, 4);
    const oracle::Verdict v = oracle::sln_brute_force(sigma.support(), h, f);
    if (v.stable) ++stable;
    if (v.stable && v.value == check(sigma, h, f)) {
      ++agree;
    } else if (first.empty()) {
      first = "; first failure: " + render(f) + " at " + sigma.to_string();
    }
  }
  const double t = since(start);
  const bool pass = agree == total && stable == total && t < kSuiteSeconds;
  return {pass, ratio(agree, total) + " agree, " + ratio(stable, total) + " stable at 2B+7, " + fmt_seconds(t) + first};
}

Outcome successor_decider() {
  const auto start = Clock::now();
  Generator gen(kSeed);
  std::size_t agree = 0;
  std::string first;
  const std::size_t total = 500;
  for (std::size_t i = 0; i < total; ++i) {
    const sln::Formula f = gen.succ_sentence(3, 5);
    const oracle::Verdict v = oracle::sln_brute_force({}, Heap{}, f);
    if (v.stable && v.value == decide_sentence(f)) {
      ++agree;
    } else if (first.empty()) {
      first = "; first failure: " + render(f);
    }
  }
  return {agree == total, ratio(agree, total) + " agree, " + fmt_seconds(since(start)) + first};
}

Outcome finite_models() {
  const auto start = Clock::now();
  Generator gen(kSeed);
  std::size_t pairs = 0, agree = 0, round_trips = 0;
  while (pairs < 100) {
    const FiniteStructure m = gen.structure();
    if (m.universe.empty()) continue;
    const fol::Formula a = gen.fol_formula({"x", "y"});
    ++pairs;
    if (m.universe.size() > 4 || fol::quantifier_depth(a) > 2) continue;
    ModelChecker checker(encode_structure(m));
    const sln::Formula t = triangle_translate(a);
    const VarSet free = free_vars(a);
    std::vector<VarAssignment> sigmas{VarAssignment{}};
    for (const std::string& x : free) {
      std::vector<VarAssignment> next;
      for (const auto& s : sigmas) {
        for (Nat u : m.universe) next.push_back(s.with(x, u));
      }
      sigmas = std::move(next);
    }
    bool all = true;
    for (const auto& sigma : sigmas) all = all && eval_fol(m, sigma, a) == checker.check(sigma, t);
    if (all) ++agree;
  }
  for (int i = 0; i < 100; ++i) {
    const FiniteStructure m = gen.structure();
    if (m.universe.empty() || decode_heap(encode_structure(m)) == m) ++round_trips;
  }
  return {agree == 100 && round_trips == 100, ratio(agree, pairs) + " (M, A) pairs agree for all sigma, " +
                                                  ratio(round_trips, 100) + " round trips, " + fmt_seconds(since(start))};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  std::string s = out.str();
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

Outcome golden_files() {
  const std::string dir = SLNKIT_GOLDEN_DIR;
  const std::string box_text = read_file(dir + "/worked_box.pa");
  const std::string circle_text = read_file(dir + "/worked_circle.sln");
  if (box_text.empty() || circle_text.empty()) return {false, "golden files missing under " + dir};

  const pa::Formula source = parse_pa("forall x. forall y <= x + (x + s(x)). 0 <= x + (y * (x + y))");
  const pa::Formula boxed = box_translate(source);
  const bool box_ok = alpha_equal(boxed->a, parse_pa(box_text));
  const bool circle_ok = render(alpha_normalize(circle_translate(boxed->a))) == circle_text;
  bool max_ok = true;
  for (Nat x = 0; x <= 3; ++x) {
    max_ok = max_ok && max_bound(VarAssignment{}.with("x", x), boxed->a) == x + (3 * x + 1) * (4 * x + 1);
  }
  return {box_ok && circle_ok && max_ok, std::string("A-box ") + (box_ok ? "matches" : "differs") + ", A-circle " +
                                             (circle_ok ? "matches" : "differs") + ", max closed form " +
                                             (max_ok ? "matches" : "differs") + " at x = 0..3"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "table heap condition on h_0..h_4", table_condition},
      {2, "table correctness under H", table_correctness},
      {3, "PA truth equals h_n truth", pa_to_table},
      {4, "h_n truth implies all sampled heaps", table_to_all_heaps},
      {5, "representation theorem at desk scale", representation},
      {6, "Sigma01 boundary", sigma01},
      {7, "model checker against brute force", checker_vs_oracle},
      {8, "successor arithmetic decider", successor_decider},
      {9, "finite structure equivalence", finite_models},
      {10, "golden worked examples", golden_files},
  };
  std::printf("seed %llu\n", static_cast<unsigned long long>(kSeed));
  bool all = true;
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::printf("%s criterion %d: %s (%s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
