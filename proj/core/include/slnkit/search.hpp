#pragma once
// Bounded counterexample search and the lemma verification drivers.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slnkit/assignment.hpp"
#include "slnkit/heap.hpp"
#include "slnkit/pa.hpp"
#include "slnkit/sln.hpp"

namespace slnkit {

class Generator;

/// A pair (sigma, h) with its verdict on a formula. Construction re-runs the
/// model checker and throws std::logic_error on disagreement.
class Counterexample {
 public:
  Counterexample(VarAssignment assignment, Heap heap, sln::Formula formula, bool verdict);

  const VarAssignment& assignment() const { return assignment_; }
  const Heap& heap() const { return heap_; }
  const sln::Formula& formula() const { return formula_; }
  bool verdict() const { return verdict_; }

 private:
  VarAssignment assignment_;
  Heap heap_;
  sln::Formula formula_;
  bool verdict_;
};

struct SearchLimits {
  Nat max_assign_value = 4;
  std::size_t heap_samples = 200;
  std::vector<Nat> table_sizes{0, 1, 2, 3, 4};
  std::uint64_t seed = 1;
  unsigned jobs = 1;
};

/// Heaps in search order: empty, the tables, then the seeded samples.
std::vector<Heap> search_heaps(const SearchLimits& limits);

/// First (h, sigma) in enumeration order with sigma, h |/= A. Heaps follow
/// search_heaps; assignments range over the free variables of A with values
/// up to max_assign_value. A leading forall prefix is treated like free
/// variables when looking for a witness assignment; if none is found within
/// the limits, the closed counterexample is reported instead.
std::optional<Counterexample> bounded_counterexample_search(const sln::Formula& f, const SearchLimits& limits);

/// Machine-readable outcome of a verification run.
struct Report {
  std::string lemma;
  std::size_t instances = 0;
  std::size_t agreements = 0;
  std::vector<std::string> failures;
  std::uint64_t seed = 0;
  double runtime_seconds = 0;
  std::vector<std::string> notes;

  bool passed() const { return failures.empty() && agreements == instances; }
  std::string to_json() const;
};

struct Pa2HnResult {
  Nat n = 0;
  bool pa_verdict = false;
  bool sln_verdict = false;
  double seconds = 0;
  bool agree() const { return pa_verdict == sln_verdict; }
};

/// n = max(sigma, A); compares eval_bounded(sigma, A) with
/// check(sigma, h_n, A^circle). Throws TableBudgetExceeded for large n.
Pa2HnResult verify_pa2hn(const pa::Formula& normal, const VarAssignment& sigma);

struct Hn2ForallHResult {
  Nat n = 0;
  bool precondition = false;  // sigma, h_n |= A^circle
  std::size_t heaps_checked = 0;
  std::vector<Heap> failures;
};

/// Checks A^circle on the empty heap, h_0..h_n and `samples` sampled heaps,
/// provided it holds on h_n.
Hn2ForallHResult verify_hn2forallh(const pa::Formula& normal, const VarAssignment& sigma, std::size_t samples,
                                   std::uint64_t seed);

struct RepresentationResult {
  bool expected_valid = true;
  bool as_expected = false;
  Nat n = 0;  // table used for the directed counterexample
  std::optional<Counterexample> counterexample;
};

/// For a valid Pi^0_1 formula: no counterexample for A^box-circle within the
/// limits. For an invalid one with witness k: sigma[x:=k], h_n falsifies the
/// translated body, where n = max(sigma[x:=k], body of A^box).
RepresentationResult verify_representation(const pa::Formula& pi01, bool valid, Nat witness,
                                           const SearchLimits& limits);

/// exists x (H => exists z (Add(x, 0, z) /\ !(z = x))): the translation of
/// exists x. x + 0 != x, which has no arithmetic witness.
sln::Formula sigma01_translation();

// Suites over generated instances; each returns a report.
Report verify_pa2hn_suite(std::uint64_t seed, std::size_t samples, Nat max_sigma = 2, Nat max_table = 4);
Report verify_hn2forallh_suite(std::uint64_t seed, std::size_t samples, std::size_t heaps_per_formula = 50,
                               Nat max_table = 4);
Report verify_representation_suite(const SearchLimits& limits);
Report verify_sigma01(std::uint64_t seed, std::size_t random_heaps = 100, Nat max_witness = 50);
Report verify_fol_suite(std::uint64_t seed, std::size_t samples);

/// A normal formula sampled from the generator whose table h_n for the
/// chosen sigma stays within max_table. Returns the formula and sigma.
std::pair<pa::Formula, VarAssignment> sample_normal_instance(Generator& gen, Nat max_sigma, Nat max_table);

/// Violations of the table lemma by direct scan: rows (0, n+3, k+3) without
/// n+k+3 next, rows (1, n+3, k+3) without n*k+3 next, rows (2, n+3, k+3)
/// with n > k.
std::vector<std::string> table_row_violations(const Heap& h);

}  // namespace slnkit
