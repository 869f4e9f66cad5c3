#pragma once
// Seeded random generators for formulas, heaps, structures and assignments.
// Identical seeds and profiles give identical streams.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "slnkit/assignment.hpp"
#include "slnkit/fol.hpp"
#include "slnkit/fol_finite.hpp"
#include "slnkit/heap.hpp"
#include "slnkit/pa.hpp"
#include "slnkit/sln.hpp"

namespace slnkit {

struct GeneratorProfile {
  std::size_t depth = 3;            // connective and quantifier nesting of PA formulas
  Nat max_numeral = 3;              // numerals in PA and SLN formulas
  std::size_t quantifier_depth = 2; // SLN and relational formulas
  std::size_t max_heap_cells = 6;
  Nat max_heap_value = 8;
  Nat max_heap_address = 10;
  std::size_t max_universe = 4;
  Nat max_table = 2;                // tables used by the heap sampler

  static GeneratorProfile small() { return {}; }
};

class Generator {
 public:
  explicit Generator(std::uint64_t seed, GeneratorProfile profile = GeneratorProfile::small());

  const GeneratorProfile& profile() const { return profile_; }
  std::mt19937_64& engine() { return rng_; }

  /// Uniform in [lo, hi].
  Nat uniform(Nat lo, Nat hi);
  bool coin(double p = 0.5);

  /// PA term over the given variables; + and * only above depth 0.
  pa::Term pa_term(const std::vector<std::string>& vars, std::size_t depth);
  /// PA term built from variables, 0 and s only.
  pa::Term pa_flat_term(const std::vector<std::string>& vars);
  /// Formula whose quantifiers are all bounded, with free variables among `free`.
  pa::Formula bounded_pa(const std::vector<std::string>& free);
  /// forall x. B with B bounded and free variables among {x}.
  pa::Formula pi01();

  sln::Term sln_term(const std::vector<std::string>& vars);
  /// SLN formula with free variables among `free` and quantifier depth at
  /// most profile().quantifier_depth. Guarded quantifiers appear occasionally.
  sln::Formula sln_formula(const std::vector<std::string>& free);
  /// Closed successor-arithmetic sentence without points-to atoms.
  sln::Formula succ_sentence(std::size_t quantifier_depth, Nat max_numeral);

  fol::Formula fol_formula(const std::vector<std::string>& free);

  /// Sparse random heap within the profile caps.
  Heap random_heap();
  /// h_n with one cell changed or removed.
  Heap corrupted_table(Nat n);
  /// The first cells of h_n.
  Heap table_prefix(Nat n);
  /// Mixture of random heaps, corrupted tables and table prefixes.
  Heap sample_heap();

  FiniteStructure structure();
  VarAssignment assignment(const std::vector<std::string>& vars, Nat max_value);

 private:
  pa::Formula bounded_pa_rec(std::vector<std::string>& scope, std::size_t depth);
  sln::Formula sln_rec(std::vector<std::string>& scope, std::size_t qdepth, std::size_t size);
  sln::Formula succ_rec(std::vector<std::string>& scope, std::size_t qdepth, Nat max_numeral, std::size_t size);
  fol::Formula fol_rec(std::vector<std::string>& scope, std::size_t qdepth, std::size_t size);
  std::string fresh_binder(const std::vector<std::string>& scope, const char* pool);

  std::mt19937_64 rng_;
  GeneratorProfile profile_;
};

}  // namespace slnkit
