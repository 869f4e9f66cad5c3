#pragma once
// Model checking sigma, h |= A for SLN formulas.
//
// A quantifier whose variable occurs as an address of a points-to atom only
// needs the values 0..M with M = max Dom(h) enumerated explicitly; above M
// every such atom is false. Values work the same way with
// M' = max { h(a) | a in Dom(h) }. What remains is successor arithmetic,
// which is decided by quantifier elimination.

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "slnkit/assignment.hpp"
#include "slnkit/heap.hpp"
#include "slnkit/sln.hpp"

namespace slnkit {

/// Largest heap address or value; nullopt for the empty heap.
using HeapBound = std::optional<Nat>;

/// Decides sigma, h |= A. Enumeration and elimination are interleaved per
/// quantifier, and results of closed subformulas are cached for the heap.
class ModelChecker {
 public:
  explicit ModelChecker(Heap heap);
  ~ModelChecker();
  ModelChecker(const ModelChecker&) = delete;
  ModelChecker& operator=(const ModelChecker&) = delete;

  bool check(const VarAssignment& sigma, const sln::Formula& f);
  const Heap& heap() const { return heap_; }

 private:
  struct Impl;
  Heap heap_;
  std::unique_ptr<Impl> impl_;
};

bool check(const VarAssignment& sigma, const Heap& h, const sln::Formula& f);

/// For (Q x >= g. A): the instances A[x:=g..M] joined by Q's connective, and a
/// final (Q x >= max(g, M+1). B) where B replaces every points-to atom whose
/// address mentions x by false. Binders whose variable is never an address
/// come back unchanged. Throws std::invalid_argument when f is not a binder.
sln::Formula address_free_rewrite(const sln::Formula& f, HeapBound max_address);
/// As address_free_rewrite, for points-to atoms whose value mentions x.
sln::Formula value_free_rewrite(const sln::Formula& f, HeapBound max_value);
/// Replaces closed points-to atoms by their truth value in h. Throws
/// std::invalid_argument on a points-to atom with a variable.
sln::Formula ground_points_to_eval(const Heap& h, const sln::Formula& f);

class StagedBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultStagedBudget = 200'000;

/// Observer for the stages of check_staged: "ground", "prenex",
/// "address-free", "prenex-again", "value-free", "heap-free".
using StageObserver = std::function<void(const std::string& stage, const sln::Formula&)>;

/// The literal rewriting pipeline: substitute sigma, prenex, address-free
/// rewrites innermost first, prenex again, value-free rewrites, evaluate the
/// closed points-to atoms, decide the successor arithmetic sentence. Both
/// prenex stages first merge same-guard universals under a conjunction and
/// existentials under a disjunction. The formula grows with the heap bounds
/// and exponentially in the binders created by address-free expansion; a
/// stage above `node_budget` nodes throws StagedBudgetExceeded.
bool check_staged(const VarAssignment& sigma, const Heap& h, const sln::Formula& f,
                  const StageObserver& observer = {}, std::size_t node_budget = kDefaultStagedBudget);

}  // namespace slnkit
