#pragma once

// Syntax-level operations shared by the PA and SLN front ends: variables,
// capture-free substitution, renaming, prenex and disjunctive normal forms,
// and the syntactic class predicates.

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "slnkit/pa.hpp"
#include "slnkit/sln.hpp"

namespace slnkit {

using VarSet = std::set<std::string>;

/// Deterministic fresh-name source. Names have the form "base#k" with k
/// counting up from 1 and skipping anything already reserved.
class FreshNames {
 public:
  FreshNames() = default;
  explicit FreshNames(VarSet reserved) : used_(std::move(reserved)) {}

  void reserve(const std::string& name) { used_.insert(name); }
  void reserve(const VarSet& names) { used_.insert(names.begin(), names.end()); }
  bool is_used(const std::string& name) const { return used_.count(name) != 0; }

  /// Returns an unused name derived from base and reserves it.
  std::string next(const std::string& base);

 private:
  VarSet used_;
  std::size_t counter_ = 0;
};

/// Strips a "#k" suffix produced by FreshNames.
std::string base_name(const std::string& name);

// ---------------------------------------------------------------- PA ----

VarSet free_vars(const pa::Term& t);
VarSet free_vars(const pa::Formula& f);
/// Every variable name mentioned anywhere, bound or free.
VarSet all_vars(const pa::Formula& f);

pa::Term substitute(const pa::Term& t, const std::string& x, const pa::Term& by);
/// Capture-free A[x:=t]; renames binders through `fresh` when capture would occur.
pa::Formula substitute(const pa::Formula& f, const std::string& x, const pa::Term& by, FreshNames& fresh);
pa::Formula substitute(const pa::Formula& f, const std::string& x, const pa::Term& by);

/// Replaces bounded quantifiers and exists(x = t) by their unbounded readings.
pa::Formula unfold(const pa::Formula& f);

/// Renames binders so that no bound name is free anywhere in f or bound twice.
pa::Formula rename_apart(const pa::Formula& f, FreshNames& fresh);

/// Negation normal form: negation only on atoms. Bounded binders are dualised.
pa::Formula to_nnf(const pa::Formula& f);

/// Prenex normal form; bounded binders stay bounded.
pa::Formula to_prenex(const pa::Formula& f);
pa::Formula to_prenex(const pa::Formula& f, FreshNames& fresh);

/// Disjunctive normal form of a quantifier-free formula. Literals !(t <= u)
/// are rewritten to u <= t /\ !(u = t).
pa::Formula to_dnf(const pa::Formula& f);

/// Cubes of to_dnf as literal lists.
std::vector<std::vector<pa::Formula>> dnf_cubes(const pa::Formula& f);

bool is_quantifier_free(const pa::Formula& f);
/// Every quantifier is forall x <= t or exists x <= t.
bool is_bounded(const pa::Formula& f);
/// Evaluable by eval_bounded: no unbounded forall/exists.
bool is_evaluable(const pa::Formula& f);
bool is_pi01(const pa::Formula& f);
bool is_dnf(const pa::Formula& f);
bool is_normal(const pa::Formula& f);
/// Number of + and * nodes outside the top operation of exists (x = t) definitions.
std::size_t arith_count(const pa::Formula& f);

/// Renames all binders to canonical names in binding order. Two formulas are
/// alpha-equivalent iff their alpha_normalize images are structurally equal.
pa::Formula alpha_normalize(const pa::Formula& f);
bool alpha_equal(const pa::Formula& a, const pa::Formula& b);

// --------------------------------------------------------------- SLN ----

VarSet free_vars(const sln::Formula& f);
VarSet all_vars(const sln::Formula& f);

sln::Term substitute(const sln::Term& t, const std::string& x, const sln::Term& by);
sln::Formula substitute(const sln::Formula& f, const std::string& x, const sln::Term& by, FreshNames& fresh);
sln::Formula substitute(const sln::Formula& f, const std::string& x, const sln::Term& by);

sln::Formula rename_apart(const sln::Formula& f, FreshNames& fresh);
sln::Formula to_nnf(const sln::Formula& f);
/// Prenex normal form; guarded binders are pulled out with their guards.
sln::Formula to_prenex(const sln::Formula& f);
sln::Formula to_prenex(const sln::Formula& f, FreshNames& fresh);

bool is_quantifier_free(const sln::Formula& f);
bool is_prenex(const sln::Formula& f);
bool has_points_to(const sln::Formula& f);
/// Largest numeral offset, guard, or successor depth appearing in f.
Nat max_numeral(const sln::Formula& f);
std::size_t quantifier_count(const sln::Formula& f);

sln::Formula alpha_normalize(const sln::Formula& f);
bool alpha_equal(const sln::Formula& a, const sln::Formula& b);

}  // namespace slnkit
