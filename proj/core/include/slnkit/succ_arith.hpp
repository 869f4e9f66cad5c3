#pragma once
// Quantifier elimination for successor arithmetic (N, 0, s, =) with guarded
// quantifiers.
//
// The elimination works on quantifier-free formulas in negation normal form
// over integer-indexed variables. Besides equations and disequations the
// literal set contains the guard literals x >= m and x < m, which keeps
// guards compact; both are expressible with (dis)equations against numerals.

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "slnkit/nat.hpp"
#include "slnkit/sln.hpp"

namespace slnkit::succ {

/// s^offset(x_var), or the numeral `offset` when var < 0.
struct Term {
  int var = -1;
  Nat offset = 0;

  bool is_ground() const { return var < 0; }
  friend bool operator==(const Term&, const Term&) = default;
};

inline Term ground(Nat n) { return Term{-1, n}; }
inline Term variable(int v, Nat offset = 0) { return Term{v, offset}; }

enum class LitKind { Eq, Neq, Ge, Lt };

/// Eq / Neq compare lhs with rhs; lhs always carries a variable. Ge / Lt
/// compare the variable lhs.var (offset 0) with `bound`.
struct Literal {
  LitKind kind = LitKind::Eq;
  Term lhs;
  Term rhs;
  Nat bound = 0;

  bool mentions(int v) const { return lhs.var == v || rhs.var == v; }
  friend bool operator==(const Literal&, const Literal&) = default;
};

enum class QfKind { True, False, Lit, And, Or };

struct QfNode;
using Qf = std::shared_ptr<const QfNode>;

struct QfNode {
  QfKind kind = QfKind::True;
  Literal lit;
  std::vector<Qf> kids;
};

Qf top();
Qf bottom();
Qf constant(bool value);
/// Smart constructors: ground comparisons evaluate immediately, literals are
/// kept in canonical orientation.
Qf eq(Term l, Term r);
Qf neq(Term l, Term r);
Qf ge(int v, Nat m);
Qf lt(int v, Nat m);
Qf conj(std::vector<Qf> parts);
Qf disj(std::vector<Qf> parts);
Qf conj(Qf l, Qf r);
Qf disj(Qf l, Qf r);
Qf negate(const Qf& f);

bool is_true(const Qf& f);
bool is_false(const Qf& f);
bool mentions(const Qf& f, int v);
std::size_t size(const Qf& f);

/// exists v >= guard. f, as an equivalent quantifier-free formula.
Qf eliminate_exists(int v, Nat guard, const Qf& f);
/// forall v >= guard. f, as an equivalent quantifier-free formula.
Qf eliminate_forall(int v, Nat guard, const Qf& f);

/// Truth of f when variable i takes values[i]. Throws std::out_of_range on
/// a variable without a value.
bool evaluate(const Qf& f, const std::vector<Nat>& values);

/// Conversion from quantifier-free SLN formulas without points-to atoms.
/// Variable names are resolved through `index`; an unknown name throws.
Qf from_sln(const sln::Formula& f, const std::function<int(const std::string&)>& index);
/// Conversion back to SLN; x >= m and x < m are spelled with numerals.
sln::Formula to_sln(const Qf& f, const std::function<std::string(int)>& name);

}  // namespace slnkit::succ

namespace slnkit {

using QeObserver = std::function<void(const sln::Formula&)>;

/// Replaces the leftmost innermost quantifier of f by its quantifier-free
/// equivalent. Returns f unchanged when it has no quantifier.
sln::Formula eliminate_innermost(const sln::Formula& f);

/// Truth over N of a closed SLN formula without points-to atoms. The
/// observer, when given, sees the sentence after every elimination step.
/// Throws std::invalid_argument on points-to atoms or free variables.
bool decide_sentence(const sln::Formula& f, const QeObserver& observer = {});

}  // namespace slnkit
