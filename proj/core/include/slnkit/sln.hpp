#pragma once

// Abstract syntax of SLN: equality, points-to, 0 and successor.

#include <memory>
#include <optional>
#include <string>

#include "slnkit/nat.hpp"

namespace slnkit::sln {

/// s^offset(base) where base is a variable or 0 (empty name).
struct Term {
  std::string var;
  Nat offset = 0;

  bool is_ground() const { return var.empty(); }
  Term shifted(Nat k) const { return Term{var, checked_add(offset, k)}; }
  friend bool operator==(const Term&, const Term&) = default;
};

inline Term var(std::string name, Nat offset = 0) { return Term{std::move(name), offset}; }
inline Term numeral(Nat n) { return Term{{}, n}; }
inline Term succ(const Term& t, Nat k = 1) { return t.shifted(k); }
/// The table offset [t] = s^3(t).
inline Term bracket(const Term& t) { return t.shifted(3); }

enum class Kind {
  Eq,
  PointsTo,
  Truth,  // internal only
  Not,
  And,
  Or,
  Exists,
  Forall,
  GuardedForall,  // forall x >= guard. body
  GuardedExists,  // exists x >= guard. body
};

struct FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

struct FormulaNode {
  Kind kind;
  Term lhs, rhs;
  bool truth = false;
  Formula a, b;
  std::string var;
  Nat guard = 0;

  bool is_atom() const { return kind == Kind::Eq || kind == Kind::PointsTo || kind == Kind::Truth; }
  bool is_binder() const {
    return kind == Kind::Exists || kind == Kind::Forall || kind == Kind::GuardedForall ||
           kind == Kind::GuardedExists;
  }
  bool is_universal() const { return kind == Kind::Forall || kind == Kind::GuardedForall; }
  /// Lower bound of the quantified variable (0 for unguarded binders).
  Nat lower() const { return (kind == Kind::GuardedForall || kind == Kind::GuardedExists) ? guard : 0; }
  const Formula& body() const { return a; }
};

Formula eq(Term l, Term r);
Formula points_to(Term addr, Term val);
Formula truth(bool value);
Formula neg(Formula f);
Formula conj(Formula l, Formula r);
Formula disj(Formula l, Formula r);
Formula implies(Formula l, Formula r);
Formula exists(std::string x, Formula body);
Formula forall(std::string x, Formula body);
Formula guarded_forall(std::string x, Nat from, Formula body);
Formula guarded_exists(std::string x, Nat from, Formula body);
/// Quantifier with the given universality and lower bound; guard 0 yields a plain binder.
Formula quantifier(bool universal, std::string x, Nat from, Formula body);
Formula rebind(const Formula& binder, std::string x, Formula body);

/// (t |-> v1, ..., vn) = t |-> v1 /\ s(t) |-> v2 /\ ... /\ s^{n-1}(t) |-> vn.
Formula row(const Term& addr, std::initializer_list<Term> values);

/// Unfolds guarded quantifiers into forall x (x = 0 \/ ... \/ x = m-1 \/ A)
/// and exists x (!(x = 0) /\ ... /\ !(x = m-1) /\ A).
Formula expand_guards(const Formula& f);

bool equal(const Formula& a, const Formula& b);

}  // namespace slnkit::sln
