#pragma once

// Abstract syntax of Peano Arithmetic formulas.

#include <memory>
#include <string>

#include "slnkit/nat.hpp"

namespace slnkit::pa {

enum class TermKind { Var, Zero, Succ, Plus, Times };

struct TermNode;
using Term = std::shared_ptr<const TermNode>;

struct TermNode {
  TermKind kind;
  std::string name;  // Var
  Term lhs;          // Succ argument, or left operand
  Term rhs;          // right operand of Plus / Times
};

Term var(std::string name);
Term zero();
Term succ(Term t);
Term plus(Term l, Term r);
Term times(Term l, Term r);
/// s^n(0)
Term numeral(Nat n);
/// s^n(t)
Term succ_n(Term t, Nat n);

bool equal(const Term& a, const Term& b);
/// True if the term contains + or *.
bool has_arith(const Term& t);
bool occurs(const std::string& x, const Term& t);

enum class Kind {
  Eq,
  Leq,
  Not,
  And,
  Or,
  Exists,
  Forall,
  BoundedForall,  // forall x <= bound. body
  BoundedExists,  // exists x <= bound. body
  ExistsEq,       // exists (x = bound) body
};

struct FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

struct FormulaNode {
  Kind kind;
  Term lhs, rhs;        // atoms
  Formula a, b;         // Not uses a; And/Or use a,b; binders use a as body
  std::string var;      // binders
  Term bound;           // bounded quantifier bound, or ExistsEq definition

  bool is_atom() const { return kind == Kind::Eq || kind == Kind::Leq; }
  bool is_binder() const {
    return kind == Kind::Exists || kind == Kind::Forall || kind == Kind::BoundedForall ||
           kind == Kind::BoundedExists || kind == Kind::ExistsEq;
  }
  const Formula& body() const { return a; }
};

Formula eq(Term l, Term r);
Formula leq(Term l, Term r);
Formula neg(Formula f);
Formula conj(Formula l, Formula r);
Formula disj(Formula l, Formula r);
/// A => B, encoded as !A \/ B.
Formula implies(Formula l, Formula r);
Formula exists(std::string x, Formula body);
Formula forall(std::string x, Formula body);
/// Throws std::invalid_argument if x occurs in the bound.
Formula bounded_forall(std::string x, Term bound, Formula body);
Formula bounded_exists(std::string x, Term bound, Formula body);
Formula exists_eq(std::string x, Term def, Formula body);
/// Rebuilds a binder node of the same kind with new components.
Formula rebind(const Formula& binder, std::string x, Term bound, Formula body);

bool equal(const Formula& a, const Formula& b);

}  // namespace slnkit::pa
