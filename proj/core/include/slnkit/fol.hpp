#pragma once

// Formulas of the first-order language with one binary predicate P and no
// function symbols: x = y | P(x, y) | !A | A /\ B | exists x. A.

#include <memory>
#include <string>

namespace slnkit::fol {

enum class Kind { Eq, Rel, Not, And, Exists };

struct FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

struct FormulaNode {
  Kind kind;
  std::string x, y;  // atom arguments, or the bound variable in x
  Formula a, b;
};

Formula eq(std::string x, std::string y);
Formula rel(std::string x, std::string y);
Formula neg(Formula f);
Formula conj(Formula l, Formula r);
Formula exists(std::string x, Formula body);

// Derived connectives, expressed through the primitive ones.
Formula disj(Formula l, Formula r);
Formula implies(Formula l, Formula r);
Formula forall(std::string x, Formula body);

bool equal(const Formula& a, const Formula& b);
std::size_t quantifier_depth(const Formula& f);

}  // namespace slnkit::fol
