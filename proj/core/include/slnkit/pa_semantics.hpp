#pragma once

// Evaluation in the standard model of arithmetic, and the table size bound
// max(sigma, A) for normal formulas.

#include "slnkit/assignment.hpp"
#include "slnkit/pa.hpp"

namespace slnkit {

Nat eval_term(const VarAssignment& sigma, const pa::Term& t);

/// Truth of A under sigma. Accepts bounded quantifiers and exists (x = t);
/// throws std::invalid_argument on unbounded forall / exists.
bool eval_bounded(const VarAssignment& sigma, const pa::Formula& f);

/// max(sigma, A) for prenex, DNF-bodied bounded formulas (exists (x = t)
/// allowed). Binder cases substitute the numeral of sigma(t) for x. For
/// exists (x = a * b) the values of a and b count as well, so that h_n holds
/// the multiplication row even when the product is 0.
Nat max_bound(const VarAssignment& sigma, const pa::Formula& f);

/// The recursion without operand values: exists (x = t) contributes sigma(t)
/// only. With a zero factor the table can miss the row, e.g. for
/// exists (z = y * 3) 3 = z at y = 0 the bound is 0 and h_0 satisfies the
/// translation.
Nat max_bound_displayed(const VarAssignment& sigma, const pa::Formula& f);

}  // namespace slnkit
