#pragma once
// The table heap condition H, the operation-table formulas Add, Mult and
// Ineq, and the translation of normal PA formulas into SLN.

#include <array>

#include "slnkit/pa.hpp"
#include "slnkit/sln.hpp"

namespace slnkit {

/// H_Add1, H_Add2, H_Mult1, H_Mult2, H_Ineq1, H_Ineq2 in that order.
const std::array<sln::Formula, 6>& table_heap_conjuncts();
/// H, the left-nested conjunction of the six conjuncts. Shared instance.
const sln::Formula& table_heap_condition();

/// forall a ((a |-> 0, [x], [y]) => s^3(a) |-> [z])
sln::Formula add_formula(const sln::Term& x, const sln::Term& y, const sln::Term& z);
/// forall a ((a |-> 1, [x], [y]) => s^3(a) |-> [z])
sln::Formula mult_formula(const sln::Term& x, const sln::Term& y, const sln::Term& z);
/// exists a (a |-> 2, [x], [y])
sln::Formula ineq_formula(const sln::Term& x, const sln::Term& y);

/// PA term built from variables, 0 and s only. Throws std::invalid_argument on + or *.
sln::Term to_sln_term(const pa::Term& t);

/// The circle translation of forall x1 ... forall xk. B with B normal.
/// Throws std::invalid_argument when B is not normal.
sln::Formula circle_translate(const pa::Formula& f);

}  // namespace slnkit
