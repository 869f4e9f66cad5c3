#pragma once

// Bounded PA formulas to normal form, and the box translation of Pi^0_1
// formulas built on top of it.

#include <vector>

#include "slnkit/pa.hpp"

namespace slnkit {

/// Normal form of a bounded formula: prenex with bounded binders, DNF matrix
/// without !(t <= u), and every + / * moved into an exists (z = a op b)
/// definition with flat operands. Throws std::invalid_argument on unbounded
/// quantifiers.
///
/// Extraction repeatedly takes the leftmost (preorder) of the innermost
/// + / * occurrences, replaces it by a fresh z, and inserts exists (z = u op v)
/// right before the first binder whose bound mentions z.
///
/// When `steps` is non-null it receives the formula after prenex/DNF and after
/// every extraction step.
pa::Formula normalize_bounded(const pa::Formula& f, std::vector<pa::Formula>* steps = nullptr);

/// forall x. B  |->  forall x. normalize_bounded(B). Throws std::invalid_argument
/// unless the input is Pi^0_1.
pa::Formula box_translate(const pa::Formula& f);

}  // namespace slnkit
