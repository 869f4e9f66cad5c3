#pragma once
// Finite structures for the language with one binary predicate, their heap
// encodings, and the translation of that language into SLN.

#include <set>
#include <string>
#include <string_view>
#include <utility>

#include "slnkit/assignment.hpp"
#include "slnkit/fol.hpp"
#include "slnkit/heap.hpp"
#include "slnkit/sln.hpp"
#include "slnkit/syntax.hpp"

namespace slnkit {

/// (U, R) with U a finite set of naturals and R a binary relation.
struct FiniteStructure {
  std::set<Nat> universe;
  std::set<std::pair<Nat, Nat>> relation;

  /// Lines "U: n1 n2 ..." and "R: a b"; '#' starts a comment.
  static FiniteStructure parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const FiniteStructure&, const FiniteStructure&) = default;
};

VarSet free_vars(const fol::Formula& f);

/// M, sigma |= A with quantifiers ranging over U. Throws std::invalid_argument
/// when a free variable of A is mapped outside U.
bool eval_fol(const FiniteStructure& m, const VarAssignment& sigma, const fol::Formula& f);

/// h_M: universe rows (0, p+2) from address 0, then relation rows
/// (1, n+2, m+2), both in ascending element order.
Heap encode_structure(const FiniteStructure& m);

/// M_h, read off by scanning h. Throws std::invalid_argument when h has no
/// universe row.
FiniteStructure decode_heap(const Heap& h);

/// exists a (a |-> 0, s^2(x)): x is an element of the encoded universe.
sln::Formula membership_formula(const sln::Term& x);

sln::Formula triangle_translate(const fol::Formula& f);

/// exists a x (a |-> 0, s^2(x)) => (/\ over free x of membership) => A^triangle
sln::Formula finite_validity_premise(const fol::Formula& f);

}  // namespace slnkit
