#include "slnkit/fol.hpp"

#include <algorithm>
#include <utility>

namespace slnkit::fol {

namespace {
Formula make(FormulaNode n) { return std::make_shared<const FormulaNode>(std::move(n)); }
}  // namespace

Formula eq(std::string x, std::string y) { return make({Kind::Eq, std::move(x), std::move(y), nullptr, nullptr}); }
Formula rel(std::string x, std::string y) { return make({Kind::Rel, std::move(x), std::move(y), nullptr, nullptr}); }
Formula neg(Formula f) { return make({Kind::Not, {}, {}, std::move(f), nullptr}); }
Formula conj(Formula l, Formula r) { return make({Kind::And, {}, {}, std::move(l), std::move(r)}); }
Formula exists(std::string x, Formula body) { return make({Kind::Exists, std::move(x), {}, std::move(body), nullptr}); }

Formula disj(Formula l, Formula r) { return neg(conj(neg(std::move(l)), neg(std::move(r)))); }
Formula implies(Formula l, Formula r) { return neg(conj(std::move(l), neg(std::move(r)))); }
Formula forall(std::string x, Formula body) { return neg(exists(std::move(x), neg(std::move(body)))); }

bool equal(const Formula& a, const Formula& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case Kind::Eq:
    case Kind::Rel: return a->x == b->x && a->y == b->y;
    case Kind::Not: return equal(a->a, b->a);
    case Kind::And: return equal(a->a, b->a) && equal(a->b, b->b);
    case Kind::Exists: return a->x == b->x && equal(a->a, b->a);
  }
  return false;
}

std::size_t quantifier_depth(const Formula& f) {
  switch (f->kind) {
    case Kind::Eq:
    case Kind::Rel: return 0;
    case Kind::Not: return quantifier_depth(f->a);
    case Kind::And: return std::max(quantifier_depth(f->a), quantifier_depth(f->b));
    case Kind::Exists: return 1 + quantifier_depth(f->a);
  }
  return 0;
}

}  // namespace slnkit::fol
