#include "slnkit/pa_semantics.hpp"

#include <algorithm>
#include <stdexcept>

namespace slnkit {

using pa::Kind;
using pa::TermKind;

Nat eval_term(const VarAssignment& sigma, const pa::Term& t) {
  switch (t->kind) {
    case TermKind::Var: return sigma(t->name);
    case TermKind::Zero: return 0;
    case TermKind::Succ: return checked_add(eval_term(sigma, t->lhs), 1);
    case TermKind::Plus: return checked_add(eval_term(sigma, t->lhs), eval_term(sigma, t->rhs));
    case TermKind::Times: return checked_mul(eval_term(sigma, t->lhs), eval_term(sigma, t->rhs));
  }
  throw std::logic_error("unknown term kind");
}

bool eval_bounded(const VarAssignment& sigma, const pa::Formula& f) {
  switch (f->kind) {
    case Kind::Eq: return eval_term(sigma, f->lhs) == eval_term(sigma, f->rhs);
    case Kind::Leq: return eval_term(sigma, f->lhs) <= eval_term(sigma, f->rhs);
    case Kind::Not: return !eval_bounded(sigma, f->a);
    case Kind::And: return eval_bounded(sigma, f->a) && eval_bounded(sigma, f->b);
    case Kind::Or: return eval_bounded(sigma, f->a) || eval_bounded(sigma, f->b);
    case Kind::Exists:
    case Kind::Forall:
      throw std::invalid_argument("eval_bounded: unbounded quantifier over " + f->var + " cannot be evaluated");
    case Kind::BoundedForall: {
      const Nat bound = eval_term(sigma, f->bound);
      for (Nat k = 0; k <= bound; ++k) {
        if (!eval_bounded(sigma.with(f->var, k), f->a)) return false;
      }
      return true;
    }
    case Kind::BoundedExists: {
      const Nat bound = eval_term(sigma, f->bound);
      for (Nat k = 0; k <= bound; ++k) {
        if (eval_bounded(sigma.with(f->var, k), f->a)) return true;
      }
      return false;
    }
    case Kind::ExistsEq: return eval_bounded(sigma.with(f->var, eval_term(sigma, f->bound)), f->a);
  }
  throw std::logic_error("unknown formula kind");
}

namespace {

Nat max_bound_impl(const VarAssignment& sigma, const pa::Formula& f, bool operands) {
  switch (f->kind) {
    case Kind::Leq: return std::max(eval_term(sigma, f->lhs), eval_term(sigma, f->rhs));
    case Kind::Eq: return 0;
    case Kind::Not: return max_bound_impl(sigma, f->a, operands);
    case Kind::And:
    case Kind::Or: return std::max(max_bound_impl(sigma, f->a, operands), max_bound_impl(sigma, f->b, operands));
    case Kind::Exists:
    case Kind::Forall: throw std::invalid_argument("max_bound: unbounded quantifier over " + f->var);
    case Kind::BoundedForall:
    case Kind::BoundedExists:
    case Kind::ExistsEq: {
      // B[x := numeral(sigma(t))] under sigma equals B under sigma[x := sigma(t)].
      const Nat bound = eval_term(sigma, f->bound);
      Nat out = std::max(bound, max_bound_impl(sigma.with(f->var, bound), f->a, operands));
      if (operands && f->kind == Kind::ExistsEq && f->bound->rhs) {
        out = std::max({out, eval_term(sigma, f->bound->lhs), eval_term(sigma, f->bound->rhs)});
      }
      return out;
    }
  }
  throw std::logic_error("unknown formula kind");
}

}  // namespace

Nat max_bound(const VarAssignment& sigma, const pa::Formula& f) { return max_bound_impl(sigma, f, true); }

Nat max_bound_displayed(const VarAssignment& sigma, const pa::Formula& f) {
  return max_bound_impl(sigma, f, false);
}

}  // namespace slnkit
