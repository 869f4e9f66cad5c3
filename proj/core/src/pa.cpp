#include "slnkit/pa.hpp"

#include <stdexcept>
#include <utility>

namespace slnkit::pa {

namespace {

Term make_term(TermKind kind, std::string name, Term lhs, Term rhs) {
  return std::make_shared<const TermNode>(TermNode{kind, std::move(name), std::move(lhs), std::move(rhs)});
}

Formula make(FormulaNode node) { return std::make_shared<const FormulaNode>(std::move(node)); }

Formula binder(Kind kind, std::string x, Term bound, Formula body) {
  if (x.empty()) throw std::invalid_argument("empty variable name");
  if (bound && occurs(x, bound)) {
    throw std::invalid_argument("bound variable " + x + " occurs in its own bound");
  }
  FormulaNode n{kind, nullptr, nullptr, std::move(body), nullptr, std::move(x), std::move(bound)};
  return make(std::move(n));
}

}  // namespace

Term var(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty variable name");
  return make_term(TermKind::Var, std::move(name), nullptr, nullptr);
}

Term zero() {
  static const Term z = make_term(TermKind::Zero, {}, nullptr, nullptr);
  return z;
}

Term succ(Term t) { return make_term(TermKind::Succ, {}, std::move(t), nullptr); }
Term plus(Term l, Term r) { return make_term(TermKind::Plus, {}, std::move(l), std::move(r)); }
Term times(Term l, Term r) { return make_term(TermKind::Times, {}, std::move(l), std::move(r)); }

Term succ_n(Term t, Nat n) {
  for (Nat i = 0; i < n; ++i) t = succ(std::move(t));
  return t;
}

Term numeral(Nat n) { return succ_n(zero(), n); }

bool equal(const Term& a, const Term& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case TermKind::Var: return a->name == b->name;
    case TermKind::Zero: return true;
    case TermKind::Succ: return equal(a->lhs, b->lhs);
    case TermKind::Plus:
    case TermKind::Times: return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
  }
  return false;
}

bool has_arith(const Term& t) {
  switch (t->kind) {
    case TermKind::Var:
    case TermKind::Zero: return false;
    case TermKind::Succ: return has_arith(t->lhs);
    case TermKind::Plus:
    case TermKind::Times: return true;
  }
  return false;
}

bool occurs(const std::string& x, const Term& t) {
  switch (t->kind) {
    case TermKind::Var: return t->name == x;
    case TermKind::Zero: return false;
    case TermKind::Succ: return occurs(x, t->lhs);
    case TermKind::Plus:
    case TermKind::Times: return occurs(x, t->lhs) || occurs(x, t->rhs);
  }
  return false;
}

Formula eq(Term l, Term r) { return make({Kind::Eq, std::move(l), std::move(r), nullptr, nullptr, {}, nullptr}); }
Formula leq(Term l, Term r) { return make({Kind::Leq, std::move(l), std::move(r), nullptr, nullptr, {}, nullptr}); }
Formula neg(Formula f) { return make({Kind::Not, nullptr, nullptr, std::move(f), nullptr, {}, nullptr}); }
Formula conj(Formula l, Formula r) {
  return make({Kind::And, nullptr, nullptr, std::move(l), std::move(r), {}, nullptr});
}
Formula disj(Formula l, Formula r) {
  return make({Kind::Or, nullptr, nullptr, std::move(l), std::move(r), {}, nullptr});
}
Formula implies(Formula l, Formula r) { return disj(neg(std::move(l)), std::move(r)); }

Formula exists(std::string x, Formula body) { return binder(Kind::Exists, std::move(x), nullptr, std::move(body)); }
Formula forall(std::string x, Formula body) { return binder(Kind::Forall, std::move(x), nullptr, std::move(body)); }
Formula bounded_forall(std::string x, Term bound, Formula body) {
  return binder(Kind::BoundedForall, std::move(x), std::move(bound), std::move(body));
}
Formula bounded_exists(std::string x, Term bound, Formula body) {
  return binder(Kind::BoundedExists, std::move(x), std::move(bound), std::move(body));
}
Formula exists_eq(std::string x, Term def, Formula body) {
  return binder(Kind::ExistsEq, std::move(x), std::move(def), std::move(body));
}

Formula rebind(const Formula& f, std::string x, Term bound, Formula body) {
  if (!f->is_binder()) throw std::invalid_argument("rebind on a non-binder");
  return binder(f->kind, std::move(x), std::move(bound), std::move(body));
}

bool equal(const Formula& a, const Formula& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case Kind::Eq:
    case Kind::Leq: return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
    case Kind::Not: return equal(a->a, b->a);
    case Kind::And:
    case Kind::Or: return equal(a->a, b->a) && equal(a->b, b->b);
    case Kind::Exists:
    case Kind::Forall: return a->var == b->var && equal(a->a, b->a);
    case Kind::BoundedForall:
    case Kind::BoundedExists:
    case Kind::ExistsEq: return a->var == b->var && equal(a->bound, b->bound) && equal(a->a, b->a);
  }
  return false;
}

}  // namespace slnkit::pa
