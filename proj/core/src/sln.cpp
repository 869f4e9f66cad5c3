#include "slnkit/sln.hpp"

#include <stdexcept>
#include <utility>

namespace slnkit::sln {

namespace {

Formula make(FormulaNode node) { return std::make_shared<const FormulaNode>(std::move(node)); }

Formula binder(Kind kind, std::string x, Nat guard, Formula body) {
  if (x.empty()) throw std::invalid_argument("empty variable name");
  FormulaNode n{kind, {}, {}, false, std::move(body), nullptr, std::move(x), guard};
  return make(std::move(n));
}

}  // namespace

Formula eq(Term l, Term r) { return make({Kind::Eq, std::move(l), std::move(r), false, nullptr, nullptr, {}, 0}); }
Formula points_to(Term addr, Term val) {
  return make({Kind::PointsTo, std::move(addr), std::move(val), false, nullptr, nullptr, {}, 0});
}
Formula truth(bool value) {
  static const Formula t = make({Kind::Truth, {}, {}, true, nullptr, nullptr, {}, 0});
  static const Formula f = make({Kind::Truth, {}, {}, false, nullptr, nullptr, {}, 0});
  return value ? t : f;
}
Formula neg(Formula f) { return make({Kind::Not, {}, {}, false, std::move(f), nullptr, {}, 0}); }
Formula conj(Formula l, Formula r) { return make({Kind::And, {}, {}, false, std::move(l), std::move(r), {}, 0}); }
Formula disj(Formula l, Formula r) { return make({Kind::Or, {}, {}, false, std::move(l), std::move(r), {}, 0}); }
Formula implies(Formula l, Formula r) { return disj(neg(std::move(l)), std::move(r)); }

Formula exists(std::string x, Formula body) { return binder(Kind::Exists, std::move(x), 0, std::move(body)); }
Formula forall(std::string x, Formula body) { return binder(Kind::Forall, std::move(x), 0, std::move(body)); }
Formula guarded_forall(std::string x, Nat from, Formula body) {
  return binder(Kind::GuardedForall, std::move(x), from, std::move(body));
}
Formula guarded_exists(std::string x, Nat from, Formula body) {
  return binder(Kind::GuardedExists, std::move(x), from, std::move(body));
}

Formula quantifier(bool universal, std::string x, Nat from, Formula body) {
  if (from == 0) return universal ? forall(std::move(x), std::move(body)) : exists(std::move(x), std::move(body));
  return universal ? guarded_forall(std::move(x), from, std::move(body))
                   : guarded_exists(std::move(x), from, std::move(body));
}

Formula rebind(const Formula& f, std::string x, Formula body) {
  if (!f->is_binder()) throw std::invalid_argument("rebind on a non-binder");
  return binder(f->kind, std::move(x), f->guard, std::move(body));
}

Formula row(const Term& addr, std::initializer_list<Term> values) {
  Formula result;
  Nat i = 0;
  for (const Term& v : values) {
    Formula cell = points_to(addr.shifted(i++), v);
    result = result ? conj(result, cell) : cell;
  }
  if (!result) throw std::invalid_argument("empty row");
  return result;
}

Formula expand_guards(const Formula& f) {
  switch (f->kind) {
    case Kind::Eq:
    case Kind::PointsTo:
    case Kind::Truth: return f;
    case Kind::Not: return neg(expand_guards(f->a));
    case Kind::And: return conj(expand_guards(f->a), expand_guards(f->b));
    case Kind::Or: return disj(expand_guards(f->a), expand_guards(f->b));
    case Kind::Exists: return exists(f->var, expand_guards(f->a));
    case Kind::Forall: return forall(f->var, expand_guards(f->a));
    case Kind::GuardedForall: {
      Formula body = expand_guards(f->a);
      for (Nat i = f->guard; i-- > 0;) body = disj(eq(var(f->var), numeral(i)), body);
      return forall(f->var, body);
    }
    case Kind::GuardedExists: {
      Formula body = expand_guards(f->a);
      for (Nat i = f->guard; i-- > 0;) body = conj(neg(eq(var(f->var), numeral(i))), body);
      return exists(f->var, body);
    }
  }
  return f;
}

bool equal(const Formula& a, const Formula& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case Kind::Eq:
    case Kind::PointsTo: return a->lhs == b->lhs && a->rhs == b->rhs;
    case Kind::Truth: return a->truth == b->truth;
    case Kind::Not: return equal(a->a, b->a);
    case Kind::And:
    case Kind::Or: return equal(a->a, b->a) && equal(a->b, b->b);
    case Kind::Exists:
    case Kind::Forall: return a->var == b->var && equal(a->a, b->a);
    case Kind::GuardedForall:
    case Kind::GuardedExists: return a->var == b->var && a->guard == b->guard && equal(a->a, b->a);
  }
  return false;
}

}  // namespace slnkit::sln
