#include "slnkit/printer.hpp"

namespace slnkit {

namespace {

// Formula contexts: 0 = top/quantifier body, 1 = disjunct, 2 = left conjunct
// or right disjunct, 3 = operand of ! or right conjunct.
constexpr int kTop = 0;
constexpr int kOrLeft = 1;
constexpr int kAndLeft = 2;
constexpr int kOrRight = 2;
constexpr int kTight = 3;

std::string paren_if(bool cond, std::string s) { return cond ? "(" + s + ")" : s; }

// PA terms: 1 = sum, 2 = product, 3 = primary.
std::string pa_term(const pa::Term& t, int ctx) {
  switch (t->kind) {
    case pa::TermKind::Var: return t->name;
    case pa::TermKind::Zero: return "0";
    case pa::TermKind::Succ: return "s(" + pa_term(t->lhs, 0) + ")";
    case pa::TermKind::Plus: return paren_if(ctx > 1, pa_term(t->lhs, 1) + " + " + pa_term(t->rhs, 2));
    case pa::TermKind::Times: return paren_if(ctx > 2, pa_term(t->lhs, 2) + " * " + pa_term(t->rhs, 3));
  }
  return "?";
}

std::string pa_formula(const pa::Formula& f, int ctx) {
  using pa::Kind;
  switch (f->kind) {
    case Kind::Eq: return pa_term(f->lhs, 0) + " = " + pa_term(f->rhs, 0);
    case Kind::Leq: return pa_term(f->lhs, 0) + " <= " + pa_term(f->rhs, 0);
    case Kind::Not:
      if (f->a->is_atom()) return "!(" + pa_formula(f->a, kTop) + ")";
      return "!" + pa_formula(f->a, kTight);
    case Kind::And:
      return paren_if(ctx > kAndLeft, pa_formula(f->a, kAndLeft) + " /\\ " + pa_formula(f->b, kTight));
    case Kind::Or: return paren_if(ctx > kOrLeft, pa_formula(f->a, kOrLeft) + " \\/ " + pa_formula(f->b, kOrRight));
    case Kind::Exists: return paren_if(ctx > kTop, "exists " + f->var + ". " + pa_formula(f->a, kTop));
    case Kind::Forall: return paren_if(ctx > kTop, "forall " + f->var + ". " + pa_formula(f->a, kTop));
    case Kind::BoundedForall:
      return paren_if(ctx > kTop, "forall " + f->var + " <= " + pa_term(f->bound, 0) + ". " + pa_formula(f->a, kTop));
    case Kind::BoundedExists:
      return paren_if(ctx > kTop, "exists " + f->var + " <= " + pa_term(f->bound, 0) + ". " + pa_formula(f->a, kTop));
    case Kind::ExistsEq:
      return paren_if(ctx > kTop,
                      "exists (" + f->var + " = " + pa_term(f->bound, 0) + ") " + pa_formula(f->a, kTop));
  }
  return "?";
}

std::string sln_term(const sln::Term& t) {
  if (t.is_ground() && t.offset > 3) return std::to_string(t.offset);
  std::string s = t.is_ground() ? "0" : t.var;
  for (Nat i = 0; i < t.offset; ++i) s = "s(" + s + ")";
  return s;
}

std::string sln_formula(const sln::Formula& f, int ctx) {
  using sln::Kind;
  switch (f->kind) {
    case Kind::Eq: return sln_term(f->lhs) + " = " + sln_term(f->rhs);
    case Kind::PointsTo: return sln_term(f->lhs) + " |-> " + sln_term(f->rhs);
    case Kind::Truth: return f->truth ? "0 = 0" : "!(0 = 0)";
    case Kind::Not:
      if (f->a->kind == Kind::Eq || f->a->kind == Kind::PointsTo) return "!(" + sln_formula(f->a, kTop) + ")";
      return "!" + sln_formula(f->a, kTight);
    case Kind::And:
      return paren_if(ctx > kAndLeft, sln_formula(f->a, kAndLeft) + " /\\ " + sln_formula(f->b, kTight));
    case Kind::Or:
      return paren_if(ctx > kOrLeft, sln_formula(f->a, kOrLeft) + " \\/ " + sln_formula(f->b, kOrRight));
    case Kind::Exists: return paren_if(ctx > kTop, "exists " + f->var + ". " + sln_formula(f->a, kTop));
    case Kind::Forall: return paren_if(ctx > kTop, "forall " + f->var + ". " + sln_formula(f->a, kTop));
    case Kind::GuardedForall:
      return paren_if(ctx > kTop,
                      "forall " + f->var + " >= " + std::to_string(f->guard) + ". " + sln_formula(f->a, kTop));
    case Kind::GuardedExists:
      return paren_if(ctx > kTop,
                      "exists " + f->var + " >= " + std::to_string(f->guard) + ". " + sln_formula(f->a, kTop));
  }
  return "?";
}

std::string fol_formula(const fol::Formula& f, int ctx) {
  using fol::Kind;
  switch (f->kind) {
    case Kind::Eq: return f->x + " = " + f->y;
    case Kind::Rel: return "P(" + f->x + ", " + f->y + ")";
    case Kind::Not:
      if (f->a->kind == Kind::Eq) return "!(" + fol_formula(f->a, kTop) + ")";
      return "!" + fol_formula(f->a, kTight);
    case Kind::And:
      return paren_if(ctx > kAndLeft, fol_formula(f->a, kAndLeft) + " /\\ " + fol_formula(f->b, kTight));
    case Kind::Exists: return paren_if(ctx > kTop, "exists " + f->x + ". " + fol_formula(f->a, kTop));
  }
  return "?";
}

}  // namespace

std::string render(const pa::Term& t) { return pa_term(t, 0); }
std::string render(const pa::Formula& f) { return pa_formula(f, kTop); }
std::string render(const sln::Term& t) { return sln_term(t); }
std::string render(const sln::Formula& f) { return sln_formula(f, kTop); }
std::string render(const fol::Formula& f) { return fol_formula(f, kTop); }

}  // namespace slnkit
