#include "slnkit/translator.hpp"

#include <stdexcept>
#include <string>

#include "slnkit/printer.hpp"
#include "slnkit/syntax.hpp"

namespace slnkit {

namespace {

using sln::bracket;
using sln::conj;
using sln::exists;
using sln::forall;
using sln::implies;
using sln::numeral;
using sln::row;
using sln::Term;

Term v(const char* name) { return sln::var(name); }

std::array<sln::Formula, 6> build_conjuncts() {
  const Term a = v("$a"), b = v("$b"), c = v("$c"), x = v("$x"), y = v("$y"), z = v("$z"), w = v("$w");
  const Term zero = numeral(0), one = numeral(1), two = numeral(2);
  const Term result = a.shifted(3);

  auto forall_axy = [](sln::Formula body) { return forall("$a", forall("$x", forall("$y", std::move(body)))); };

  sln::Formula add1 = forall("$a", forall("$y", implies(row(a, {zero, bracket(zero), bracket(y)}),
                                                         sln::points_to(result, bracket(y)))));

  sln::Formula add2_step = exists("$b", exists("$z", conj(row(b, {zero, bracket(x), bracket(y), bracket(z)}),
                                                         sln::points_to(result, bracket(z.shifted(1))))));
  sln::Formula add2 = forall_axy(implies(row(a, {zero, bracket(x.shifted(1)), bracket(y)}), add2_step));

  sln::Formula mult1 = forall("$a", forall("$y", implies(row(a, {one, bracket(zero), bracket(y)}),
                                                          sln::points_to(result, bracket(zero)))));

  sln::Formula mult2_add = exists("$c", exists("$w", conj(row(c, {zero, bracket(z), bracket(y), bracket(w)}),
                                                          sln::points_to(result, bracket(w)))));
  sln::Formula mult2_step = exists("$b", exists("$z", conj(row(b, {one, bracket(x), bracket(y), bracket(z)}), mult2_add)));
  sln::Formula mult2 = forall_axy(implies(row(a, {one, bracket(x.shifted(1)), bracket(y)}), mult2_step));

  sln::Formula ineq1_step =
      exists("$z", exists("$b", conj(sln::eq(y, z.shifted(1)), row(b, {two, bracket(x), bracket(z)}))));
  sln::Formula ineq1 = forall_axy(implies(row(a, {two, bracket(x.shifted(1)), bracket(y)}), ineq1_step));

  sln::Formula ineq2_step = exists("$b", row(b, {two, bracket(x), bracket(y)}));
  sln::Formula ineq2 = forall_axy(implies(row(a, {two, bracket(x.shifted(1)), bracket(y)}), ineq2_step));
  return {add1, add2, mult1, mult2, ineq1, ineq2};
}

/// A helper binder name that does not occur in any of the given terms.
std::string helper_name(std::initializer_list<const Term*> terms) {
  for (int k = 0;; ++k) {
    const std::string name = "$a" + std::to_string(k);
    bool clash = false;
    for (const Term* t : terms) clash = clash || t->var == name;
    if (!clash) return name;
  }
}

sln::Formula table_lookup(Nat tag, const Term& x, const Term& y, const Term& z) {
  const std::string a = helper_name({&x, &y, &z});
  const Term at = sln::var(a);
  return forall(a, implies(row(at, {numeral(tag), bracket(x), bracket(y)}), sln::points_to(at.shifted(3), bracket(z))));
}

const sln::Formula& h() { return table_heap_condition(); }

sln::Formula leq_translation(const Term& t, const Term& u) {
  return implies(h(), sln::disj(sln::neg(ineq_formula(u, t)), sln::eq(t, u)));
}

sln::Formula translate_matrix(const pa::Formula& f) {
  switch (f->kind) {
    case pa::Kind::Eq:
      return sln::eq(to_sln_term(f->lhs), to_sln_term(f->rhs));
    case pa::Kind::Leq:
      return leq_translation(to_sln_term(f->lhs), to_sln_term(f->rhs));
    case pa::Kind::Not:
      if (f->a->kind != pa::Kind::Eq) {
        throw std::invalid_argument("circle translation expects negation on equations only: " + render(f));
      }
      return sln::neg(translate_matrix(f->a));
    case pa::Kind::And:
      return conj(translate_matrix(f->a), translate_matrix(f->b));
    case pa::Kind::Or:
      return sln::disj(translate_matrix(f->a), translate_matrix(f->b));
    default:
      throw std::invalid_argument("circle translation expects a quantifier-free matrix: " + render(f));
  }
}

sln::Formula translate_normal(const pa::Formula& f) {
  switch (f->kind) {
    case pa::Kind::BoundedExists: {
      const Term x = sln::var(f->var), t = to_sln_term(f->bound);
      return implies(h(), sln::disj(sln::neg(ineq_formula(t, t)),
                                    exists(f->var, conj(ineq_formula(x, t), translate_normal(f->a)))));
    }
    case pa::Kind::BoundedForall: {
      const Term x = sln::var(f->var), t = to_sln_term(f->bound);
      return implies(h(), forall(f->var, sln::disj(sln::neg(ineq_formula(x, t)), translate_normal(f->a))));
    }
    case pa::Kind::ExistsEq: {
      const pa::Term& def = f->bound;
      const Term x = sln::var(f->var), t = to_sln_term(def->lhs), u = to_sln_term(def->rhs);
      sln::Formula op = def->kind == pa::TermKind::Plus ? add_formula(t, u, x) : mult_formula(t, u, x);
      return implies(h(), exists(f->var, conj(op, translate_normal(f->a))));
    }
    default:
      return translate_matrix(f);
  }
}

}  // namespace

const std::array<sln::Formula, 6>& table_heap_conjuncts() {
  static const std::array<sln::Formula, 6> conjuncts = build_conjuncts();
  return conjuncts;
}

const sln::Formula& table_heap_condition() {
  static const sln::Formula condition = [] {
    const auto& c = table_heap_conjuncts();
    sln::Formula f = c[0];
    for (std::size_t i = 1; i < c.size(); ++i) f = conj(f, c[i]);
    return f;
  }();
  return condition;
}

sln::Formula add_formula(const Term& x, const Term& y, const Term& z) { return table_lookup(0, x, y, z); }

sln::Formula mult_formula(const Term& x, const Term& y, const Term& z) { return table_lookup(1, x, y, z); }

sln::Formula ineq_formula(const Term& x, const Term& y) {
  const std::string a = helper_name({&x, &y});
  return exists(a, row(sln::var(a), {numeral(2), bracket(x), bracket(y)}));
}

sln::Term to_sln_term(const pa::Term& t) {
  switch (t->kind) {
    case pa::TermKind::Var:
      return sln::var(t->name);
    case pa::TermKind::Zero:
      return numeral(0);
    case pa::TermKind::Succ:
      return to_sln_term(t->lhs).shifted(1);
    default:
      throw std::invalid_argument("term '" + render(t) + "' uses + or * and has no SLN counterpart");
  }
}

sln::Formula circle_translate(const pa::Formula& f) {
  if (f->kind == pa::Kind::Forall) return forall(f->var, circle_translate(f->a));
  if (!is_normal(f)) throw std::invalid_argument("circle translation needs a normal formula: " + render(f));
  return translate_normal(f);
}

}  // namespace slnkit
