#include "slnkit/syntax.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

namespace slnkit {

std::string FreshNames::next(const std::string& base) {
  const std::string stem = base_name(base);
  for (;;) {
    std::string candidate = stem + "#" + std::to_string(++counter_);
    if (used_.insert(candidate).second) return candidate;
  }
}

std::string base_name(const std::string& name) {
  const auto pos = name.find('#');
  return pos == std::string::npos || pos == 0 ? name : name.substr(0, pos);
}

// ================================================================ PA ====

namespace {

using pa::Formula;
using pa::Kind;
using pa::Term;
using pa::TermKind;

void collect_vars(const Term& t, VarSet& out) {
  switch (t->kind) {
    case TermKind::Var: out.insert(t->name); break;
    case TermKind::Zero: break;
    case TermKind::Succ: collect_vars(t->lhs, out); break;
    case TermKind::Plus:
    case TermKind::Times:
      collect_vars(t->lhs, out);
      collect_vars(t->rhs, out);
      break;
  }
}

void collect_free(const Formula& f, VarSet& bound, VarSet& out) {
  auto add_term = [&](const Term& t) {
    VarSet vs;
    collect_vars(t, vs);
    for (const auto& v : vs) {
      if (!bound.count(v)) out.insert(v);
    }
  };
  switch (f->kind) {
    case Kind::Eq:
    case Kind::Leq:
      add_term(f->lhs);
      add_term(f->rhs);
      return;
    case Kind::Not: collect_free(f->a, bound, out); return;
    case Kind::And:
    case Kind::Or:
      collect_free(f->a, bound, out);
      collect_free(f->b, bound, out);
      return;
    default: break;
  }
  if (f->bound) add_term(f->bound);
  const bool fresh_binding = bound.insert(f->var).second;
  collect_free(f->a, bound, out);
  if (fresh_binding) bound.erase(f->var);
}

Term rename_term(const Term& t, const std::map<std::string, std::string>& env) {
  switch (t->kind) {
    case TermKind::Var: {
      auto it = env.find(t->name);
      return it == env.end() ? t : pa::var(it->second);
    }
    case TermKind::Zero: return t;
    case TermKind::Succ: return pa::succ(rename_term(t->lhs, env));
    case TermKind::Plus: return pa::plus(rename_term(t->lhs, env), rename_term(t->rhs, env));
    case TermKind::Times: return pa::times(rename_term(t->lhs, env), rename_term(t->rhs, env));
  }
  return t;
}

// Renames binders; `choose` decides the new name of each binder.
template <class Choose>
Formula rename_binders(const Formula& f, std::map<std::string, std::string>& env, Choose& choose) {
  switch (f->kind) {
    case Kind::Eq: return pa::eq(rename_term(f->lhs, env), rename_term(f->rhs, env));
    case Kind::Leq: return pa::leq(rename_term(f->lhs, env), rename_term(f->rhs, env));
    case Kind::Not: return pa::neg(rename_binders(f->a, env, choose));
    case Kind::And: return pa::conj(rename_binders(f->a, env, choose), rename_binders(f->b, env, choose));
    case Kind::Or: return pa::disj(rename_binders(f->a, env, choose), rename_binders(f->b, env, choose));
    default: break;
  }
  Term bound = f->bound ? rename_term(f->bound, env) : nullptr;
  std::string name = choose(f->var);
  auto saved = env.find(f->var) == env.end() ? std::nullopt : std::optional<std::string>(env[f->var]);
  env[f->var] = name;
  Formula body = rename_binders(f->a, env, choose);
  if (saved) {
    env[f->var] = *saved;
  } else {
    env.erase(f->var);
  }
  return pa::rebind(f, name, bound, body);
}

struct PaPrefixEntry {
  Kind kind;
  std::string var;
  Term bound;
};

void pull_prefix(const Formula& f, std::vector<PaPrefixEntry>& prefix, Formula& matrix) {
  switch (f->kind) {
    case Kind::Eq:
    case Kind::Leq:
    case Kind::Not: matrix = f; return;
    case Kind::And:
    case Kind::Or: {
      Formula ma, mb;
      pull_prefix(f->a, prefix, ma);
      pull_prefix(f->b, prefix, mb);
      matrix = f->kind == Kind::And ? pa::conj(ma, mb) : pa::disj(ma, mb);
      return;
    }
    default:
      prefix.push_back({f->kind, f->var, f->bound});
      pull_prefix(f->a, prefix, matrix);
      return;
  }
}

Formula build_binder(const PaPrefixEntry& e, Formula body) {
  switch (e.kind) {
    case Kind::Exists: return pa::exists(e.var, std::move(body));
    case Kind::Forall: return pa::forall(e.var, std::move(body));
    case Kind::BoundedForall: return pa::bounded_forall(e.var, e.bound, std::move(body));
    case Kind::BoundedExists: return pa::bounded_exists(e.var, e.bound, std::move(body));
    case Kind::ExistsEq: return pa::exists_eq(e.var, e.bound, std::move(body));
    default: throw std::logic_error("not a binder kind");
  }
}

bool is_literal(const Formula& f) { return f->is_atom() || (f->kind == Kind::Not && f->a->is_atom()); }

bool is_cube(const Formula& f) {
  if (f->kind == Kind::And) return is_cube(f->a) && is_cube(f->b);
  return is_literal(f);
}

std::size_t term_arith_count(const Term& t) {
  switch (t->kind) {
    case TermKind::Var:
    case TermKind::Zero: return 0;
    case TermKind::Succ: return term_arith_count(t->lhs);
    case TermKind::Plus:
    case TermKind::Times: return 1 + term_arith_count(t->lhs) + term_arith_count(t->rhs);
  }
  return 0;
}

bool is_flat_operation(const Term& t) {
  return (t->kind == TermKind::Plus || t->kind == TermKind::Times) && !pa::has_arith(t->lhs) &&
         !pa::has_arith(t->rhs);
}

bool atoms_arith_free(const Formula& f) {
  switch (f->kind) {
    case Kind::Eq:
    case Kind::Leq: return !pa::has_arith(f->lhs) && !pa::has_arith(f->rhs);
    case Kind::Not: return atoms_arith_free(f->a);
    case Kind::And:
    case Kind::Or: return atoms_arith_free(f->a) && atoms_arith_free(f->b);
    default: return false;
  }
}

bool has_negated_leq(const Formula& f) {
  switch (f->kind) {
    case Kind::Eq:
    case Kind::Leq: return false;
    case Kind::Not: return f->a->kind == Kind::Leq || has_negated_leq(f->a);
    case Kind::And:
    case Kind::Or: return has_negated_leq(f->a) || has_negated_leq(f->b);
    default: return has_negated_leq(f->a);
  }
}

}  // namespace

VarSet free_vars(const pa::Term& t) {
  VarSet out;
  collect_vars(t, out);
  return out;
}

VarSet free_vars(const pa::Formula& f) {
  VarSet bound, out;
  collect_free(f, bound, out);
  return out;
}

VarSet all_vars(const pa::Formula& f) {
  VarSet out;
  switch (f->kind) {
    case Kind::Eq:
    case Kind::Leq:
      collect_vars(f->lhs, out);
      collect_vars(f->rhs, out);
      return out;
    case Kind::Not: return all_vars(f->a);
    case Kind::And:
    case Kind::Or: {
      out = all_vars(f->a);
      auto rest = all_vars(f->b);
      out.insert(rest.begin(), rest.end());
      return out;
    }
    default: break;
  }
  out = all_vars(f->a);
  out.insert(f->var);
  if (f->bound) collect_vars(f->bound, out);
  return out;
}

pa::Term substitute(const pa::Term& t, const std::string& x, const pa::Term& by) {
  switch (t->kind) {
    case TermKind::Var: return t->name == x ? by : t;
    case TermKind::Zero: return t;
    case TermKind::Succ: return pa::succ(substitute(t->lhs, x, by));
    case TermKind::Plus: return pa::plus(substitute(t->lhs, x, by), substitute(t->rhs, x, by));
    case TermKind::Times: return pa::times(substitute(t->lhs, x, by), substitute(t->rhs, x, by));
  }
  return t;
}

pa::Formula substitute(const pa::Formula& f, const std::string& x, const pa::Term& by, FreshNames& fresh) {
  switch (f->kind) {
    case Kind::Eq: return pa::eq(substitute(f->lhs, x, by), substitute(f->rhs, x, by));
    case Kind::Leq: return pa::leq(substitute(f->lhs, x, by), substitute(f->rhs, x, by));
    case Kind::Not: return pa::neg(substitute(f->a, x, by, fresh));
    case Kind::And: return pa::conj(substitute(f->a, x, by, fresh), substitute(f->b, x, by, fresh));
    case Kind::Or: return pa::disj(substitute(f->a, x, by, fresh), substitute(f->b, x, by, fresh));
    default: break;
  }
  const Term bound = f->bound ? substitute(f->bound, x, by) : nullptr;
  if (f->var == x) return pa::rebind(f, f->var, bound, f->a);
  const bool x_in_body = free_vars(f->a).count(x) != 0;
  const bool x_in_bound = f->bound && pa::occurs(x, f->bound);
  if (!x_in_body && !x_in_bound) return f;
  const bool captured = (x_in_body && pa::occurs(f->var, by)) || (bound && pa::occurs(f->var, bound));
  if (captured) {
    const std::string renamed = fresh.next(f->var);
    Formula body = substitute(f->a, f->var, pa::var(renamed), fresh);
    return pa::rebind(f, renamed, bound, x_in_body ? substitute(body, x, by, fresh) : body);
  }
  return pa::rebind(f, f->var, bound, x_in_body ? substitute(f->a, x, by, fresh) : f->a);
}

pa::Formula substitute(const pa::Formula& f, const std::string& x, const pa::Term& by) {
  FreshNames fresh(all_vars(f));
  fresh.reserve(free_vars(by));
  fresh.reserve(x);
  return substitute(f, x, by, fresh);
}

pa::Formula unfold(const pa::Formula& f) {
  switch (f->kind) {
    case Kind::Eq:
    case Kind::Leq: return f;
    case Kind::Not: return pa::neg(unfold(f->a));
    case Kind::And: return pa::conj(unfold(f->a), unfold(f->b));
    case Kind::Or: return pa::disj(unfold(f->a), unfold(f->b));
    case Kind::Exists: return pa::exists(f->var, unfold(f->a));
    case Kind::Forall: return pa::forall(f->var, unfold(f->a));
    case Kind::BoundedForall:
      return pa::forall(f->var, pa::implies(pa::leq(pa::var(f->var), f->bound), unfold(f->a)));
    case Kind::BoundedExists:
      return pa::exists(f->var, pa::conj(pa::leq(pa::var(f->var), f->bound), unfold(f->a)));
    case Kind::ExistsEq: return pa::exists(f->var, pa::conj(pa::eq(pa::var(f->var), f->bound), unfold(f->a)));
  }
  return f;
}

pa::Formula rename_apart(const pa::Formula& f, FreshNames& fresh) {
  fresh.reserve(all_vars(f));
  const VarSet free = free_vars(f);
  VarSet seen;
  auto choose = [&](const std::string& v) {
    if (free.count(v) || seen.count(v)) return fresh.next(v);
    seen.insert(v);
    return v;
  };
  std::map<std::string, std::string> env;
  return rename_binders(f, env, choose);
}

pa::Formula to_nnf(const pa::Formula& f) {
  switch (f->kind) {
    case Kind::Eq:
    case Kind::Leq: return f;
    case Kind::And: return pa::conj(to_nnf(f->a), to_nnf(f->b));
    case Kind::Or: return pa::disj(to_nnf(f->a), to_nnf(f->b));
    case Kind::Not: break;
    default: return pa::rebind(f, f->var, f->bound, to_nnf(f->a));
  }
  const Formula& g = f->a;
  switch (g->kind) {
    case Kind::Eq:
    case Kind::Leq: return f;
    case Kind::Not: return to_nnf(g->a);
    case Kind::And: return pa::disj(to_nnf(pa::neg(g->a)), to_nnf(pa::neg(g->b)));
    case Kind::Or: return pa::conj(to_nnf(pa::neg(g->a)), to_nnf(pa::neg(g->b)));
    case Kind::Exists: return pa::forall(g->var, to_nnf(pa::neg(g->a)));
    case Kind::Forall: return pa::exists(g->var, to_nnf(pa::neg(g->a)));
    case Kind::BoundedForall: return pa::bounded_exists(g->var, g->bound, to_nnf(pa::neg(g->a)));
    case Kind::BoundedExists: return pa::bounded_forall(g->var, g->bound, to_nnf(pa::neg(g->a)));
    case Kind::ExistsEq: return pa::exists_eq(g->var, g->bound, to_nnf(pa::neg(g->a)));
  }
  return f;
}

pa::Formula to_prenex(const pa::Formula& f, FreshNames& fresh) {
  const Formula nnf = to_nnf(rename_apart(f, fresh));
  std::vector<PaPrefixEntry> prefix;
  Formula matrix;
  pull_prefix(nnf, prefix, matrix);
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) matrix = build_binder(*it, matrix);
  return matrix;
}

pa::Formula to_prenex(const pa::Formula& f) {
  FreshNames fresh;
  return to_prenex(f, fresh);
}

std::vector<std::vector<pa::Formula>> dnf_cubes(const pa::Formula& f) {
  using Cubes = std::vector<std::vector<Formula>>;
  // Works on NNF; !(t <= u) becomes u <= t /\ !(u = t).
  struct Rec {
    static Cubes run(const Formula& g) {
      switch (g->kind) {
        case Kind::Eq:
        case Kind::Leq: return {{g}};
        case Kind::Not:
          if (g->a->kind == Kind::Leq) {
            return {{pa::leq(g->a->rhs, g->a->lhs), pa::neg(pa::eq(g->a->rhs, g->a->lhs))}};
          }
          if (g->a->kind == Kind::Eq) return {{g}};
          throw std::invalid_argument("dnf: formula not in negation normal form");
        case Kind::Or: {
          Cubes l = run(g->a);
          Cubes r = run(g->b);
          l.insert(l.end(), r.begin(), r.end());
          return l;
        }
        case Kind::And: {
          Cubes l = run(g->a);
          Cubes r = run(g->b);
          Cubes out;
          out.reserve(l.size() * r.size());
          for (const auto& cl : l) {
            for (const auto& cr : r) {
              auto c = cl;
              c.insert(c.end(), cr.begin(), cr.end());
              out.push_back(std::move(c));
            }
          }
          return out;
        }
        default: throw std::invalid_argument("dnf: formula is not quantifier-free");
      }
    }
  };
  return Rec::run(to_nnf(f));
}

pa::Formula to_dnf(const pa::Formula& f) {
  Formula result;
  for (const auto& cube : dnf_cubes(f)) {
    Formula c;
    for (const auto& lit : cube) c = c ? pa::conj(c, lit) : lit;
    result = result ? pa::disj(result, c) : c;
  }
  return result;
}

bool is_quantifier_free(const pa::Formula& f) {
  switch (f->kind) {
    case Kind::Eq:
    case Kind::Leq: return true;
    case Kind::Not: return is_quantifier_free(f->a);
    case Kind::And:
    case Kind::Or: return is_quantifier_free(f->a) && is_quantifier_free(f->b);
    default: return false;
  }
}

namespace {
template <class Pred>
bool all_binders(const Formula& f, Pred ok) {
  switch (f->kind) {
    case Kind::Eq:
    case Kind::Leq: return true;
    case Kind::Not: return all_binders(f->a, ok);
    case Kind::And:
    case Kind::Or: return all_binders(f->a, ok) && all_binders(f->b, ok);
    default: return ok(f->kind) && all_binders(f->a, ok);
  }
}
}  // namespace

bool is_bounded(const pa::Formula& f) {
  return all_binders(f, [](Kind k) { return k == Kind::BoundedForall || k == Kind::BoundedExists; });
}

bool is_evaluable(const pa::Formula& f) {
  return all_binders(f, [](Kind k) { return k != Kind::Forall && k != Kind::Exists; });
}

bool is_pi01(const pa::Formula& f) { return f->kind == Kind::Forall && is_bounded(f->a); }

bool is_dnf(const pa::Formula& f) {
  if (f->kind == Kind::Or) return is_dnf(f->a) && is_dnf(f->b);
  return is_cube(f);
}

bool is_normal(const pa::Formula& f) {
  Formula cur = f;
  for (;;) {
    switch (cur->kind) {
      case Kind::BoundedForall:
      case Kind::BoundedExists:
        if (pa::has_arith(cur->bound)) return false;
        cur = cur->a;
        continue;
      case Kind::ExistsEq:
        if (!is_flat_operation(cur->bound)) return false;
        cur = cur->a;
        continue;
      case Kind::Exists:
      case Kind::Forall: return false;
      default: break;
    }
    break;
  }
  return is_quantifier_free(cur) && is_dnf(cur) && atoms_arith_free(cur) && !has_negated_leq(cur);
}

std::size_t arith_count(const pa::Formula& f) {
  switch (f->kind) {
    case Kind::Eq:
    case Kind::Leq: return term_arith_count(f->lhs) + term_arith_count(f->rhs);
    case Kind::Not: return arith_count(f->a);
    case Kind::And:
    case Kind::Or: return arith_count(f->a) + arith_count(f->b);
    case Kind::ExistsEq: {
      // The top operation of a definition is where + / * belong.
      const bool top = f->bound->kind == TermKind::Plus || f->bound->kind == TermKind::Times;
      return term_arith_count(f->bound) - (top ? 1 : 0) + arith_count(f->a);
    }
    default: return term_arith_count(f->bound ? f->bound : pa::zero()) + arith_count(f->a);
  }
}

pa::Formula alpha_normalize(const pa::Formula& f) {
  std::size_t counter = 0;
  auto choose = [&](const std::string&) { return "%" + std::to_string(counter++); };
  std::map<std::string, std::string> env;
  return rename_binders(f, env, choose);
}

bool alpha_equal(const pa::Formula& a, const pa::Formula& b) {
  return pa::equal(alpha_normalize(a), alpha_normalize(b));
}

// =============================================================== SLN ====

namespace {

namespace S = sln;

void collect_free(const S::Formula& f, VarSet& bound, VarSet& out) {
  auto add_term = [&](const S::Term& t) {
    if (!t.is_ground() && !bound.count(t.var)) out.insert(t.var);
  };
  switch (f->kind) {
    case S::Kind::Eq:
    case S::Kind::PointsTo:
      add_term(f->lhs);
      add_term(f->rhs);
      return;
    case S::Kind::Truth: return;
    case S::Kind::Not: collect_free(f->a, bound, out); return;
    case S::Kind::And:
    case S::Kind::Or:
      collect_free(f->a, bound, out);
      collect_free(f->b, bound, out);
      return;
    default: break;
  }
  const bool fresh_binding = bound.insert(f->var).second;
  collect_free(f->a, bound, out);
  if (fresh_binding) bound.erase(f->var);
}

S::Term rename_term(const S::Term& t, const std::map<std::string, std::string>& env) {
  if (t.is_ground()) return t;
  auto it = env.find(t.var);
  return it == env.end() ? t : S::Term{it->second, t.offset};
}

template <class Choose>
S::Formula rename_binders(const S::Formula& f, std::map<std::string, std::string>& env, Choose& choose) {
  switch (f->kind) {
    case S::Kind::Eq: return S::eq(rename_term(f->lhs, env), rename_term(f->rhs, env));
    case S::Kind::PointsTo: return S::points_to(rename_term(f->lhs, env), rename_term(f->rhs, env));
    case S::Kind::Truth: return f;
    case S::Kind::Not: return S::neg(rename_binders(f->a, env, choose));
    case S::Kind::And: return S::conj(rename_binders(f->a, env, choose), rename_binders(f->b, env, choose));
    case S::Kind::Or: return S::disj(rename_binders(f->a, env, choose), rename_binders(f->b, env, choose));
    default: break;
  }
  std::string name = choose(f->var);
  auto saved = env.find(f->var) == env.end() ? std::nullopt : std::optional<std::string>(env[f->var]);
  env[f->var] = name;
  S::Formula body = rename_binders(f->a, env, choose);
  if (saved) {
    env[f->var] = *saved;
  } else {
    env.erase(f->var);
  }
  return S::rebind(f, name, body);
}

struct SlnPrefixEntry {
  bool universal;
  std::string var;
  Nat guard;
};

void pull_prefix(const S::Formula& f, std::vector<SlnPrefixEntry>& prefix, S::Formula& matrix) {
  switch (f->kind) {
    case S::Kind::And:
    case S::Kind::Or: {
      S::Formula ma, mb;
      pull_prefix(f->a, prefix, ma);
      pull_prefix(f->b, prefix, mb);
      matrix = f->kind == S::Kind::And ? S::conj(ma, mb) : S::disj(ma, mb);
      return;
    }
    default:
      if (f->is_binder()) {
        prefix.push_back({f->is_universal(), f->var, f->lower()});
        pull_prefix(f->a, prefix, matrix);
        return;
      }
      matrix = f;
      return;
  }
}

}  // namespace

VarSet free_vars(const sln::Formula& f) {
  VarSet bound, out;
  collect_free(f, bound, out);
  return out;
}

VarSet all_vars(const sln::Formula& f) {
  VarSet out;
  switch (f->kind) {
    case S::Kind::Eq:
    case S::Kind::PointsTo:
      if (!f->lhs.is_ground()) out.insert(f->lhs.var);
      if (!f->rhs.is_ground()) out.insert(f->rhs.var);
      return out;
    case S::Kind::Truth: return out;
    case S::Kind::Not: return all_vars(f->a);
    case S::Kind::And:
    case S::Kind::Or: {
      out = all_vars(f->a);
      auto rest = all_vars(f->b);
      out.insert(rest.begin(), rest.end());
      return out;
    }
    default: break;
  }
  out = all_vars(f->a);
  out.insert(f->var);
  return out;
}

sln::Term substitute(const sln::Term& t, const std::string& x, const sln::Term& by) {
  if (t.var != x || t.is_ground()) return t;
  return by.shifted(t.offset);
}

sln::Formula substitute(const sln::Formula& f, const std::string& x, const sln::Term& by, FreshNames& fresh) {
  switch (f->kind) {
    case S::Kind::Eq: return S::eq(substitute(f->lhs, x, by), substitute(f->rhs, x, by));
    case S::Kind::PointsTo: return S::points_to(substitute(f->lhs, x, by), substitute(f->rhs, x, by));
    case S::Kind::Truth: return f;
    case S::Kind::Not: return S::neg(substitute(f->a, x, by, fresh));
    case S::Kind::And: return S::conj(substitute(f->a, x, by, fresh), substitute(f->b, x, by, fresh));
    case S::Kind::Or: return S::disj(substitute(f->a, x, by, fresh), substitute(f->b, x, by, fresh));
    default: break;
  }
  if (f->var == x || !free_vars(f->a).count(x)) return f;
  if (!by.is_ground() && by.var == f->var) {
    const std::string renamed = fresh.next(f->var);
    S::Formula body = substitute(f->a, f->var, S::var(renamed), fresh);
    return S::rebind(f, renamed, substitute(body, x, by, fresh));
  }
  return S::rebind(f, f->var, substitute(f->a, x, by, fresh));
}

sln::Formula substitute(const sln::Formula& f, const std::string& x, const sln::Term& by) {
  FreshNames fresh(all_vars(f));
  if (!by.is_ground()) fresh.reserve(by.var);
  fresh.reserve(x);
  return substitute(f, x, by, fresh);
}

sln::Formula rename_apart(const sln::Formula& f, FreshNames& fresh) {
  fresh.reserve(all_vars(f));
  const VarSet free = free_vars(f);
  VarSet seen;
  auto choose = [&](const std::string& v) {
    if (free.count(v) || seen.count(v)) return fresh.next(v);
    seen.insert(v);
    return v;
  };
  std::map<std::string, std::string> env;
  return rename_binders(f, env, choose);
}

sln::Formula to_nnf(const sln::Formula& f) {
  switch (f->kind) {
    case S::Kind::Eq:
    case S::Kind::PointsTo:
    case S::Kind::Truth: return f;
    case S::Kind::And: return S::conj(to_nnf(f->a), to_nnf(f->b));
    case S::Kind::Or: return S::disj(to_nnf(f->a), to_nnf(f->b));
    case S::Kind::Not: break;
    default: return S::rebind(f, f->var, to_nnf(f->a));
  }
  const S::Formula& g = f->a;
  switch (g->kind) {
    case S::Kind::Eq:
    case S::Kind::PointsTo: return f;
    case S::Kind::Truth: return S::truth(!g->truth);
    case S::Kind::Not: return to_nnf(g->a);
    case S::Kind::And: return S::disj(to_nnf(S::neg(g->a)), to_nnf(S::neg(g->b)));
    case S::Kind::Or: return S::conj(to_nnf(S::neg(g->a)), to_nnf(S::neg(g->b)));
    default: return S::quantifier(!g->is_universal(), g->var, g->lower(), to_nnf(S::neg(g->a)));
  }
}

sln::Formula to_prenex(const sln::Formula& f, FreshNames& fresh) {
  const S::Formula nnf = to_nnf(rename_apart(f, fresh));
  std::vector<SlnPrefixEntry> prefix;
  S::Formula matrix;
  pull_prefix(nnf, prefix, matrix);
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
    matrix = S::quantifier(it->universal, it->var, it->guard, matrix);
  }
  return matrix;
}

sln::Formula to_prenex(const sln::Formula& f) {
  FreshNames fresh;
  return to_prenex(f, fresh);
}

bool is_quantifier_free(const sln::Formula& f) {
  switch (f->kind) {
    case S::Kind::Eq:
    case S::Kind::PointsTo:
    case S::Kind::Truth: return true;
    case S::Kind::Not: return is_quantifier_free(f->a);
    case S::Kind::And:
    case S::Kind::Or: return is_quantifier_free(f->a) && is_quantifier_free(f->b);
    default: return false;
  }
}

bool is_prenex(const sln::Formula& f) {
  S::Formula cur = f;
  while (cur->is_binder()) cur = cur->a;
  return is_quantifier_free(cur);
}

bool has_points_to(const sln::Formula& f) {
  switch (f->kind) {
    case S::Kind::PointsTo: return true;
    case S::Kind::Eq:
    case S::Kind::Truth: return false;
    case S::Kind::And:
    case S::Kind::Or: return has_points_to(f->a) || has_points_to(f->b);
    default: return has_points_to(f->a);
  }
}

Nat max_numeral(const sln::Formula& f) {
  switch (f->kind) {
    case S::Kind::Eq:
    case S::Kind::PointsTo: return std::max(f->lhs.offset, f->rhs.offset);
    case S::Kind::Truth: return 0;
    case S::Kind::Not: return max_numeral(f->a);
    case S::Kind::And:
    case S::Kind::Or: return std::max(max_numeral(f->a), max_numeral(f->b));
    default: return std::max(f->lower(), max_numeral(f->a));
  }
}

std::size_t quantifier_count(const sln::Formula& f) {
  switch (f->kind) {
    case S::Kind::Eq:
    case S::Kind::PointsTo:
    case S::Kind::Truth: return 0;
    case S::Kind::Not: return quantifier_count(f->a);
    case S::Kind::And:
    case S::Kind::Or: return quantifier_count(f->a) + quantifier_count(f->b);
    default: return 1 + quantifier_count(f->a);
  }
}

sln::Formula alpha_normalize(const sln::Formula& f) {
  std::size_t counter = 0;
  auto choose = [&](const std::string&) { return "%" + std::to_string(counter++); };
  std::map<std::string, std::string> env;
  return rename_binders(f, env, choose);
}

bool alpha_equal(const sln::Formula& a, const sln::Formula& b) {
  return sln::equal(alpha_normalize(a), alpha_normalize(b));
}

}  // namespace slnkit
