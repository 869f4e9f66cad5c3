#pragma once
// Independent reference implementations used as test oracles. They share only
// the AST types with the library.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "slnkit/fol.hpp"
#include "slnkit/heap.hpp"
#include "slnkit/pa.hpp"
#include "slnkit/sln.hpp"

namespace oracle {

using slnkit::Nat;
using Env = std::map<std::string, Nat>;

inline Nat lookup(const Env& env, const std::string& x) {
  auto it = env.find(x);
  return it == env.end() ? 0 : it->second;
}

// ------------------------------------------------------------------ PA ----

inline Nat pa_term(const Env& env, const slnkit::pa::Term& t) {
  using slnkit::pa::TermKind;
  switch (t->kind) {
    case TermKind::Var: return lookup(env, t->name);
    case TermKind::Zero: return 0;
    case TermKind::Succ: return pa_term(env, t->lhs) + 1;
    case TermKind::Plus: return pa_term(env, t->lhs) + pa_term(env, t->rhs);
    case TermKind::Times: return pa_term(env, t->lhs) * pa_term(env, t->rhs);
  }
  return 0;
}

/// Expands every bounded quantifier into a finite conjunction or disjunction
/// first, then evaluates the quantifier-free result.
struct Expanded {
  enum Kind { Eq, Leq, Not, And, Or, True, False } kind;
  slnkit::pa::Term lhs, rhs;
  Env env;
  std::vector<Expanded> kids;
};

inline Expanded expand(const Env& env, const slnkit::pa::Formula& f) {
  using K = slnkit::pa::Kind;
  switch (f->kind) {
    case K::Eq: return {Expanded::Eq, f->lhs, f->rhs, env, {}};
    case K::Leq: return {Expanded::Leq, f->lhs, f->rhs, env, {}};
    case K::Not: return {Expanded::Not, nullptr, nullptr, {}, {expand(env, f->a)}};
    case K::And: return {Expanded::And, nullptr, nullptr, {}, {expand(env, f->a), expand(env, f->b)}};
    case K::Or: return {Expanded::Or, nullptr, nullptr, {}, {expand(env, f->a), expand(env, f->b)}};
    case K::BoundedForall:
    case K::BoundedExists: {
      Expanded out{f->kind == K::BoundedForall ? Expanded::And : Expanded::Or, nullptr, nullptr, {}, {}};
      const Nat bound = pa_term(env, f->bound);
      for (Nat k = 0; k <= bound; ++k) {
        Env inner = env;
        inner[f->var] = k;
        out.kids.push_back(expand(inner, f->a));
      }
      return out;
    }
    case K::ExistsEq: {
      Env inner = env;
      inner[f->var] = pa_term(env, f->bound);
      return expand(inner, f->a);
    }
    default: break;
  }
  return {Expanded::False, nullptr, nullptr, {}, {}};
}

inline bool evaluate(const Expanded& e) {
  switch (e.kind) {
    case Expanded::Eq: return pa_term(e.env, e.lhs) == pa_term(e.env, e.rhs);
    case Expanded::Leq: return pa_term(e.env, e.lhs) <= pa_term(e.env, e.rhs);
    case Expanded::Not: return !evaluate(e.kids[0]);
    case Expanded::And:
      return std::all_of(e.kids.begin(), e.kids.end(), [](const Expanded& k) { return evaluate(k); });
    case Expanded::Or:
      return std::any_of(e.kids.begin(), e.kids.end(), [](const Expanded& k) { return evaluate(k); });
    case Expanded::True: return true;
    case Expanded::False: return false;
  }
  return false;
}

inline bool pa_formula(const Env& env, const slnkit::pa::Formula& f) { return evaluate(expand(env, f)); }

// ----------------------------------------------------------------- SLN ----

inline Nat sln_term(const Env& env, const slnkit::sln::Term& t) {
  return (t.var.empty() ? 0 : lookup(env, t.var)) + t.offset;
}

inline Nat sln_depth(const slnkit::sln::Formula& f) {
  using K = slnkit::sln::Kind;
  switch (f->kind) {
    case K::Eq:
    case K::PointsTo:
    case K::Truth: return 0;
    case K::Not: return sln_depth(f->a);
    case K::And:
    case K::Or: return std::max(sln_depth(f->a), sln_depth(f->b));
    default: return 1 + sln_depth(f->a);
  }
}

/// Truth with quantifiers ranging over 0..top. With gap = 0 every top is
/// `bound`; otherwise a quantifier of depth k inside a scope with ceiling c
/// ranges up to c + gap * 2^k and its body sees that as its ceiling.
inline bool sln_bounded(const Env& env, const slnkit::Heap& h, const slnkit::sln::Formula& f, Nat bound,
                        Nat gap = 0) {
  using K = slnkit::sln::Kind;
  switch (f->kind) {
    case K::Eq: return sln_term(env, f->lhs) == sln_term(env, f->rhs);
    case K::PointsTo: return h.points_to(sln_term(env, f->lhs), sln_term(env, f->rhs));
    case K::Truth: return f->truth;
    case K::Not: return !sln_bounded(env, h, f->a, bound, gap);
    case K::And: return sln_bounded(env, h, f->a, bound, gap) && sln_bounded(env, h, f->b, bound, gap);
    case K::Or: return sln_bounded(env, h, f->a, bound, gap) || sln_bounded(env, h, f->b, bound, gap);
    case K::Exists:
    case K::Forall:
    case K::GuardedExists:
    case K::GuardedForall: {
      const bool universal = f->kind == K::Forall || f->kind == K::GuardedForall;
      const Nat from = (f->kind == K::GuardedExists || f->kind == K::GuardedForall) ? f->guard : 0;
      const Nat top = bound + (gap << sln_depth(f));
      Env inner = env;
      for (Nat k = from; k <= top; ++k) {
        inner[f->var] = k;
        if (sln_bounded(inner, h, f->a, top, gap) != universal) return !universal;
      }
      return universal;
    }
  }
  return false;
}

struct FormulaStats {
  Nat max_constant = 0;  // numerals, offsets and guards
  Nat max_offset = 0;
  Nat quantifiers = 0;
};

inline void stats(const slnkit::sln::Formula& f, FormulaStats& s) {
  using K = slnkit::sln::Kind;
  auto term = [&](const slnkit::sln::Term& t) {
    s.max_constant = std::max(s.max_constant, t.offset);
    s.max_offset = std::max(s.max_offset, t.offset);
  };
  switch (f->kind) {
    case K::Eq:
    case K::PointsTo:
      term(f->lhs);
      term(f->rhs);
      return;
    case K::Truth: return;
    case K::Not: stats(f->a, s); return;
    case K::And:
    case K::Or:
      stats(f->a, s);
      stats(f->b, s);
      return;
    default:
      ++s.quantifiers;
      s.max_constant = std::max(s.max_constant, f->guard);
      stats(f->a, s);
      return;
  }
}

/// B = max(heap addresses and values, constants in A, assigned values)
///     + number of quantifiers + largest successor offset + 1.
inline Nat sln_bound(const Env& env, const slnkit::Heap& h, const slnkit::sln::Formula& f) {
  FormulaStats s;
  stats(f, s);
  Nat m = s.max_constant;
  for (const auto& [a, v] : h.cells()) m = std::max({m, a, v});
  for (const auto& [x, v] : env) m = std::max(m, v);
  return m + s.quantifiers + s.max_offset + 1;
}

struct Verdict {
  bool value = false;
  bool stable = false;  // same verdict at B and 2B+7
};

/// Graded bounded evaluation: the ceiling starts at B and each quantifier of
/// depth k adds (c+1) * 2^k, c the largest constant in A. A flat range 0..B
/// is unsound (exists w. forall x. !(s(w) = x) holds at w = B) and the
/// 2B+7 check cannot detect it.
inline Verdict sln_brute_force(const Env& env, const slnkit::Heap& h, const slnkit::sln::Formula& f) {
  const Nat b = sln_bound(env, h, f);
  FormulaStats s;
  stats(f, s);
  const bool small = sln_bounded(env, h, f, b, s.max_constant + 1);
  const bool large = sln_bounded(env, h, f, 2 * b + 7, s.max_constant + 1);
  return {small, small == large};
}

// ---------------------------------------------------------------- heaps ----

/// h_n cell by cell from the piecewise definition.
inline std::map<Nat, Nat> table_cells(Nat n) {
  std::map<Nat, Nat> h;
  const Nat a = n * n + 1, m = n + 1;
  const Nat c1 = 4 * a * a, c2 = c1 + 4 * m * m;
  for (Nat i = 0; i < a * a; ++i) {
    h[4 * i] = 0;
    h[4 * i + 1] = i % a + 3;
    h[4 * i + 2] = i / a + 3;
    h[4 * i + 3] = h[4 * i + 1] + h[4 * i + 2] - 3;
  }
  for (Nat i = 0; i < m * m; ++i) {
    h[c1 + 4 * i] = 1;
    h[c1 + 4 * i + 1] = i % m + 3;
    h[c1 + 4 * i + 2] = i / m + 3;
    h[c1 + 4 * i + 3] = (h[c1 + 4 * i + 1] - 3) * (h[c1 + 4 * i + 2] - 3) + 3;
  }
  for (Nat i = 0; i < m * m; ++i) {
    h[c2 + 3 * i] = 2;
    h[c2 + 3 * i + 1] = i % m + 3;
    h[c2 + 3 * i + 2] = (i / m < i % m) ? n + 3 : i / m + 3;
  }
  return h;
}

// ------------------------------------------------------------------ FOL ----

inline bool fol_formula(const std::set<Nat>& universe, const std::set<std::pair<Nat, Nat>>& relation,
                        const Env& env, const slnkit::fol::Formula& f) {
  using K = slnkit::fol::Kind;
  switch (f->kind) {
    case K::Eq: return lookup(env, f->x) == lookup(env, f->y);
    case K::Rel: return relation.count({lookup(env, f->x), lookup(env, f->y)}) != 0;
    case K::Not: return !fol_formula(universe, relation, env, f->a);
    case K::And: return fol_formula(universe, relation, env, f->a) && fol_formula(universe, relation, env, f->b);
    case K::Exists: {
      Env inner = env;
      for (Nat u : universe) {
        inner[f->x] = u;
        if (fol_formula(universe, relation, inner, f->a)) return true;
      }
      return false;
    }
  }
  return false;
}

}  // namespace oracle
