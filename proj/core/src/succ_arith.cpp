#include "slnkit/succ_arith.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>

#include "slnkit/printer.hpp"
#include "slnkit/syntax.hpp"

namespace slnkit::succ {

namespace {

using Offset = std::int64_t;

const Qf kTrue = std::make_shared<const QfNode>(QfNode{QfKind::True, {}, {}});
const Qf kFalse = std::make_shared<const QfNode>(QfNode{QfKind::False, {}, {}});

Qf literal(Literal lit) { return std::make_shared<const QfNode>(QfNode{QfKind::Lit, lit, {}}); }

/// a + pa = b + pb over the integers, with a, b variables or -1 for ground.
Qf linear_eq(int a, Offset pa, int b, Offset pb) {
  if (a < 0 && b < 0) return constant(pa == pb);
  if (a == b) return constant(pa == pb);
  if (a < 0) {
    std::swap(a, b);
    std::swap(pa, pb);
  }
  if (b < 0) {
    // a = pb - pa
    if (pb < pa) return kFalse;
    return literal(Literal{LitKind::Eq, variable(a), ground(static_cast<Nat>(pb - pa)), 0});
  }
  if (a > b) {
    std::swap(a, b);
    std::swap(pa, pb);
  }
  const Offset m = std::min(pa, pb);
  return literal(Literal{LitKind::Eq, variable(a, static_cast<Nat>(pa - m)), variable(b, static_cast<Nat>(pb - m)), 0});
}

Offset signed_offset(const Term& t) { return static_cast<Offset>(t.offset); }

/// Replacement x := y + e (y < 0 for a ground value e).
struct Shift {
  int y;
  Offset e;
};

Qf substitute_literal(const Literal& lit, int x, const Shift& by) {
  auto side = [&](const Term& t) -> std::pair<int, Offset> {
    if (t.var == x) return {by.y, signed_offset(t) + by.e};
    return {t.var, signed_offset(t)};
  };
  switch (lit.kind) {
    case LitKind::Eq:
    case LitKind::Neq: {
      const auto [a, pa] = side(lit.lhs);
      const auto [b, pb] = side(lit.rhs);
      Qf r = linear_eq(a, pa, b, pb);
      return lit.kind == LitKind::Eq ? r : negate(r);
    }
    case LitKind::Ge:
    case LitKind::Lt: {
      const auto [a, pa] = side(lit.lhs);
      const Offset m = static_cast<Offset>(lit.bound) - pa;
      if (a < 0) return constant((m <= 0) == (lit.kind == LitKind::Ge));
      if (lit.kind == LitKind::Ge) return m <= 0 ? kTrue : ge(a, static_cast<Nat>(m));
      return m <= 0 ? kFalse : lt(a, static_cast<Nat>(m));
    }
  }
  return kFalse;
}

Qf substitute(const Qf& f, int x, const Shift& by) {
  switch (f->kind) {
    case QfKind::True:
    case QfKind::False: return f;
    case QfKind::Lit: return f->lit.mentions(x) ? substitute_literal(f->lit, x, by) : f;
    case QfKind::And:
    case QfKind::Or: {
      std::vector<Qf> kids;
      kids.reserve(f->kids.size());
      for (const Qf& k : f->kids) kids.push_back(substitute(k, x, by));
      return f->kind == QfKind::And ? conj(std::move(kids)) : disj(std::move(kids));
    }
  }
  return f;
}

using Cube = std::vector<Literal>;

std::vector<Cube> cubes(const Qf& f) {
  switch (f->kind) {
    case QfKind::True: return {Cube{}};
    case QfKind::False: return {};
    case QfKind::Lit: return {Cube{f->lit}};
    case QfKind::Or: {
      std::vector<Cube> out;
      for (const Qf& k : f->kids) {
        auto sub = cubes(k);
        out.insert(out.end(), sub.begin(), sub.end());
      }
      return out;
    }
    case QfKind::And: {
      std::vector<Cube> acc{Cube{}};
      for (const Qf& k : f->kids) {
        const auto sub = cubes(k);
        std::vector<Cube> next;
        next.reserve(acc.size() * sub.size());
        for (const Cube& c : acc) {
          for (const Cube& d : sub) {
            Cube merged = c;
            merged.insert(merged.end(), d.begin(), d.end());
            next.push_back(std::move(merged));
          }
        }
        acc = std::move(next);
        if (acc.empty()) break;
      }
      return acc;
    }
  }
  return {};
}

Qf cube_formula(const Cube& lits) {
  std::vector<Qf> parts;
  parts.reserve(lits.size());
  for (const Literal& l : lits) parts.push_back(literal(l));
  return conj(std::move(parts));
}

/// exists x >= guard over a conjunction of literals that all mention x.
Qf eliminate_cube(int x, Nat guard, const Cube& lits) {
  for (std::size_t i = 0; i < lits.size(); ++i) {
    const Literal& l = lits[i];
    if (l.kind != LitKind::Eq) continue;
    // x + p = other + q
    const bool x_left = l.lhs.var == x;
    const Term& xs = x_left ? l.lhs : l.rhs;
    const Term& other = x_left ? l.rhs : l.lhs;
    const Offset e = signed_offset(other) - signed_offset(xs);
    Cube rest;
    for (std::size_t j = 0; j < lits.size(); ++j) {
      if (j != i) rest.push_back(lits[j]);
    }
    const Shift by{other.var, e};
    std::vector<Qf> parts;
    if (other.is_ground()) {
      if (e < 0 || e < static_cast<Offset>(guard)) return kFalse;
    } else {
      // y + e >= max(guard, 0)
      const Offset need = static_cast<Offset>(guard) - e;
      if (need > 0) parts.push_back(ge(other.var, static_cast<Nat>(need)));
    }
    parts.push_back(substitute(cube_formula(rest), x, by));
    return conj(std::move(parts));
  }

  Nat low = guard;
  std::optional<Nat> high;
  std::vector<Literal> diseqs;
  for (const Literal& l : lits) {
    switch (l.kind) {
      case LitKind::Ge: low = std::max(low, l.bound); break;
      case LitKind::Lt: high = high ? std::min(*high, l.bound) : l.bound; break;
      case LitKind::Neq: diseqs.push_back(l); break;
      case LitKind::Eq: break;
    }
  }
  if (high && *high <= low) return kFalse;
  // Each disequation excludes at most one value of x.
  if (!high || *high - low > diseqs.size()) return kTrue;
  std::vector<Qf> options;
  const Qf neqs = cube_formula(diseqs);
  for (Nat v = low; v < *high; ++v) options.push_back(substitute(neqs, x, Shift{-1, static_cast<Offset>(v)}));
  return disj(std::move(options));
}

void flatten_into(QfKind kind, const Qf& f, std::vector<Qf>& out) {
  if (f->kind == kind) {
    for (const Qf& k : f->kids) flatten_into(kind, k, out);
  } else {
    out.push_back(f);
  }
}

Qf junction(QfKind kind, std::vector<Qf> parts) {
  const Qf& unit = kind == QfKind::And ? kTrue : kFalse;
  const Qf& zero = kind == QfKind::And ? kFalse : kTrue;
  std::vector<Qf> flat;
  for (const Qf& p : parts) flatten_into(kind, p, flat);
  std::vector<Qf> kept;
  kept.reserve(flat.size());
  for (const Qf& p : flat) {
    if (p->kind == zero->kind) return zero;
    if (p->kind == unit->kind) continue;
    if (p->kind == QfKind::Lit &&
        std::any_of(kept.begin(), kept.end(), [&](const Qf& q) { return q->kind == QfKind::Lit && q->lit == p->lit; })) {
      continue;
    }
    kept.push_back(p);
  }
  if (kept.empty()) return unit;
  if (kept.size() == 1) return kept.front();
  return std::make_shared<const QfNode>(QfNode{kind, {}, std::move(kept)});
}

}  // namespace

Qf top() { return kTrue; }
Qf bottom() { return kFalse; }
Qf constant(bool value) { return value ? kTrue : kFalse; }

Qf eq(Term l, Term r) { return linear_eq(l.var, signed_offset(l), r.var, signed_offset(r)); }

Qf neq(Term l, Term r) { return negate(eq(l, r)); }

Qf ge(int v, Nat m) {
  if (m == 0) return kTrue;
  return literal(Literal{LitKind::Ge, variable(v), {}, m});
}

Qf lt(int v, Nat m) {
  if (m == 0) return kFalse;
  return literal(Literal{LitKind::Lt, variable(v), {}, m});
}

Qf conj(std::vector<Qf> parts) { return junction(QfKind::And, std::move(parts)); }
Qf disj(std::vector<Qf> parts) { return junction(QfKind::Or, std::move(parts)); }
Qf conj(Qf l, Qf r) { return conj(std::vector<Qf>{std::move(l), std::move(r)}); }
Qf disj(Qf l, Qf r) { return disj(std::vector<Qf>{std::move(l), std::move(r)}); }

Qf negate(const Qf& f) {
  switch (f->kind) {
    case QfKind::True: return kFalse;
    case QfKind::False: return kTrue;
    case QfKind::Lit: {
      Literal l = f->lit;
      switch (l.kind) {
        case LitKind::Eq: l.kind = LitKind::Neq; break;
        case LitKind::Neq: l.kind = LitKind::Eq; break;
        case LitKind::Ge: l.kind = LitKind::Lt; break;
        case LitKind::Lt: l.kind = LitKind::Ge; break;
      }
      return literal(l);
    }
    case QfKind::And:
    case QfKind::Or: {
      std::vector<Qf> kids;
      kids.reserve(f->kids.size());
      for (const Qf& k : f->kids) kids.push_back(negate(k));
      return f->kind == QfKind::And ? disj(std::move(kids)) : conj(std::move(kids));
    }
  }
  return f;
}

bool is_true(const Qf& f) { return f->kind == QfKind::True; }
bool is_false(const Qf& f) { return f->kind == QfKind::False; }

bool mentions(const Qf& f, int v) {
  if (f->kind == QfKind::Lit) return f->lit.mentions(v);
  return std::any_of(f->kids.begin(), f->kids.end(), [v](const Qf& k) { return mentions(k, v); });
}

std::size_t size(const Qf& f) {
  std::size_t n = 1;
  for (const Qf& k : f->kids) n += size(k);
  return n;
}

Qf eliminate_exists(int v, Nat guard, const Qf& f) {
  if (!mentions(f, v)) return f;
  switch (f->kind) {
    case QfKind::Or: {
      std::vector<Qf> parts;
      parts.reserve(f->kids.size());
      for (const Qf& k : f->kids) parts.push_back(eliminate_exists(v, guard, k));
      return disj(std::move(parts));
    }
    case QfKind::And: {
      std::vector<Qf> with, without;
      for (const Qf& k : f->kids) (mentions(k, v) ? with : without).push_back(k);
      std::vector<Qf> options;
      for (const Cube& c : cubes(conj(std::move(with)))) options.push_back(eliminate_cube(v, guard, c));
      without.push_back(disj(std::move(options)));
      return conj(std::move(without));
    }
    case QfKind::Lit: return eliminate_cube(v, guard, Cube{f->lit});
    default: return f;
  }
}

Qf eliminate_forall(int v, Nat guard, const Qf& f) { return negate(eliminate_exists(v, guard, negate(f))); }

bool evaluate(const Qf& f, const std::vector<Nat>& values) {
  auto value = [&](const Term& t) -> Nat {
    if (t.is_ground()) return t.offset;
    return values.at(static_cast<std::size_t>(t.var)) + t.offset;
  };
  switch (f->kind) {
    case QfKind::True: return true;
    case QfKind::False: return false;
    case QfKind::Lit:
      switch (f->lit.kind) {
        case LitKind::Eq: return value(f->lit.lhs) == value(f->lit.rhs);
        case LitKind::Neq: return value(f->lit.lhs) != value(f->lit.rhs);
        case LitKind::Ge: return value(f->lit.lhs) >= f->lit.bound;
        case LitKind::Lt: return value(f->lit.lhs) < f->lit.bound;
      }
      return false;
    case QfKind::And:
      return std::all_of(f->kids.begin(), f->kids.end(), [&](const Qf& k) { return evaluate(k, values); });
    case QfKind::Or:
      return std::any_of(f->kids.begin(), f->kids.end(), [&](const Qf& k) { return evaluate(k, values); });
  }
  return false;
}

Qf from_sln(const sln::Formula& f, const std::function<int(const std::string&)>& index) {
  auto term = [&](const sln::Term& t) { return t.is_ground() ? ground(t.offset) : variable(index(t.var), t.offset); };
  switch (f->kind) {
    case sln::Kind::Eq: return eq(term(f->lhs), term(f->rhs));
    case sln::Kind::Truth: return constant(f->truth);
    case sln::Kind::Not: return negate(from_sln(f->a, index));
    case sln::Kind::And: return conj(from_sln(f->a, index), from_sln(f->b, index));
    case sln::Kind::Or: return disj(from_sln(f->a, index), from_sln(f->b, index));
    case sln::Kind::PointsTo:
      throw std::invalid_argument("points-to atom '" + render(f) + "' is not successor arithmetic");
    default: throw std::invalid_argument("expected a quantifier-free formula: " + render(f));
  }
}

sln::Formula to_sln(const Qf& f, const std::function<std::string(int)>& name) {
  auto term = [&](const Term& t) { return t.is_ground() ? sln::numeral(t.offset) : sln::var(name(t.var), t.offset); };
  auto fold = [](std::vector<sln::Formula> parts, bool conjunction) {
    sln::Formula acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) acc = conjunction ? sln::conj(acc, parts[i]) : sln::disj(acc, parts[i]);
    return acc;
  };
  switch (f->kind) {
    case QfKind::True: return sln::truth(true);
    case QfKind::False: return sln::truth(false);
    case QfKind::Lit: {
      const Literal& l = f->lit;
      switch (l.kind) {
        case LitKind::Eq: return sln::eq(term(l.lhs), term(l.rhs));
        case LitKind::Neq: return sln::neg(sln::eq(term(l.lhs), term(l.rhs)));
        case LitKind::Ge:
        case LitKind::Lt: {
          std::vector<sln::Formula> parts;
          for (Nat i = 0; i < l.bound; ++i) {
            sln::Formula e = sln::eq(term(l.lhs), sln::numeral(i));
            parts.push_back(l.kind == LitKind::Ge ? sln::neg(e) : e);
          }
          return fold(std::move(parts), l.kind == LitKind::Ge);
        }
      }
      break;
    }
    case QfKind::And:
    case QfKind::Or: {
      std::vector<sln::Formula> parts;
      for (const Qf& k : f->kids) parts.push_back(to_sln(k, name));
      return fold(std::move(parts), f->kind == QfKind::And);
    }
  }
  return sln::truth(false);
}

}  // namespace slnkit::succ

namespace slnkit {

namespace {

sln::Formula eliminate_binder(const sln::Formula& f) {
  VarSet names = free_vars(f->a);
  names.insert(f->var);
  std::vector<std::string> by_index(names.begin(), names.end());
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < by_index.size(); ++i) index[by_index[i]] = static_cast<int>(i);

  const succ::Qf body = succ::from_sln(f->a, [&](const std::string& n) { return index.at(n); });
  const int x = index.at(f->var);
  const succ::Qf result =
      f->is_universal() ? succ::eliminate_forall(x, f->lower(), body) : succ::eliminate_exists(x, f->lower(), body);
  return succ::to_sln(result, [&](int i) { return by_index.at(static_cast<std::size_t>(i)); });
}

std::optional<sln::Formula> eliminate_first(const sln::Formula& f) {
  if (f->is_atom()) return std::nullopt;
  if (f->is_binder()) {
    if (auto inner = eliminate_first(f->a)) return sln::rebind(f, f->var, *inner);
    return eliminate_binder(f);
  }
  if (f->kind == sln::Kind::Not) {
    if (auto inner = eliminate_first(f->a)) return sln::neg(*inner);
    return std::nullopt;
  }
  if (auto left = eliminate_first(f->a)) {
    return f->kind == sln::Kind::And ? sln::conj(*left, f->b) : sln::disj(*left, f->b);
  }
  if (auto right = eliminate_first(f->b)) {
    return f->kind == sln::Kind::And ? sln::conj(f->a, *right) : sln::disj(f->a, *right);
  }
  return std::nullopt;
}

}  // namespace

sln::Formula eliminate_innermost(const sln::Formula& f) { return eliminate_first(f).value_or(f); }

bool decide_sentence(const sln::Formula& f, const QeObserver& observer) {
  if (has_points_to(f)) throw std::invalid_argument("successor arithmetic sentences cannot contain points-to atoms");
  if (!free_vars(f).empty()) {
    throw std::invalid_argument("successor arithmetic sentence has free variable '" + *free_vars(f).begin() + "'");
  }
  sln::Formula current = f;
  while (!is_quantifier_free(current)) {
    current = eliminate_innermost(current);
    if (observer) observer(current);
  }
  const succ::Qf residue = succ::from_sln(current, [](const std::string& n) -> int {
    throw std::logic_error("unexpected free variable '" + n + "' after elimination");
  });
  return succ::is_true(residue);
}

}  // namespace slnkit
