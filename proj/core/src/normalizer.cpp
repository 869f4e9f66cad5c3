#include "slnkit/normalizer.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

#include "slnkit/syntax.hpp"

namespace slnkit {

namespace {

using pa::Formula;
using pa::Kind;
using pa::Term;
using pa::TermKind;

using Path = std::vector<int>;

bool is_op(const Term& t) { return t->kind == TermKind::Plus || t->kind == TermKind::Times; }

// Preorder search for the first + / * node without + / * below it.
bool find_innermost(const Term& t, Path& path) {
  if (is_op(t) && !pa::has_arith(t->lhs) && !pa::has_arith(t->rhs)) return true;
  if (t->kind == TermKind::Succ || is_op(t)) {
    path.push_back(0);
    if (find_innermost(t->lhs, path)) return true;
    path.pop_back();
  }
  if (is_op(t)) {
    path.push_back(1);
    if (find_innermost(t->rhs, path)) return true;
    path.pop_back();
  }
  return false;
}

const Term& at_path(const Term& t, const Path& path, std::size_t i = 0) {
  if (i == path.size()) return t;
  return at_path(path[i] == 0 ? t->lhs : t->rhs, path, i + 1);
}

Term replace_at(const Term& t, const Path& path, const Term& by, std::size_t i = 0) {
  if (i == path.size()) return by;
  switch (t->kind) {
    case TermKind::Succ: return pa::succ(replace_at(t->lhs, path, by, i + 1));
    case TermKind::Plus:
      return path[i] == 0 ? pa::plus(replace_at(t->lhs, path, by, i + 1), t->rhs)
                          : pa::plus(t->lhs, replace_at(t->rhs, path, by, i + 1));
    case TermKind::Times:
      return path[i] == 0 ? pa::times(replace_at(t->lhs, path, by, i + 1), t->rhs)
                          : pa::times(t->lhs, replace_at(t->rhs, path, by, i + 1));
    default: throw std::logic_error("path leaves the term");
  }
}

struct Entry {
  Kind kind;
  std::string var;
  Term bound;
};

class Extraction {
 public:
  Extraction(std::vector<Entry> prefix, Formula matrix) : prefix_(std::move(prefix)), matrix_(std::move(matrix)) {}

  Formula assemble() const {
    Formula f = matrix_;
    for (auto it = prefix_.rbegin(); it != prefix_.rend(); ++it) {
      switch (it->kind) {
        case Kind::BoundedForall: f = pa::bounded_forall(it->var, it->bound, f); break;
        case Kind::BoundedExists: f = pa::bounded_exists(it->var, it->bound, f); break;
        case Kind::ExistsEq: f = pa::exists_eq(it->var, it->bound, f); break;
        default: throw std::logic_error("unexpected binder in bounded prefix");
      }
    }
    return f;
  }

  /// Performs one extraction; false when no + / * is left outside definitions.
  bool step(FreshNames& fresh) {
    // Prefix bounds, in order.
    for (std::size_t i = 0; i < prefix_.size(); ++i) {
      Entry& e = prefix_[i];
      Path path;
      if (e.kind == Kind::ExistsEq) {
        // The top operation of a definition stays; look inside its operands.
        if (!is_op(e.bound)) continue;
        for (int side : {0, 1}) {
          path = {side};
          if (find_innermost(side == 0 ? e.bound->lhs : e.bound->rhs, path)) {
            extract_from_prefix(i, path, fresh);
            return true;
          }
        }
        continue;
      }
      if (find_innermost(e.bound, path)) {
        extract_from_prefix(i, path, fresh);
        return true;
      }
    }
    // Matrix atoms in preorder.
    std::optional<Term> found;
    std::string z;
    matrix_ = rewrite_matrix(matrix_, found, z, fresh);
    if (!found) return false;
    prefix_.push_back({Kind::ExistsEq, z, *found});
    return true;
  }

 private:
  void extract_from_prefix(std::size_t i, const Path& path, FreshNames& fresh) {
    const Term op = at_path(prefix_[i].bound, path);
    const std::string z = fresh.next("z");
    prefix_[i].bound = replace_at(prefix_[i].bound, path, pa::var(z));
    // Longest prefix whose bounds do not mention z ends right before entry i.
    prefix_.insert(prefix_.begin() + static_cast<std::ptrdiff_t>(i), Entry{Kind::ExistsEq, z, op});
  }

  Formula rewrite_matrix(const Formula& f, std::optional<Term>& found, std::string& z, FreshNames& fresh) {
    if (found) return f;
    switch (f->kind) {
      case Kind::Eq:
      case Kind::Leq: {
        Term lhs = f->lhs, rhs = f->rhs;
        Path path;
        if (find_innermost(lhs, path)) {
          found = at_path(lhs, path);
          z = fresh.next("z");
          lhs = replace_at(lhs, path, pa::var(z));
        } else if (path.clear(), find_innermost(rhs, path)) {
          found = at_path(rhs, path);
          z = fresh.next("z");
          rhs = replace_at(rhs, path, pa::var(z));
        } else {
          return f;
        }
        return f->kind == Kind::Eq ? pa::eq(lhs, rhs) : pa::leq(lhs, rhs);
      }
      case Kind::Not: {
        Formula a = rewrite_matrix(f->a, found, z, fresh);
        return a == f->a ? f : pa::neg(a);
      }
      case Kind::And:
      case Kind::Or: {
        Formula a = rewrite_matrix(f->a, found, z, fresh);
        Formula b = rewrite_matrix(f->b, found, z, fresh);
        if (a == f->a && b == f->b) return f;
        return f->kind == Kind::And ? pa::conj(a, b) : pa::disj(a, b);
      }
      default: throw std::logic_error("matrix is not quantifier-free");
    }
  }

  std::vector<Entry> prefix_;
  Formula matrix_;
};

// Definitions exists (z = t) with no top-level operation cannot appear in a
// normal form; they are replaced by substitution.
Formula inline_trivial_definitions(const Formula& f, FreshNames& fresh) {
  switch (f->kind) {
    case Kind::Eq:
    case Kind::Leq: return f;
    case Kind::Not: return pa::neg(inline_trivial_definitions(f->a, fresh));
    case Kind::And: return pa::conj(inline_trivial_definitions(f->a, fresh), inline_trivial_definitions(f->b, fresh));
    case Kind::Or: return pa::disj(inline_trivial_definitions(f->a, fresh), inline_trivial_definitions(f->b, fresh));
    case Kind::ExistsEq:
      if (!is_op(f->bound)) return inline_trivial_definitions(substitute(f->a, f->var, f->bound, fresh), fresh);
      [[fallthrough]];
    default: return pa::rebind(f, f->var, f->bound, inline_trivial_definitions(f->a, fresh));
  }
}

}  // namespace

pa::Formula normalize_bounded(const pa::Formula& f, std::vector<pa::Formula>* steps) {
  if (!is_evaluable(f)) throw std::invalid_argument("normalize_bounded: formula has unbounded quantifiers");
  FreshNames fresh(all_vars(f));
  const Formula prenex = to_prenex(inline_trivial_definitions(f, fresh), fresh);

  std::vector<Entry> prefix;
  Formula cur = prenex;
  while (cur->is_binder()) {
    prefix.push_back({cur->kind, cur->var, cur->bound});
    cur = cur->a;
  }
  Extraction ex(std::move(prefix), to_dnf(cur));
  if (steps) steps->push_back(ex.assemble());
  while (ex.step(fresh)) {
    if (steps) steps->push_back(ex.assemble());
  }
  return ex.assemble();
}

pa::Formula box_translate(const pa::Formula& f) {
  if (!is_pi01(f)) throw std::invalid_argument("box_translate: input is not a Pi^0_1 formula (forall x. bounded)");
  return pa::forall(f->var, normalize_bounded(f->a));
}

}  // namespace slnkit
