#include "slnkit/model_checker.hpp"

#include <algorithm>
#include <deque>
#include <iterator>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "slnkit/printer.hpp"
#include "slnkit/succ_arith.hpp"
#include "slnkit/syntax.hpp"

namespace slnkit {

namespace {

// ------------------------------------------------------------ compiled ----

struct SlotTerm {
  int slot = -1;  // -1: numeral
  Nat offset = 0;
};

struct Node {
  sln::Kind kind = sln::Kind::Truth;
  SlotTerm lhs, rhs;
  bool truth = false;
  const Node* a = nullptr;
  const Node* b = nullptr;
  int slot = -1;
  Nat guard = 0;
  bool universal = false;
  bool address_var = false;  // bound variable is the address of some points-to atom
  bool value_var = false;    // bound variable is the value of some points-to atom
  std::vector<int> free_slots;
  mutable std::map<std::vector<Nat>, bool> memo;
};

struct Binding {
  bool bound = false;
  bool symbolic = false;
  Nat value = 0;
};

void union_into(std::vector<int>& out, const std::vector<int>& in) {
  std::vector<int> merged;
  std::set_union(out.begin(), out.end(), in.begin(), in.end(), std::back_inserter(merged));
  out = std::move(merged);
}

bool mentions_slot_as(const Node* n, int slot, bool address) {
  switch (n->kind) {
    case sln::Kind::PointsTo: return (address ? n->lhs.slot : n->rhs.slot) == slot;
    case sln::Kind::Eq:
    case sln::Kind::Truth: return false;
    case sln::Kind::Not: return mentions_slot_as(n->a, slot, address);
    case sln::Kind::And:
    case sln::Kind::Or: return mentions_slot_as(n->a, slot, address) || mentions_slot_as(n->b, slot, address);
    default: return mentions_slot_as(n->a, slot, address);
  }
}

}  // namespace

struct ModelChecker::Impl {
  const Heap& heap;
  HeapBound max_address;
  HeapBound max_value;
  std::deque<Node> nodes;
  int slot_count = 0;
  // Closed subformulas compile once per checker; the formula is kept alive so
  // the pointer key stays unique.
  std::unordered_map<const sln::FormulaNode*, std::pair<sln::Formula, const Node*>> closed;
  struct Root {
    sln::Formula formula;
    const Node* node;
    std::vector<std::pair<std::string, int>> free;
  };
  std::unordered_map<const sln::FormulaNode*, Root> roots;
  std::vector<Binding> env;

  explicit Impl(const Heap& h) : heap(h), max_address(h.max_address()), max_value(h.max_value()) {}

  using Scope = std::vector<std::pair<std::string, int>>;

  SlotTerm resolve(const sln::Term& t, const Scope& scope, std::vector<int>& free) {
    if (t.is_ground()) return SlotTerm{-1, t.offset};
    for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
      if (it->first == t.var) {
        if (std::find(free.begin(), free.end(), it->second) == free.end()) {
          free.insert(std::upper_bound(free.begin(), free.end(), it->second), it->second);
        }
        return SlotTerm{it->second, t.offset};
      }
    }
    throw std::logic_error("unresolved variable '" + t.var + "'");
  }

  const Node* compile(const sln::Formula& f, Scope& scope) {
    if (auto it = closed.find(f.get()); it != closed.end()) return it->second.second;
    Node n;
    n.kind = f->kind;
    switch (f->kind) {
      case sln::Kind::Eq:
      case sln::Kind::PointsTo:
        n.lhs = resolve(f->lhs, scope, n.free_slots);
        n.rhs = resolve(f->rhs, scope, n.free_slots);
        break;
      case sln::Kind::Truth: n.truth = f->truth; break;
      case sln::Kind::Not:
        n.a = compile(f->a, scope);
        n.free_slots = n.a->free_slots;
        break;
      case sln::Kind::And:
      case sln::Kind::Or:
        n.a = compile(f->a, scope);
        n.b = compile(f->b, scope);
        n.free_slots = n.a->free_slots;
        union_into(n.free_slots, n.b->free_slots);
        break;
      default: {
        n.slot = slot_count++;
        n.guard = f->lower();
        n.universal = f->is_universal();
        scope.emplace_back(f->var, n.slot);
        n.a = compile(f->a, scope);
        scope.pop_back();
        n.free_slots = n.a->free_slots;
        n.free_slots.erase(std::remove(n.free_slots.begin(), n.free_slots.end(), n.slot), n.free_slots.end());
        n.address_var = mentions_slot_as(n.a, n.slot, true);
        n.value_var = mentions_slot_as(n.a, n.slot, false);
        break;
      }
    }
    nodes.push_back(std::move(n));
    const Node* out = &nodes.back();
    if (out->free_slots.empty() && !f->is_atom()) closed.emplace(f.get(), std::make_pair(f, out));
    return out;
  }

  succ::Term value_of(const SlotTerm& t) const {
    if (t.slot < 0) return succ::ground(t.offset);
    const Binding& b = env[static_cast<std::size_t>(t.slot)];
    if (b.symbolic) return succ::variable(t.slot, t.offset);
    return succ::ground(checked_add(b.value, t.offset));
  }

  succ::Qf eval(const Node* n) {
    switch (n->kind) {
      case sln::Kind::Eq: return succ::eq(value_of(n->lhs), value_of(n->rhs));
      case sln::Kind::PointsTo: {
        const succ::Term addr = value_of(n->lhs), val = value_of(n->rhs);
        // A symbolic variable in a points-to atom lies beyond every heap bound.
        if (!addr.is_ground() || !val.is_ground()) return succ::bottom();
        return succ::constant(heap.points_to(addr.offset, val.offset));
      }
      case sln::Kind::Truth: return succ::constant(n->truth);
      case sln::Kind::Not: return succ::negate(eval(n->a));
      case sln::Kind::And: {
        succ::Qf l = eval(n->a);
        if (succ::is_false(l)) return l;
        return succ::conj(l, eval(n->b));
      }
      case sln::Kind::Or: {
        succ::Qf l = eval(n->a);
        if (succ::is_true(l)) return l;
        return succ::disj(l, eval(n->b));
      }
      default: return eval_binder(n);
    }
  }

  succ::Qf eval_binder(const Node* n) {
    std::vector<Nat> key;
    bool ground = true;
    for (int s : n->free_slots) {
      const Binding& b = env[static_cast<std::size_t>(s)];
      if (b.symbolic) {
        ground = false;
        break;
      }
      key.push_back(b.value);
    }
    if (ground) {
      if (auto it = n->memo.find(key); it != n->memo.end()) return succ::constant(it->second);
    }
    succ::Qf result = quantify(n);
    if (ground) n->memo.emplace(std::move(key), succ::is_true(result));
    return result;
  }

  succ::Qf quantify(const Node* n) {
    Binding& slot = env[static_cast<std::size_t>(n->slot)];
    const Binding saved = slot;
    HeapBound limit;
    if (n->address_var) limit = max_address;
    if (n->value_var && max_value) limit = limit ? std::max(*limit, *max_value) : max_value;

    const succ::Qf absorbing = succ::constant(!n->universal);
    std::vector<succ::Qf> parts;
    Nat tail_guard = n->guard;
    if (limit && *limit >= n->guard) {
      for (Nat k = n->guard; k <= *limit; ++k) {
        slot = Binding{true, false, k};
        succ::Qf r = eval(n->a);
        if (r->kind == absorbing->kind) {
          slot = saved;
          return absorbing;
        }
        parts.push_back(std::move(r));
      }
      tail_guard = *limit + 1;
    }
    slot = Binding{true, true, 0};
    const succ::Qf body = eval(n->a);
    slot = saved;
    parts.push_back(n->universal ? succ::eliminate_forall(n->slot, tail_guard, body)
                                 : succ::eliminate_exists(n->slot, tail_guard, body));
    return n->universal ? succ::conj(std::move(parts)) : succ::disj(std::move(parts));
  }

  const Root& root_of(const sln::Formula& f) {
    if (auto it = roots.find(f.get()); it != roots.end()) return it->second;
    Scope scope;
    for (const std::string& x : free_vars(f)) scope.emplace_back(x, slot_count++);
    const Node* node = compile(f, scope);
    return roots.emplace(f.get(), Root{f, node, scope}).first->second;
  }

  bool run(const VarAssignment& sigma, const sln::Formula& f) {
    const Root& root = root_of(f);
    env.assign(static_cast<std::size_t>(slot_count), Binding{});
    for (const auto& [x, s] : root.free) env[static_cast<std::size_t>(s)] = Binding{true, false, sigma(x)};
    const succ::Qf r = eval(root.node);
    if (r->kind != succ::QfKind::True && r->kind != succ::QfKind::False) {
      throw std::logic_error("model checking left an undecided residue");
    }
    return succ::is_true(r);
  }
};

ModelChecker::ModelChecker(Heap heap) : heap_(std::move(heap)), impl_(std::make_unique<Impl>(heap_)) {}

ModelChecker::~ModelChecker() = default;

bool ModelChecker::check(const VarAssignment& sigma, const sln::Formula& f) { return impl_->run(sigma, f); }

bool check(const VarAssignment& sigma, const Heap& h, const sln::Formula& f) {
  ModelChecker checker(h);
  return checker.check(sigma, f);
}

// ------------------------------------------------------------- staged ----

namespace {

void flatten(const sln::Formula& f, sln::Kind op, std::vector<sln::Formula>& out) {
  if (f->kind == op) {
    flatten(f->a, op, out);
    flatten(f->b, op, out);
  } else {
    out.push_back(f);
  }
}

/// On NNF input: (forall x >= g. A) /\ (forall y >= g. B) becomes
/// forall z >= g. A[z/x] /\ B[z/y], and dually exists over \/.
sln::Formula merge_quantifiers(const sln::Formula& f, FreshNames& fresh) {
  switch (f->kind) {
    case sln::Kind::Eq:
    case sln::Kind::PointsTo:
    case sln::Kind::Truth:
    case sln::Kind::Not: return f;
    case sln::Kind::And:
    case sln::Kind::Or: break;
    default: return sln::rebind(f, f->var, merge_quantifiers(f->a, fresh));
  }
  const bool is_and = f->kind == sln::Kind::And;
  std::vector<sln::Formula> items;
  flatten(f, f->kind, items);
  std::vector<sln::Formula> rest;
  std::map<Nat, std::vector<sln::Formula>> groups;
  for (const sln::Formula& g : items) {
    if (g->is_binder() && g->is_universal() == is_and) {
      groups[g->lower()].push_back(g);
    } else {
      rest.push_back(merge_quantifiers(g, fresh));
    }
  }
  auto join = [&](const sln::Formula& a, const sln::Formula& b) { return is_and ? sln::conj(a, b) : sln::disj(a, b); };
  for (const auto& [guard, binders] : groups) {
    if (binders.size() == 1) {
      rest.push_back(merge_quantifiers(binders.front(), fresh));
      continue;
    }
    const std::string z = fresh.next(binders.front()->var);
    sln::Formula body;
    for (const sln::Formula& b : binders) {
      const sln::Formula renamed = substitute(b->a, b->var, sln::var(z), fresh);
      body = body ? join(body, renamed) : renamed;
    }
    rest.push_back(sln::quantifier(is_and, z, guard, merge_quantifiers(body, fresh)));
  }
  sln::Formula out = rest.front();
  for (std::size_t i = 1; i < rest.size(); ++i) out = join(out, rest[i]);
  return out;
}

/// Node count, stopping once it passes `limit`.
std::size_t node_count(const sln::Formula& f, std::size_t limit) {
  std::size_t n = 0;
  std::vector<const sln::FormulaNode*> stack{f.get()};
  while (!stack.empty() && n <= limit) {
    const sln::FormulaNode* g = stack.back();
    stack.pop_back();
    ++n;
    if (g->a) stack.push_back(g->a.get());
    if (g->b) stack.push_back(g->b.get());
  }
  return n;
}

sln::Formula merged_prenex(const sln::Formula& f) {
  FreshNames fresh(all_vars(f));
  return to_prenex(merge_quantifiers(to_nnf(rename_apart(f, fresh)), fresh), fresh);
}

/// Whether x occurs free as the address (or value) of a points-to atom.
bool occurs_in_position(const sln::Formula& f, const std::string& x, bool address) {
  switch (f->kind) {
    case sln::Kind::PointsTo: return (address ? f->lhs : f->rhs).var == x;
    case sln::Kind::Eq:
    case sln::Kind::Truth: return false;
    case sln::Kind::Not: return occurs_in_position(f->a, x, address);
    case sln::Kind::And:
    case sln::Kind::Or: return occurs_in_position(f->a, x, address) || occurs_in_position(f->b, x, address);
    default: return f->var != x && occurs_in_position(f->a, x, address);
  }
}

sln::Formula falsify_atoms(const sln::Formula& f, const std::string& x, bool address) {
  switch (f->kind) {
    case sln::Kind::PointsTo:
      return (address ? f->lhs : f->rhs).var == x ? sln::truth(false) : f;
    case sln::Kind::Eq:
    case sln::Kind::Truth: return f;
    case sln::Kind::Not: return sln::neg(falsify_atoms(f->a, x, address));
    case sln::Kind::And: return sln::conj(falsify_atoms(f->a, x, address), falsify_atoms(f->b, x, address));
    case sln::Kind::Or: return sln::disj(falsify_atoms(f->a, x, address), falsify_atoms(f->b, x, address));
    default: return f->var == x ? f : sln::rebind(f, f->var, falsify_atoms(f->a, x, address));
  }
}

sln::Formula split_rewrite(const sln::Formula& f, HeapBound bound, bool address) {
  if (!f->is_binder()) throw std::invalid_argument("expected a quantified formula: " + render(f));
  if (!occurs_in_position(f->a, f->var, address)) return f;
  const bool universal = f->is_universal();
  sln::Formula acc;
  auto join = [&](const sln::Formula& g) {
    acc = !acc ? g : (universal ? sln::conj(acc, g) : sln::disj(acc, g));
  };
  Nat tail_guard = f->lower();
  if (bound && *bound >= f->lower()) {
    for (Nat k = f->lower(); k <= *bound; ++k) join(substitute(f->a, f->var, sln::numeral(k)));
    tail_guard = *bound + 1;
  }
  join(sln::quantifier(universal, f->var, tail_guard, falsify_atoms(f->a, f->var, address)));
  return acc;
}

/// Rewrites the leftmost innermost binder that is not yet address-free
/// (or value-free).
std::optional<sln::Formula> rewrite_first(const sln::Formula& f, HeapBound bound, bool address) {
  switch (f->kind) {
    case sln::Kind::Eq:
    case sln::Kind::PointsTo:
    case sln::Kind::Truth: return std::nullopt;
    case sln::Kind::Not:
      if (auto r = rewrite_first(f->a, bound, address)) return sln::neg(*r);
      return std::nullopt;
    case sln::Kind::And:
    case sln::Kind::Or: {
      const bool is_and = f->kind == sln::Kind::And;
      if (auto r = rewrite_first(f->a, bound, address)) return is_and ? sln::conj(*r, f->b) : sln::disj(*r, f->b);
      if (auto r = rewrite_first(f->b, bound, address)) return is_and ? sln::conj(f->a, *r) : sln::disj(f->a, *r);
      return std::nullopt;
    }
    default:
      if (auto r = rewrite_first(f->a, bound, address)) return sln::rebind(f, f->var, *r);
      if (occurs_in_position(f->a, f->var, address)) return split_rewrite(f, bound, address);
      return std::nullopt;
  }
}

}  // namespace

sln::Formula address_free_rewrite(const sln::Formula& f, HeapBound max_address) {
  return split_rewrite(f, max_address, true);
}

sln::Formula value_free_rewrite(const sln::Formula& f, HeapBound max_value) {
  return split_rewrite(f, max_value, false);
}

sln::Formula ground_points_to_eval(const Heap& h, const sln::Formula& f) {
  switch (f->kind) {
    case sln::Kind::PointsTo:
      if (!f->lhs.is_ground() || !f->rhs.is_ground()) {
        throw std::invalid_argument("points-to atom '" + render(f) + "' is not closed");
      }
      return sln::truth(h.points_to(f->lhs.offset, f->rhs.offset));
    case sln::Kind::Eq:
    case sln::Kind::Truth: return f;
    case sln::Kind::Not: return sln::neg(ground_points_to_eval(h, f->a));
    case sln::Kind::And: return sln::conj(ground_points_to_eval(h, f->a), ground_points_to_eval(h, f->b));
    case sln::Kind::Or: return sln::disj(ground_points_to_eval(h, f->a), ground_points_to_eval(h, f->b));
    default: return sln::rebind(f, f->var, ground_points_to_eval(h, f->a));
  }
}

bool check_staged(const VarAssignment& sigma, const Heap& h, const sln::Formula& f, const StageObserver& observer,
                  std::size_t node_budget) {
  auto emit = [&](const char* stage, const sln::Formula& g) {
    if (node_count(g, node_budget) > node_budget) {
      throw StagedBudgetExceeded(std::string(stage) + " stage exceeds " + std::to_string(node_budget) + " nodes");
    }
    if (observer) observer(stage, g);
  };
  sln::Formula current = f;
  for (const std::string& x : free_vars(f)) current = substitute(current, x, sln::numeral(sigma(x)));
  emit("ground", current);
  current = merged_prenex(current);
  emit("prenex", current);
  while (auto next = rewrite_first(current, h.max_address(), true)) {
    current = *next;
    emit("address-free", current);
  }
  current = merged_prenex(current);
  emit("prenex-again", current);
  while (auto next = rewrite_first(current, h.max_value(), false)) {
    current = *next;
    emit("value-free", current);
  }
  current = ground_points_to_eval(h, current);
  emit("heap-free", current);
  return decide_sentence(current);
}

}  // namespace slnkit
