#include "slnkit/generators.hpp"

#include <algorithm>

namespace slnkit {

Generator::Generator(std::uint64_t seed, GeneratorProfile profile) : rng_(seed), profile_(profile) {}

Nat Generator::uniform(Nat lo, Nat hi) { return std::uniform_int_distribution<Nat>(lo, hi)(rng_); }

bool Generator::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

std::string Generator::fresh_binder(const std::vector<std::string>& scope, const char* pool) {
  std::vector<std::string> options;
  for (const char* c = pool; *c; ++c) {
    std::string name(1, *c);
    if (std::find(scope.begin(), scope.end(), name) == scope.end()) options.push_back(name);
  }
  if (options.empty()) return std::string(1, pool[0]) + std::to_string(scope.size());
  return options[uniform(0, options.size() - 1)];
}

// ----------------------------------------------------------------- PA ----

pa::Term Generator::pa_flat_term(const std::vector<std::string>& vars) {
  pa::Term base = vars.empty() || coin(0.3) ? pa::zero() : pa::var(vars[uniform(0, vars.size() - 1)]);
  const Nat succs = base->kind == pa::TermKind::Zero ? uniform(0, profile_.max_numeral) : (coin(0.7) ? 0 : 1);
  return pa::succ_n(base, succs);
}

pa::Term Generator::pa_term(const std::vector<std::string>& vars, std::size_t depth) {
  if (depth == 0 || coin(0.5)) return pa_flat_term(vars);
  pa::Term l = pa_term(vars, depth - 1), r = pa_term(vars, depth - 1);
  return coin(0.65) ? pa::plus(l, r) : pa::times(l, r);
}

pa::Formula Generator::bounded_pa_rec(std::vector<std::string>& scope, std::size_t depth) {
  if (depth == 0 || coin(0.25)) {
    pa::Term l = pa_term(scope, 2), r = pa_term(scope, 2);
    return coin(0.5) ? pa::leq(l, r) : pa::eq(l, r);
  }
  const Nat choice = uniform(0, 4);
  switch (choice) {
    case 0: return pa::neg(bounded_pa_rec(scope, depth - 1));
    case 1:
    case 2: {
      pa::Formula l = bounded_pa_rec(scope, depth - 1);
      pa::Formula r = bounded_pa_rec(scope, depth - 1);
      return choice == 1 ? pa::conj(l, r) : pa::disj(l, r);
    }
    default: {
      const std::string x = fresh_binder(scope, "yzuvw");
      pa::Term bound = pa_term(scope, 1);
      scope.push_back(x);
      pa::Formula body = bounded_pa_rec(scope, depth - 1);
      scope.pop_back();
      return coin(0.5) ? pa::bounded_forall(x, bound, body) : pa::bounded_exists(x, bound, body);
    }
  }
}

pa::Formula Generator::bounded_pa(const std::vector<std::string>& free) {
  std::vector<std::string> scope = free;
  return bounded_pa_rec(scope, profile_.depth);
}

pa::Formula Generator::pi01() { return pa::forall("x", bounded_pa({"x"})); }

// ---------------------------------------------------------------- SLN ----

sln::Term Generator::sln_term(const std::vector<std::string>& vars) {
  if (vars.empty() || coin(0.3)) return sln::numeral(uniform(0, profile_.max_numeral));
  return sln::var(vars[uniform(0, vars.size() - 1)], coin(0.6) ? 0 : uniform(1, 2));
}

sln::Formula Generator::sln_rec(std::vector<std::string>& scope, std::size_t qdepth, std::size_t size) {
  if (size == 0 || coin(0.3)) {
    const bool heap_atom = coin(0.55);
    sln::Term l = sln_term(scope);
    sln::Term r = sln_term(scope);
    return heap_atom ? sln::points_to(l, r) : sln::eq(l, r);
  }
  const Nat choice = uniform(0, qdepth > 0 ? 4 : 2);
  switch (choice) {
    case 0: return sln::neg(sln_rec(scope, qdepth, size - 1));
    case 1:
    case 2: {
      sln::Formula l = sln_rec(scope, qdepth, size / 2);
      sln::Formula r = sln_rec(scope, qdepth, size / 2);
      return choice == 1 ? sln::conj(l, r) : sln::disj(l, r);
    }
    default: {
      const std::string x = fresh_binder(scope, "abcd");
      scope.push_back(x);
      sln::Formula body = sln_rec(scope, qdepth - 1, size - 1);
      scope.pop_back();
      const Nat guard = coin(0.2) ? uniform(1, 3) : 0;
      return sln::quantifier(choice == 3, x, guard, body);
    }
  }
}

sln::Formula Generator::sln_formula(const std::vector<std::string>& free) {
  std::vector<std::string> scope = free;
  return sln_rec(scope, profile_.quantifier_depth, 6);
}

sln::Formula Generator::succ_rec(std::vector<std::string>& scope, std::size_t qdepth, Nat max_numeral,
                                 std::size_t size) {
  auto term = [&]() {
    if (scope.empty() || coin(0.3)) return sln::numeral(uniform(0, max_numeral));
    return sln::var(scope[uniform(0, scope.size() - 1)], coin(0.5) ? 0 : uniform(1, 3));
  };
  // Quantifiers come first while depth remains so that sentences stay closed.
  if (qdepth > 0 && (scope.empty() || coin(0.4))) {
    const std::string x = fresh_binder(scope, "xyzw");
    scope.push_back(x);
    sln::Formula body = succ_rec(scope, qdepth - 1, max_numeral, size);
    scope.pop_back();
    const Nat guard = coin(0.25) ? uniform(1, max_numeral) : 0;
    return sln::quantifier(coin(0.5), x, guard, body);
  }
  if (size == 0 || coin(0.3)) {
    sln::Term l = term();
    sln::Term r = term();
    return sln::eq(l, r);
  }
  const Nat choice = uniform(0, 2);
  if (choice == 0) return sln::neg(succ_rec(scope, qdepth, max_numeral, size - 1));
  sln::Formula l = succ_rec(scope, qdepth, max_numeral, size / 2);
  sln::Formula r = succ_rec(scope, qdepth, max_numeral, size / 2);
  return choice == 1 ? sln::conj(l, r) : sln::disj(l, r);
}

sln::Formula Generator::succ_sentence(std::size_t quantifier_depth, Nat max_numeral) {
  std::vector<std::string> scope;
  return succ_rec(scope, quantifier_depth, max_numeral, 6);
}

// --------------------------------------------------------- relational ----

fol::Formula Generator::fol_rec(std::vector<std::string>& scope, std::size_t qdepth, std::size_t size) {
  auto pick = [&]() { return scope[uniform(0, scope.size() - 1)]; };
  if (!scope.empty() && (size == 0 || coin(0.3))) {
    const bool relation = coin(0.6);
    std::string x = pick();
    std::string y = pick();
    return relation ? fol::rel(x, y) : fol::eq(x, y);
  }
  const Nat choice = scope.empty() ? 3 : uniform(0, qdepth > 0 ? 4 : 2);
  switch (choice) {
    case 0: return fol::neg(fol_rec(scope, qdepth, size == 0 ? 0 : size - 1));
    case 1:
    case 2: {
      fol::Formula l = fol_rec(scope, qdepth, size / 2);
      fol::Formula r = fol_rec(scope, qdepth, size / 2);
      return choice == 1 ? fol::conj(l, r) : fol::disj(l, r);
    }
    default: {
      const std::string x = fresh_binder(scope, "xyz");
      scope.push_back(x);
      fol::Formula body = fol_rec(scope, qdepth == 0 ? 0 : qdepth - 1, size == 0 ? 0 : size - 1);
      scope.pop_back();
      return choice == 3 ? fol::exists(x, body) : fol::forall(x, body);
    }
  }
}

fol::Formula Generator::fol_formula(const std::vector<std::string>& free) {
  std::vector<std::string> scope = free;
  return fol_rec(scope, profile_.quantifier_depth, 5);
}

// -------------------------------------------------------------- heaps ----

Heap Generator::random_heap() {
  std::map<Nat, Nat> cells;
  const std::size_t size = uniform(0, profile_.max_heap_cells);
  while (cells.size() < size) {
    cells[uniform(0, profile_.max_heap_address)] = uniform(0, profile_.max_heap_value);
  }
  return Heap(std::move(cells));
}

Heap Generator::corrupted_table(Nat n) {
  Heap table = simple_table_heap(n);
  const Nat addr = uniform(0, table.size() - 1);
  if (coin(0.2)) return table.without(addr);
  const Nat old = *table.lookup(addr);
  Nat value = uniform(0, *table.max_value() + 1);
  if (value == old) value = old + 1;
  return table.with(addr, value);
}

Heap Generator::table_prefix(Nat n) {
  const Heap table = simple_table_heap(n);
  const Nat keep = uniform(0, table.size());
  std::map<Nat, Nat> cells;
  for (const auto& [a, v] : table.cells()) {
    if (a >= keep) break;
    cells.emplace(a, v);
  }
  return Heap(std::move(cells));
}

Heap Generator::sample_heap() {
  switch (uniform(0, 2)) {
    case 0: return random_heap();
    case 1: return corrupted_table(uniform(0, profile_.max_table));
    default: return table_prefix(uniform(0, profile_.max_table));
  }
}

FiniteStructure Generator::structure() {
  FiniteStructure m;
  const std::size_t size = uniform(1, profile_.max_universe);
  while (m.universe.size() < size) m.universe.insert(uniform(0, 2 * profile_.max_universe));
  const std::vector<Nat> elems(m.universe.begin(), m.universe.end());
  for (Nat a : elems) {
    for (Nat b : elems) {
      if (coin(0.35)) m.relation.insert({a, b});
    }
  }
  return m;
}

VarAssignment Generator::assignment(const std::vector<std::string>& vars, Nat max_value) {
  std::map<std::string, Nat> support;
  for (const std::string& x : vars) support[x] = uniform(0, max_value);
  return VarAssignment(std::move(support));
}

}  // namespace slnkit
