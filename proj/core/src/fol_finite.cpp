#include "slnkit/fol_finite.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "slnkit/printer.hpp"

namespace slnkit {

namespace {

void collect_free(const fol::Formula& f, VarSet& bound, VarSet& out) {
  switch (f->kind) {
    case fol::Kind::Eq:
    case fol::Kind::Rel:
      for (const std::string* v : {&f->x, &f->y}) {
        if (!bound.count(*v)) out.insert(*v);
      }
      return;
    case fol::Kind::Not: collect_free(f->a, bound, out); return;
    case fol::Kind::And:
      collect_free(f->a, bound, out);
      collect_free(f->b, bound, out);
      return;
    case fol::Kind::Exists: {
      const bool fresh = bound.insert(f->x).second;
      collect_free(f->a, bound, out);
      if (fresh) bound.erase(f->x);
      return;
    }
  }
}

bool eval(const FiniteStructure& m, std::map<std::string, Nat>& env, const fol::Formula& f) {
  switch (f->kind) {
    case fol::Kind::Eq: return env.at(f->x) == env.at(f->y);
    case fol::Kind::Rel: return m.relation.count({env.at(f->x), env.at(f->y)}) != 0;
    case fol::Kind::Not: return !eval(m, env, f->a);
    case fol::Kind::And: return eval(m, env, f->a) && eval(m, env, f->b);
    case fol::Kind::Exists: {
      auto previous = env.find(f->x) == env.end() ? std::optional<Nat>{} : std::optional<Nat>{env[f->x]};
      bool found = false;
      for (Nat u : m.universe) {
        env[f->x] = u;
        if (eval(m, env, f->a)) {
          found = true;
          break;
        }
      }
      if (previous) {
        env[f->x] = *previous;
      } else {
        env.erase(f->x);
      }
      return found;
    }
  }
  return false;
}

/// A helper binder name distinct from the given variables.
std::string helper(const std::string& stem, std::initializer_list<const std::string*> avoid) {
  for (int k = 0;; ++k) {
    std::string name = stem + std::to_string(k);
    if (std::none_of(avoid.begin(), avoid.end(), [&](const std::string* v) { return *v == name; })) return name;
  }
}

sln::Formula member(const std::string& stem, const sln::Term& x) {
  const std::string a = helper(stem, {&x.var});
  return sln::exists(a, sln::row(sln::var(a), {sln::numeral(0), x.shifted(2)}));
}

Nat parse_number(const std::string& token, std::size_t line) {
  if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("line " + std::to_string(line) + ": expected a natural number, got '" + token + "'");
  }
  return std::stoull(token);
}

}  // namespace

FiniteStructure FiniteStructure::parse(std::string_view text) {
  FiniteStructure m;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  bool seen_universe = false;
  std::vector<std::pair<std::pair<Nat, Nat>, std::size_t>> pairs;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::string head;
    if (!(fields >> head)) continue;
    std::vector<Nat> numbers;
    for (std::string tok; fields >> tok;) numbers.push_back(parse_number(tok, line_no));
    if (head == "U:") {
      if (seen_universe) throw std::invalid_argument("line " + std::to_string(line_no) + ": second 'U:' line");
      seen_universe = true;
      m.universe.insert(numbers.begin(), numbers.end());
    } else if (head == "R:") {
      if (numbers.size() != 2) throw std::invalid_argument("line " + std::to_string(line_no) + ": 'R:' takes two elements");
      pairs.push_back({{numbers[0], numbers[1]}, line_no});
    } else {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected 'U:' or 'R:'");
    }
  }
  for (const auto& [p, line] : pairs) {
    if (!m.universe.count(p.first) || !m.universe.count(p.second)) {
      throw std::invalid_argument("line " + std::to_string(line) + ": relation pair outside the universe");
    }
    m.relation.insert(p);
  }
  return m;
}

std::string FiniteStructure::to_string() const {
  std::ostringstream out;
  out << "U:";
  for (Nat u : universe) out << ' ' << u;
  out << '\n';
  for (const auto& [a, b] : relation) out << "R: " << a << ' ' << b << '\n';
  return out.str();
}

VarSet free_vars(const fol::Formula& f) {
  VarSet bound, out;
  collect_free(f, bound, out);
  return out;
}

bool eval_fol(const FiniteStructure& m, const VarAssignment& sigma, const fol::Formula& f) {
  std::map<std::string, Nat> env;
  for (const std::string& x : free_vars(f)) {
    const Nat v = sigma(x);
    if (!m.universe.count(v)) {
      throw std::invalid_argument("assignment maps '" + x + "' to " + std::to_string(v) + ", outside the universe");
    }
    env[x] = v;
  }
  return eval(m, env, f);
}

Heap encode_structure(const FiniteStructure& m) {
  std::map<Nat, Nat> cells;
  Nat addr = 0;
  for (Nat p : m.universe) {
    cells[addr++] = 0;
    cells[addr++] = checked_add(p, 2);
  }
  for (const auto& [n, k] : m.relation) {
    cells[addr++] = 1;
    cells[addr++] = checked_add(n, 2);
    cells[addr++] = checked_add(k, 2);
  }
  return Heap(std::move(cells));
}

FiniteStructure decode_heap(const Heap& h) {
  FiniteStructure m;
  for (const auto& [a, tag] : h.cells()) {
    if (tag == 0) {
      if (auto v = h.lookup(a + 1); v && *v >= 2) m.universe.insert(*v - 2);
    } else if (tag == 1) {
      auto n = h.lookup(a + 1), k = h.lookup(a + 2);
      if (n && k && *n >= 2 && *k >= 2) m.relation.insert({*n - 2, *k - 2});
    }
  }
  if (m.universe.empty()) throw std::invalid_argument("heap has no universe row (0, n+2)");
  return m;
}

sln::Formula membership_formula(const sln::Term& x) { return member("$a", x); }

sln::Formula triangle_translate(const fol::Formula& f) {
  switch (f->kind) {
    case fol::Kind::Eq: return sln::conj(sln::eq(sln::var(f->x), sln::var(f->y)), member("$a", sln::var(f->x)));
    case fol::Kind::Rel: {
      const sln::Term x = sln::var(f->x), y = sln::var(f->y);
      const std::string a = helper("$a", {&f->x, &f->y});
      sln::Formula row = sln::exists(a, sln::row(sln::var(a), {sln::numeral(1), x.shifted(2), y.shifted(2)}));
      return sln::conj(sln::conj(row, member("$b", x)), member("$c", y));
    }
    case fol::Kind::Not: return sln::neg(triangle_translate(f->a));
    case fol::Kind::And: return sln::conj(triangle_translate(f->a), triangle_translate(f->b));
    case fol::Kind::Exists:
      return sln::exists(f->x, sln::conj(member("$a", sln::var(f->x)), triangle_translate(f->a)));
  }
  return sln::truth(false);
}

sln::Formula finite_validity_premise(const fol::Formula& f) {
  const sln::Formula nonempty = sln::exists("$a", sln::exists("$x", sln::row(sln::var("$a"), {sln::numeral(0), sln::var("$x", 2)})));
  sln::Formula body = triangle_translate(f);
  sln::Formula members;
  for (const std::string& x : free_vars(f)) {
    sln::Formula m = membership_formula(sln::var(x));
    members = members ? sln::conj(members, m) : m;
  }
  if (members) body = sln::implies(members, body);
  return sln::implies(nonempty, body);
}

}  // namespace slnkit
