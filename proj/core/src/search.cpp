#include "slnkit/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <mutex>
#include <nlohmann/json.hpp>
#include <stdexcept>
#include <thread>

#include "slnkit/fol_finite.hpp"
#include "slnkit/generators.hpp"
#include "slnkit/model_checker.hpp"
#include "slnkit/normalizer.hpp"
#include "slnkit/pa_semantics.hpp"
#include "slnkit/parser.hpp"
#include "slnkit/printer.hpp"
#include "slnkit/syntax.hpp"
#include "slnkit/translator.hpp"

namespace slnkit {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Calls visit(sigma) for every assignment of values 0..max to vars, in
/// lexicographic order; stops when visit returns true.
template <typename Visit>
bool for_each_assignment(const std::vector<std::string>& vars, Nat max, const VarAssignment& base, Visit visit) {
  std::vector<Nat> values(vars.size(), 0);
  for (;;) {
    VarAssignment sigma = base;
    for (std::size_t i = 0; i < vars.size(); ++i) sigma = sigma.with(vars[i], values[i]);
    if (visit(sigma)) return true;
    std::size_t i = vars.size();
    while (i > 0 && values[i - 1] == max) values[--i] = 0;
    if (i == 0) return false;
    ++values[i - 1];
  }
}

std::optional<Counterexample> search_heap(const sln::Formula& f, const Heap& h, const SearchLimits& limits) {
  const VarSet free = free_vars(f);
  const std::vector<std::string> free_list(free.begin(), free.end());
  std::vector<std::string> prefix;
  sln::Formula body = f;
  while (body->kind == sln::Kind::Forall) {
    prefix.push_back(body->var);
    body = body->a;
  }
  ModelChecker checker(h);
  std::optional<Counterexample> found;
  for_each_assignment(free_list, limits.max_assign_value, VarAssignment{}, [&](const VarAssignment& sigma) {
    if (checker.check(sigma, f)) return false;
    for_each_assignment(prefix, limits.max_assign_value, sigma, [&](const VarAssignment& tau) {
      if (checker.check(tau, body)) return false;
      found.emplace(tau, h, body, false);
      return true;
    });
    if (!found) found.emplace(sigma, h, f, false);
    return true;
  });
  return found;
}

std::string describe(const VarAssignment& sigma) { return sigma.support().empty() ? "{}" : sigma.to_string(); }

}  // namespace

Counterexample::Counterexample(VarAssignment assignment, Heap heap, sln::Formula formula, bool verdict)
    : assignment_(std::move(assignment)), heap_(std::move(heap)), formula_(std::move(formula)), verdict_(verdict) {
  if (check(assignment_, heap_, formula_) != verdict_) {
    throw std::logic_error("counterexample verdict does not re-validate");
  }
}

std::vector<Heap> search_heaps(const SearchLimits& limits) {
  std::vector<Heap> heaps{Heap{}};
  for (Nat n : limits.table_sizes) heaps.push_back(simple_table_heap(n));
  GeneratorProfile profile;
  profile.max_table = limits.table_sizes.empty() ? 0 : std::min<Nat>(2, *std::max_element(limits.table_sizes.begin(), limits.table_sizes.end()));
  Generator gen(limits.seed, profile);
  for (std::size_t i = 0; i < limits.heap_samples; ++i) heaps.push_back(gen.sample_heap());
  return heaps;
}

std::optional<Counterexample> bounded_counterexample_search(const sln::Formula& f, const SearchLimits& limits) {
  const std::vector<Heap> heaps = search_heaps(limits);
  const unsigned jobs = std::max(1u, std::min<unsigned>(limits.jobs, static_cast<unsigned>(heaps.size())));
  std::vector<std::optional<Counterexample>> results(heaps.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&]() {
    try {
      for (std::size_t i = next++; i < heaps.size() && i < best.load(); i = next++) {
        results[i] = search_heap(f, heaps[i], limits);
        if (results[i]) {
          std::size_t current = best.load();
          while (i < current && !best.compare_exchange_weak(current, i)) {
          }
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
      best = 0;
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  const std::size_t first = best.load();
  if (first >= heaps.size()) return std::nullopt;
  return results[first];
}

std::string Report::to_json() const {
  nlohmann::json j;
  j["lemma"] = lemma;
  j["instances"] = instances;
  j["agreements"] = agreements;
  j["failures"] = failures;
  j["seed"] = seed;
  j["runtime"] = runtime_seconds;
  if (!notes.empty()) j["notes"] = notes;
  return j.dump(2);
}

Pa2HnResult verify_pa2hn(const pa::Formula& normal, const VarAssignment& sigma) {
  if (!is_normal(normal)) throw std::invalid_argument("verify_pa2hn needs a normal formula: " + render(normal));
  const auto start = Clock::now();
  Pa2HnResult r;
  r.n = max_bound(sigma, normal);
  const Heap table = simple_table_heap(r.n);
  r.pa_verdict = eval_bounded(sigma, normal);
  r.sln_verdict = check(sigma, table, circle_translate(normal));
  r.seconds = seconds_since(start);
  return r;
}

Hn2ForallHResult verify_hn2forallh(const pa::Formula& normal, const VarAssignment& sigma, std::size_t samples,
                                   std::uint64_t seed) {
  if (!is_normal(normal)) throw std::invalid_argument("verify_hn2forallh needs a normal formula: " + render(normal));
  Hn2ForallHResult r;
  r.n = max_bound(sigma, normal);
  const sln::Formula translated = circle_translate(normal);
  r.precondition = check(sigma, simple_table_heap(r.n), translated);
  if (!r.precondition) return r;

  std::vector<Heap> heaps{Heap{}};
  for (Nat k = 0; k <= r.n; ++k) heaps.push_back(simple_table_heap(k));
  GeneratorProfile profile;
  profile.max_table = std::min<Nat>(r.n, 3);
  Generator gen(seed, profile);
  for (std::size_t i = 0; i < samples; ++i) heaps.push_back(gen.sample_heap());
  for (const Heap& h : heaps) {
    ++r.heaps_checked;
    if (!check(sigma, h, translated)) r.failures.push_back(h);
  }
  return r;
}

RepresentationResult verify_representation(const pa::Formula& pi01, bool valid, Nat witness,
                                           const SearchLimits& limits) {
  const pa::Formula boxed = box_translate(pi01);
  RepresentationResult r;
  r.expected_valid = valid;
  if (valid) {
    r.counterexample = bounded_counterexample_search(circle_translate(boxed), limits);
    r.as_expected = !r.counterexample.has_value();
    return r;
  }
  const VarAssignment sigma = VarAssignment{}.with(boxed->var, witness);
  const pa::Formula body = boxed->a;
  r.n = max_bound(sigma, body);
  Heap table = simple_table_heap(r.n);
  const sln::Formula translated = circle_translate(body);
  const bool holds = check(sigma, table, translated);
  if (!holds) r.counterexample.emplace(sigma, std::move(table), translated, false);
  r.as_expected = !holds;
  return r;
}

sln::Formula sigma01_translation() {
  const pa::Formula body = normalize_bounded(parse_pa("!(x + 0 = x)"));
  return sln::exists("x", circle_translate(body));
}

std::pair<pa::Formula, VarAssignment> sample_normal_instance(Generator& gen, Nat max_sigma, Nat max_table) {
  for (;;) {
    const pa::Formula bounded = gen.bounded_pa({"x", "y"});
    const pa::Formula normal = normalize_bounded(bounded);
    const VarSet free = free_vars(bounded);
    const VarAssignment sigma = gen.assignment(std::vector<std::string>(free.begin(), free.end()), max_sigma);
    try {
      if (max_bound(sigma, normal) <= max_table) return {normal, sigma};
    } catch (const std::overflow_error&) {
    }
  }
}

Report verify_pa2hn_suite(std::uint64_t seed, std::size_t samples, Nat max_sigma, Nat max_table) {
  const auto start = Clock::now();
  Report report;
  report.lemma = "pa2hn";
  report.seed = seed;
  Generator gen(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const auto [normal, sigma] = sample_normal_instance(gen, max_sigma, max_table);
    const Pa2HnResult r = verify_pa2hn(normal, sigma);
    ++report.instances;
    if (r.agree()) {
      ++report.agreements;
    } else {
      report.failures.push_back(render(normal) + " at " + describe(sigma) + " with n = " + std::to_string(r.n) +
                                ": PA " + (r.pa_verdict ? "true" : "false") + ", h_n " +
                                (r.sln_verdict ? "true" : "false"));
    }
  }
  report.runtime_seconds = seconds_since(start);
  return report;
}

Report verify_hn2forallh_suite(std::uint64_t seed, std::size_t samples, std::size_t heaps_per_formula,
                               Nat max_table) {
  const auto start = Clock::now();
  Report report;
  report.lemma = "hn2forallh";
  report.seed = seed;
  Generator gen(seed);
  std::size_t satisfied = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const auto [normal, sigma] = sample_normal_instance(gen, 2, max_table);
    const Hn2ForallHResult r = verify_hn2forallh(normal, sigma, heaps_per_formula, seed + i);
    if (!r.precondition) continue;
    ++satisfied;
    report.instances += r.heaps_checked;
    report.agreements += r.heaps_checked - r.failures.size();
    for (const Heap& h : r.failures) {
      report.failures.push_back(render(normal) + " at " + describe(sigma) + " fails on heap {" + h.save() + "}");
    }
  }
  report.notes.push_back(std::to_string(satisfied) + " of " + std::to_string(samples) +
                         " formulas hold on their table heap");
  report.runtime_seconds = seconds_since(start);
  return report;
}

namespace {

struct KnownPi01 {
  const char* text;
  bool valid;
  Nat witness;
};

const KnownPi01 kKnownPi01[] = {
    {"forall x. 0 <= x", true, 0},
    {"forall x. forall y <= x. y <= x", true, 0},
    {"forall x. x <= x", true, 0},
    {"forall x. x <= x + s(0)", true, 0},
    {"forall x. x + 0 = x", true, 0},
    {"forall x. x + x <= x", false, 1},
    {"forall x. x <= 0", false, 1},
    {"forall x. x = 0", false, 1},
    {"forall x. exists y <= x. s(y) = x", false, 0},
    {"forall x. x * x <= x", false, 2},
};

}  // namespace

Report verify_representation_suite(const SearchLimits& limits) {
  const auto start = Clock::now();
  Report report;
  report.lemma = "representation";
  report.seed = limits.seed;
  for (const KnownPi01& known : kKnownPi01) {
    const RepresentationResult r = verify_representation(parse_pa(known.text), known.valid, known.witness, limits);
    ++report.instances;
    if (r.as_expected) {
      ++report.agreements;
    } else if (known.valid) {
      report.failures.push_back(std::string(known.text) + ": counterexample at " +
                                describe(r.counterexample->assignment()) + " on heap {" +
                                r.counterexample->heap().save() + "}");
    } else {
      report.failures.push_back(std::string(known.text) + ": witness " + std::to_string(known.witness) +
                                " does not falsify the translation on h_" + std::to_string(r.n));
    }
  }
  report.runtime_seconds = seconds_since(start);
  return report;
}

Report verify_sigma01(std::uint64_t seed, std::size_t random_heaps, Nat max_witness) {
  const auto start = Clock::now();
  Report report;
  report.lemma = "sigma01";
  report.seed = seed;

  const pa::Formula body = parse_pa("!(x + 0 = x)");
  ++report.instances;
  bool witness = false;
  for (Nat k = 0; k <= max_witness && !witness; ++k) witness = eval_bounded(VarAssignment{}.with("x", k), body);
  if (witness) {
    report.failures.push_back("exists x. x + 0 != x has an arithmetic witness");
  } else {
    ++report.agreements;
  }

  const sln::Formula translated = sigma01_translation();
  std::vector<std::pair<std::string, Heap>> heaps{{"empty", Heap{}}};
  for (Nat n = 0; n <= 3; ++n) heaps.emplace_back("h_" + std::to_string(n), simple_table_heap(n));
  GeneratorProfile profile;
  profile.max_heap_cells = 30;
  profile.max_heap_address = 60;
  profile.max_heap_value = 40;
  Generator gen(seed, profile);
  for (std::size_t i = 0; i < random_heaps; ++i) heaps.emplace_back("sample " + std::to_string(i), gen.sample_heap());
  for (const auto& [name, h] : heaps) {
    ++report.instances;
    if (check(VarAssignment{}, h, translated)) {
      ++report.agreements;
    } else {
      report.failures.push_back("translation false on " + name + ": {" + h.save() + "}");
    }
  }
  report.runtime_seconds = seconds_since(start);
  return report;
}

Report verify_fol_suite(std::uint64_t seed, std::size_t samples) {
  const auto start = Clock::now();
  Report report;
  report.lemma = "fol";
  report.seed = seed;
  Generator gen(seed);

  auto compare_all = [&](const FiniteStructure& m, const Heap& h, const fol::Formula& a, const std::string& label) {
    const VarSet free = free_vars(a);
    const std::vector<std::string> vars(free.begin(), free.end());
    const sln::Formula translated = triangle_translate(a);
    const std::vector<Nat> elems(m.universe.begin(), m.universe.end());
    ModelChecker checker(h);
    bool agree = true;
    std::vector<std::size_t> idx(vars.size(), 0);
    for (;;) {
      VarAssignment sigma;
      for (std::size_t i = 0; i < vars.size(); ++i) sigma = sigma.with(vars[i], elems[idx[i]]);
      if (eval_fol(m, sigma, a) != checker.check(sigma, translated)) {
        agree = false;
        report.failures.push_back(label + ": " + render(a) + " at " + describe(sigma) + " on " + m.to_string());
        break;
      }
      std::size_t i = vars.size();
      while (i > 0 && idx[i - 1] + 1 == elems.size()) idx[--i] = 0;
      if (i == 0) break;
      ++idx[i - 1];
    }
    ++report.instances;
    if (agree) ++report.agreements;
  };

  for (std::size_t i = 0; i < samples; ++i) {
    const FiniteStructure m = gen.structure();
    const fol::Formula a = gen.fol_formula(gen.coin(0.5) ? std::vector<std::string>{} : std::vector<std::string>{"x"});
    compare_all(m, encode_structure(m), a, "encoding");

    ++report.instances;
    if (decode_heap(encode_structure(m)) == m) {
      ++report.agreements;
    } else {
      report.failures.push_back("decode(encode(M)) differs for " + m.to_string());
    }

    for (;;) {
      const Heap h = gen.random_heap();
      FiniteStructure decoded;
      try {
        decoded = decode_heap(h);
      } catch (const std::invalid_argument&) {
        continue;
      }
      compare_all(decoded, h, gen.fol_formula({}), "decoding");
      break;
    }
  }
  report.runtime_seconds = seconds_since(start);
  return report;
}

std::vector<std::string> table_row_violations(const Heap& h) {
  std::vector<std::string> out;
  for (const auto& [m, tag] : h.cells()) {
    if (tag > kIneqTag) continue;
    const auto a = h.lookup(m + 1), b = h.lookup(m + 2);
    if (!a || !b || *a < kTableOffset || *b < kTableOffset) continue;
    const Nat n = *a - kTableOffset, k = *b - kTableOffset;
    const std::string at = " at address " + std::to_string(m);
    if (tag == kIneqTag) {
      if (n > k) out.push_back("inequality row claims " + std::to_string(n) + " <= " + std::to_string(k) + at);
      continue;
    }
    const Nat expected = (tag == kAddTag ? n + k : n * k) + kTableOffset;
    const auto result = h.lookup(m + 3);
    if (!result || *result != expected) {
      out.push_back(std::string(tag == kAddTag ? "addition" : "multiplication") + " row for " + std::to_string(n) +
                    ", " + std::to_string(k) + " stores " + (result ? std::to_string(*result) : "nothing") +
                    " instead of " + std::to_string(expected) + at);
    }
  }
  return out;
}

}  // namespace slnkit
