// slnkit: command-line front end for the toolkit.
//
// Exit codes: 0 success or true, 1 false or counterexample found, 2 usage or
// input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "slnkit/fol_finite.hpp"
#include "slnkit/heap.hpp"
#include "slnkit/model_checker.hpp"
#include "slnkit/normalizer.hpp"
#include "slnkit/parser.hpp"
#include "slnkit/printer.hpp"
#include "slnkit/search.hpp"
#include "slnkit/succ_arith.hpp"
#include "slnkit/syntax.hpp"
#include "slnkit/translator.hpp"

namespace {

using namespace slnkit;
using nlohmann::json;

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kError = 2;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

/// Inline text, or the contents of FILE for "@FILE".
std::string formula_text(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') return read_file(arg.substr(1));
  return arg;
}

/// An SLN formula; the bare name H stands for the table heap condition.
sln::Formula sln_input(const std::string& arg) {
  const std::string text = formula_text(arg);
  const auto first = text.find_first_not_of(" \t\r\n");
  const auto last = text.find_last_not_of(" \t\r\n");
  if (first != std::string::npos && text.substr(first, last - first + 1) == "H") return table_heap_condition();
  return parse_sln(text);
}

Heap heap_input(const std::string& path) { return path.empty() ? Heap{} : Heap::load(read_file(path)); }

void print(const json& j, bool as_json, const std::string& text) {
  if (as_json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << text << '\n';
  }
}

json heap_json(const Heap& h) {
  json cells = json::array();
  for (const auto& [a, v] : h.cells()) cells.push_back({a, v});
  return cells;
}

json counterexample_json(const Counterexample& c) {
  return {{"assignment", c.assignment().to_string()}, {"heap", heap_json(c.heap())},
          {"formula", render(c.formula())}, {"verdict", c.verdict()}};
}

struct Options {
  bool as_json = false;
  std::string formula;
  std::string sigma;
  std::string heap_file;
  std::string structure_file;
  bool circle = false;
  bool box_circle = false;
  bool triangle = false;
  bool staged = false;
  bool box = false;
  Nat table_n = 0;
  std::uint64_t seed = 1;
  std::size_t samples = 0;
  unsigned jobs = 1;
  Nat max_value = 4;
  std::vector<Nat> tables{0, 1, 2, 3, 4};
  std::string lemma;
};

int run_parse_pa(const Options& o) {
  const pa::Formula f = parse_pa(formula_text(o.formula));
  const json j = {{"formula", render(f)},       {"free", free_vars(f)},       {"bounded", is_bounded(f)},
                  {"pi01", is_pi01(f)},         {"normal", is_normal(f)}};
  print(j, o.as_json, render(f));
  return kTrue;
}

int run_parse_sln(const Options& o) {
  const sln::Formula f = sln_input(o.formula);
  const json j = {{"formula", render(f)}, {"free", free_vars(f)}, {"quantifiers", quantifier_count(f)}};
  print(j, o.as_json, render(f));
  return kTrue;
}

int run_normalize(const Options& o) {
  const pa::Formula f = parse_pa(formula_text(o.formula));
  const pa::Formula out = o.box ? box_translate(f) : normalize_bounded(f);
  print({{"input", render(f)}, {"normal", render(out)}}, o.as_json, render(out));
  return kTrue;
}

int run_translate(const Options& o) {
  const std::string text = formula_text(o.formula);
  sln::Formula out;
  if (o.triangle) {
    out = triangle_translate(parse_fol(text));
  } else if (o.box_circle) {
    out = circle_translate(box_translate(parse_pa(text)));
  } else {
    out = circle_translate(parse_pa(text));
  }
  print({{"formula", render(out)}}, o.as_json, render(out));
  return kTrue;
}

int run_heap_table(const Options& o) {
  const Heap h = simple_table_heap(o.table_n);
  if (o.as_json) {
    std::cout << json{{"n", o.table_n}, {"cells", heap_json(h)}}.dump(2) << '\n';
  } else {
    std::cout << h.save();
  }
  return kTrue;
}

int run_heap_encode(const Options& o) {
  const Heap h = encode_structure(FiniteStructure::parse(read_file(o.structure_file)));
  if (o.as_json) {
    std::cout << json{{"cells", heap_json(h)}}.dump(2) << '\n';
  } else {
    std::cout << h.save();
  }
  return kTrue;
}

int run_check(const Options& o) {
  const sln::Formula f = sln_input(o.formula);
  const VarAssignment sigma = VarAssignment::parse(o.sigma);
  const Heap h = heap_input(o.heap_file);
  bool verdict = false;
  if (o.staged) {
    json stages = json::array();
    verdict = check_staged(sigma, h, f, [&](const std::string& stage, const sln::Formula& g) {
      if (o.as_json) {
        stages.push_back({{"stage", stage}, {"formula", render(g)}});
      } else {
        std::cout << stage << ": " << render(g) << '\n';
      }
    });
    if (o.as_json) std::cout << json{{"verdict", verdict}, {"stages", stages}}.dump(2) << '\n';
    else std::cout << (verdict ? "true" : "false") << '\n';
  } else {
    verdict = check(sigma, h, f);
    print({{"verdict", verdict}}, o.as_json, verdict ? "true" : "false");
  }
  return verdict ? kTrue : kFalse;
}

int run_decide(const Options& o) {
  const sln::Formula f = sln_input(o.formula);
  const bool verdict = decide_sentence(f);
  print({{"verdict", verdict}}, o.as_json, verdict ? "true" : "false");
  return verdict ? kTrue : kFalse;
}

int run_search(const Options& o) {
  const std::string text = formula_text(o.formula);
  const sln::Formula f = o.box_circle ? circle_translate(box_translate(parse_pa(text))) : sln_input(o.formula);
  SearchLimits limits;
  limits.max_assign_value = o.max_value;
  limits.heap_samples = o.samples == 0 ? limits.heap_samples : o.samples;
  limits.table_sizes = o.tables;
  limits.seed = o.seed;
  limits.jobs = o.jobs;
  const auto found = bounded_counterexample_search(f, limits);
  if (o.as_json) {
    json j = {{"seed", o.seed}, {"found", found.has_value()}};
    if (found) j["counterexample"] = counterexample_json(*found);
    std::cout << j.dump(2) << '\n';
  } else if (found) {
    std::cout << "counterexample (seed " << o.seed << "): " << found->assignment().to_string() << '\n'
              << found->heap().save();
  } else {
    std::cout << "no counterexample within limits (seed " << o.seed << ")\n";
  }
  return found ? kFalse : kTrue;
}

int run_verify(const Options& o) {
  const auto samples = [&](std::size_t fallback) { return o.samples == 0 ? fallback : o.samples; };
  Report report;
  if (o.lemma == "pa2hn") {
    report = verify_pa2hn_suite(o.seed, samples(100));
  } else if (o.lemma == "hn2forallh") {
    report = verify_hn2forallh_suite(o.seed, samples(100));
  } else if (o.lemma == "representation") {
    SearchLimits limits;
    limits.seed = o.seed;
    limits.jobs = o.jobs;
    limits.heap_samples = samples(limits.heap_samples);
    report = verify_representation_suite(limits);
  } else if (o.lemma == "sigma01") {
    report = verify_sigma01(o.seed, samples(100));
  } else {
    report = verify_fol_suite(o.seed, samples(100));
  }
  std::cout << report.to_json() << '\n';
  return report.passed() ? kTrue : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Peano arithmetic to separation logic toolkit"};
  app.require_subcommand(1);
  Options o;
  int (*action)(const Options&) = nullptr;

  auto formula_arg = [&](CLI::App* sub, const char* what) {
    sub->add_option("formula", o.formula, what)->required();
    sub->add_flag("--json", o.as_json, "Machine-readable output");
  };

  auto* parse_pa_cmd = app.add_subcommand("parse-pa", "Parse and print a PA formula");
  formula_arg(parse_pa_cmd, "PA formula or @file");
  parse_pa_cmd->callback([&] { action = run_parse_pa; });

  auto* parse_sln_cmd = app.add_subcommand("parse-sln", "Parse and print an SLN formula");
  formula_arg(parse_sln_cmd, "SLN formula or @file");
  parse_sln_cmd->callback([&] { action = run_parse_sln; });

  auto* normalize_cmd = app.add_subcommand("normalize", "Normal form of a bounded PA formula");
  formula_arg(normalize_cmd, "bounded PA formula or @file");
  normalize_cmd->add_flag("--box", o.box, "Input is Pi01; apply the box translation");
  normalize_cmd->callback([&] { action = run_normalize; });

  auto* translate_cmd = app.add_subcommand("translate", "Translate into SLN");
  formula_arg(translate_cmd, "formula or @file");
  auto* circle = translate_cmd->add_flag("--circle", o.circle, "Normal PA formula");
  auto* box_circle = translate_cmd->add_flag("--box-circle", o.box_circle, "Pi01 PA formula");
  auto* triangle = translate_cmd->add_flag("--triangle", o.triangle, "Formula with one binary predicate P");
  circle->excludes(box_circle)->excludes(triangle);
  box_circle->excludes(triangle);
  translate_cmd->callback([&] {
    if (!o.circle && !o.box_circle && !o.triangle) throw CLI::ValidationError("one of --circle, --box-circle, --triangle");
    action = run_translate;
  });

  auto* heap_cmd = app.add_subcommand("heap", "Build heaps");
  heap_cmd->require_subcommand(1);
  auto* table_cmd = heap_cmd->add_subcommand("table", "Simple table heap h_n");
  table_cmd->add_option("--n", o.table_n, "Table size")->required();
  table_cmd->add_flag("--json", o.as_json, "Machine-readable output");
  table_cmd->callback([&] { action = run_heap_table; });
  auto* encode_cmd = heap_cmd->add_subcommand("encode-structure", "Heap encoding of a finite structure");
  encode_cmd->add_option("file", o.structure_file, "Structure file")->required();
  encode_cmd->add_flag("--json", o.as_json, "Machine-readable output");
  encode_cmd->callback([&] { action = run_heap_encode; });

  auto* check_cmd = app.add_subcommand("check", "Model check sigma, h |= A");
  formula_arg(check_cmd, "SLN formula, @file, or H");
  check_cmd->add_option("--sigma", o.sigma, "Assignment such as x=1,y=0");
  check_cmd->add_option("--heap", o.heap_file, "Heap file (default: empty heap)");
  check_cmd->add_flag("--staged", o.staged, "Run the rewriting pipeline and print each stage");
  check_cmd->callback([&] { action = run_check; });

  auto* decide_cmd = app.add_subcommand("decide-succ", "Decide a successor arithmetic sentence");
  formula_arg(decide_cmd, "closed SLN formula without points-to atoms, or @file");
  decide_cmd->callback([&] { action = run_decide; });

  auto* search_cmd = app.add_subcommand("search", "Bounded counterexample search");
  formula_arg(search_cmd, "SLN formula or @file");
  search_cmd->add_flag("--box-circle", o.box_circle, "Input is a Pi01 PA formula; search its translation");
  search_cmd->add_option("--seed", o.seed, "Seed for sampled heaps")->capture_default_str();
  search_cmd->add_option("--samples", o.samples, "Number of sampled heaps (default 200)");
  search_cmd->add_option("--max-value", o.max_value, "Largest assigned value")->capture_default_str();
  search_cmd->add_option("--tables", o.tables, "Table sizes n for h_n")->capture_default_str();
  search_cmd->add_option("--jobs", o.jobs, "Parallel workers")->capture_default_str();
  search_cmd->callback([&] { action = run_search; });

  auto* verify_cmd = app.add_subcommand("verify", "Run a lemma verification suite; prints a JSON report");
  verify_cmd->add_option("lemma", o.lemma, "Suite")
      ->required()
      ->check(CLI::IsMember({"pa2hn", "hn2forallh", "representation", "sigma01", "fol"}));
  verify_cmd->add_option("--seed", o.seed, "Seed")->capture_default_str();
  verify_cmd->add_option("--samples", o.samples, "Instances (suite default when omitted)");
  verify_cmd->add_option("--jobs", o.jobs, "Parallel workers for search")->capture_default_str();
  verify_cmd->add_flag("--json", o.as_json, "Accepted for symmetry; the report is always JSON");
  verify_cmd->callback([&] { action = run_verify; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kTrue : kError;
  }

  try {
    return action(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kError;
}
