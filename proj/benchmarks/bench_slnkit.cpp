#include <benchmark/benchmark.h>

#include "slnkit/generators.hpp"
#include "slnkit/heap.hpp"
#include "slnkit/model_checker.hpp"
#include "slnkit/normalizer.hpp"
#include "slnkit/parser.hpp"
#include "slnkit/succ_arith.hpp"
#include "slnkit/translator.hpp"

using namespace slnkit;

static void BM_TableBuild(benchmark::State& state) {
  const Nat n = static_cast<Nat>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(simple_table_heap(n));
}
BENCHMARK(BM_TableBuild)->DenseRange(0, 4);

static void BM_TableCondition(benchmark::State& state) {
  const Heap h = simple_table_heap(static_cast<Nat>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check(VarAssignment{}, h, table_heap_condition()));
}
BENCHMARK(BM_TableCondition)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_Normalize(benchmark::State& state) {
  const pa::Formula f = parse_pa("forall y <= x + (x + s(x)). 0 <= x + (y * (x + y))");
  for (auto _ : state) benchmark::DoNotOptimize(normalize_bounded(f));
}
BENCHMARK(BM_Normalize);

static void BM_CircleTranslate(benchmark::State& state) {
  const pa::Formula f = normalize_bounded(parse_pa("forall y <= x + (x + s(x)). 0 <= x + (y * (x + y))"));
  for (auto _ : state) benchmark::DoNotOptimize(circle_translate(f));
}
BENCHMARK(BM_CircleTranslate);

static void BM_SuccessorDecide(benchmark::State& state) {
  Generator gen(7);
  std::vector<sln::Formula> sentences;
  for (int i = 0; i < 64; ++i) sentences.push_back(gen.succ_sentence(static_cast<std::size_t>(state.range(0)), 5));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(decide_sentence(sentences[i++ % sentences.size()]));
}
BENCHMARK(BM_SuccessorDecide)->DenseRange(1, 3);
BENCHMARK_MAIN();
