#include "scc/ell.hpp"
#include "scc/expansion.hpp"
#include "scc/obstruction.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_Ell(benchmark::State& state) {
  const scc::Word w = scc::random_word(3, static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(scc::ell(w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Ell)->RangeMultiplier(4)->Range(16, 4096)->Complexity(benchmark::oN);

void BM_Analyze(benchmark::State& state) {
  const scc::Word a = scc::random_word(3, static_cast<std::size_t>(state.range(0)), 11);
  const scc::Word b = scc::random_word(3, static_cast<std::size_t>(state.range(0)), 12);
  for (auto _ : state) benchmark::DoNotOptimize(scc::analyze(3, a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Analyze)->RangeMultiplier(4)->Range(16, 4096)->Complexity(benchmark::oN);

void BM_AnalyzeWorkedExample(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(scc::analyze(2, "x1 x2 y2 x2^-1", "y2 x1^-1"));
}
BENCHMARK(BM_AnalyzeWorkedExample);

void BM_LTheta(benchmark::State& state) {
  const scc::Word a = scc::random_word(static_cast<int>(state.range(0)), 20, 3);
  for (auto _ : state) benchmark::DoNotOptimize(scc::L_theta(a, 3));
}
BENCHMARK(BM_LTheta)->DenseRange(1, 4);

void BM_TwistConsistency(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const scc::Word a = scc::parse_word("x1 x2 y2 x2^-1", g);
  const scc::Word b = scc::parse_word("y2 x1^-1", g);
  for (auto _ : state) benchmark::DoNotOptimize(scc::twist_consistency(g, a, b));
}
BENCHMARK(BM_TwistConsistency)->DenseRange(2, 4);

}  // namespace

BENCHMARK_MAIN();
