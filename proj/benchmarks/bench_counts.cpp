#include <benchmark/benchmark.h>

#include "tcnet/compgraph.hpp"
#include "tcnet/distributions.hpp"
#include "tcnet/onecomp.hpp"
#include "tcnet/words.hpp"

using namespace tcnet;

static void BM_TcTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(words::TcTable(2, n).total(n));
}
BENCHMARK(BM_TcTable)->Arg(8)->Arg(25)->Arg(50)->Arg(100);

static void BM_TcFixedK(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(words::count_tc_words({2, n, 1}));
}
BENCHMARK(BM_TcFixedK)->Arg(100)->Arg(500);

static void BM_Compgraph(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(compgraph::count_tc_compgraph({3, 8, k}));
}
BENCHMARK(BM_Compgraph)->DenseRange(1, 3);

static void BM_GenFunK2(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(compgraph::count_tc_genfun_k2(3, n));
}
BENCHMARK(BM_GenFunK2)->Arg(12)->Arg(50);

static void BM_PrefixWalk(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(words::count_words_by_prefix_states(d, 5, 3));
}
BENCHMARK(BM_PrefixWalk)->DenseRange(2, 4);

static void BM_Enumerate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(words::enumerate_words(3, 4, 2, [](const words::Word&) {}));
}
BENCHMARK(BM_Enumerate);

static void BM_ETable(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(words::ETable(d, 40).recurrence_failures());
}
BENCHMARK(BM_ETable)->DenseRange(2, 4);

static void BM_OnecompPmf(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(dist::normal_cdf_diagnostic(200));
}
BENCHMARK(BM_OnecompPmf);
BENCHMARK_MAIN();
