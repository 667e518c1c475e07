#include <benchmark/benchmark.h>

#include "zconvex/census.hpp"
#include "zconvex/gf.hpp"
#include "zconvex/pathmetry.hpp"
#include "zconvex/series.hpp"
#include "zconvex/verify.hpp"

namespace {

using namespace zconvex;

void BM_EnumerateConvex(benchmark::State& state) {
  const int sp = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long n = 0;
    enumerate_convex(sp, [&](const Polyomino&) { ++n; });
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_EnumerateConvex)->DenseRange(8, 11)->Unit(benchmark::kMillisecond);

void BM_CensusWithDegrees(benchmark::State& state) {
  const int sp = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(census_table(sp, standard_classifier()));
}
BENCHMARK(BM_CensusWithDegrees)->DenseRange(8, 10)->Unit(benchmark::kMillisecond);

void BM_ConvexityDegree(benchmark::State& state) {
  std::vector<Polyomino> sample;
  enumerate_convex(static_cast<int>(state.range(0)), [&](const Polyomino& p) {
    if (sample.size() < 2000) sample.push_back(p);
  });
  for (auto _ : state)
    for (const Polyomino& p : sample) benchmark::DoNotOptimize(convexity_degree(p));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(sample.size()));
}
BENCHMARK(BM_ConvexityDegree)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_SeriesMultiply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BiSeries a = gf_convex(n), b = solve_d(n);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_SeriesMultiply)->Arg(12)->Arg(20)->Arg(30);

void BM_SolveSystem(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_system(n));
}
BENCHMARK(BM_SolveSystem)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_ZConvexClosed(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gf_zconvex_closed(n));
}
BENCHMARK(BM_ZConvexClosed)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
