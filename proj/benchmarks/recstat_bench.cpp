#include "recstat/extremal.hpp"
#include "recstat/permutation.hpp"
#include "recstat/scaling.hpp"
#include "recstat/tables.hpp"
#include "recstat/temme.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace recstat;

void BM_RecTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rec_table(n));
}
BENCHMARK(BM_RecTable)->Arg(50)->Arg(300)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_SrecTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(srec_table(n));
}
BENCHMARK(BM_SrecTable)->Arg(50)->Arg(150)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_ExtremalTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ExtremalTable(n));
}
BENCHMARK(BM_ExtremalTable)->Arg(40)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_SolveU1(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_u1(n, n / 2));
}
BENCHMARK(BM_SolveU1)->Arg(100)->Arg(10000)->Arg(1000000);

void BM_SupDeviation(benchmark::State& state) {
  const CountTable table = srec_table(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sup_deviation(table));
}
BENCHMARK(BM_SupDeviation)->Arg(50)->Arg(150)->Unit(benchmark::kMicrosecond);

void BM_LehmerRoundTrip(benchmark::State& state) {
  const Permutation p = sample_uniform(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(lehmer_decode(lehmer_encode(p)));
}
BENCHMARK(BM_LehmerRoundTrip)->Arg(1000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
