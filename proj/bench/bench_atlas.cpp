#include <benchmark/benchmark.h>

#include "quadnet/atlas/atlas.hpp"

using namespace quadnet;

static void BM_EnumerateParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_atlas());
}
BENCHMARK(BM_EnumerateParallel)->Unit(benchmark::kMillisecond);

static void BM_EnumerateSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_atlas_serial());
}
BENCHMARK(BM_EnumerateSerial)->Unit(benchmark::kMillisecond);

static void BM_VerifyRowParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_atlas_row(static_cast<int>(state.range(0)), 8, 0));
}
BENCHMARK(BM_VerifyRowParallel)->Arg(1)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_VerifyRowSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_atlas_row_serial(static_cast<int>(state.range(0)), 8, 0));
}
BENCHMARK(BM_VerifyRowSerial)->Arg(1)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
