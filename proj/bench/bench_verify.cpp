// Serial reference vs OpenMP kernels on the verification grid and a moment
// table. Thread count follows OMP_NUM_THREADS.
#include "abc/verification.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_VerifySerial(benchmark::State& state) {
  const auto grid = state.range(0) ? abc::default_grid() : abc::small_grid();
  for (auto _ : state) benchmark::DoNotOptimize(abc::verify_serial(grid, {}));
}

void BM_VerifyParallel(benchmark::State& state) {
  const auto grid = state.range(0) ? abc::default_grid() : abc::small_grid();
  for (auto _ : state) benchmark::DoNotOptimize(abc::verify_parallel(grid, {}));
}

const std::vector<int> kLambdas{-4, -3, -2, -1, 0, 1, 2, 3, 4, 5, 6};

void BM_TableSerial(benchmark::State& state) {
  const auto grid = abc::default_grid();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        abc::moment_table_serial(grid.states_3d, kLambdas, abc::Mode::Float, true));
}

void BM_TableParallel(benchmark::State& state) {
  const auto grid = abc::default_grid();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        abc::moment_table_parallel(grid.states_3d, kLambdas, abc::Mode::Float, true));
}

}  // namespace

BENCHMARK(BM_VerifySerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TableSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TableParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
