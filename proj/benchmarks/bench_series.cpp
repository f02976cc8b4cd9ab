#include <benchmark/benchmark.h>

#include "hypercheck/special.hpp"

using namespace hypercheck;

static void BM_Gauss2F1(benchmark::State& state) {
  const double z = static_cast<double>(state.range(0)) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(gauss_2f1({1.5, 2.0, 3.0, z}));
}
BENCHMARK(BM_Gauss2F1)->Arg(10)->Arg(50)->Arg(90);

static void BM_AppellF1(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0)) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(appell_f1({1.5, 2.0, 1.0, 3.0, x, -0.4}));
}
BENCHMARK(BM_AppellF1)->Arg(-80)->Arg(-10)->Arg(30);

static void BM_LogGamma(benchmark::State& state) {
  double x = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_gamma(x));
    x = x < 100.0 ? x + 0.37 : 0.5;
  }
}
BENCHMARK(BM_LogGamma);
