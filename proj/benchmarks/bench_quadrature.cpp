#include <benchmark/benchmark.h>

#include <cmath>

#include "hypercheck/identities.hpp"
#include "hypercheck/quadrature.hpp"

using namespace hypercheck;

static void BM_SmoothIntegrand(benchmark::State& state) {
  const auto f = WeightedIntegrand::plain([](double x) { return 1.0 / ((x + 2.0) * (x + 1.0)); });
  for (auto _ : state) benchmark::DoNotOptimize(tanh_sinh_integrate(f).value);
}
BENCHMARK(BM_SmoothIntegrand);

static void BM_SingularWeight(benchmark::State& state) {
  const WeightedIntegrand f(-0.75, -0.5, [](double x) { return std::exp(-x); });
  for (auto _ : state) benchmark::DoNotOptimize(tanh_sinh_integrate(f).value);
}
BENCHMARK(BM_SingularWeight);

static void BM_EzzCase(benchmark::State& state) {
  const double n = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_ezz({2.0, 1.0, n}).rel_err);
}
BENCHMARK(BM_EzzCase)->Arg(0)->Arg(4)->Arg(8);
