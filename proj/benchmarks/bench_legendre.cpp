#include <benchmark/benchmark.h>

#include "hypercheck/legendre.hpp"

using namespace hypercheck;

static void BM_LegendrePoly(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(legendre_poly(n).degree());
}
BENCHMARK(BM_LegendrePoly)->Arg(8)->Arg(16)->Arg(32);

static void BM_Corollary4(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_corollary4(n, n / 2));
}
BENCHMARK(BM_Corollary4)->Arg(6)->Arg(12);

static void BM_TripleBinomialSweep(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    bool ok = true;
    for (unsigned k = 0; k <= n; ++k) {
      for (unsigned l = 0; l <= n; ++l) ok = ok && verify_corollary3(n, k, l);
    }
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_TripleBinomialSweep)->Arg(10)->Arg(30);
