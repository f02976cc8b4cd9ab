#include <benchmark/benchmark.h>

#include "hypercheck/proofcert.hpp"

using namespace hypercheck;

static void BM_TelescopeR1(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_telescoping_certificate(CertificateId::R1));
}
BENCHMARK(BM_TelescopeR1);

static void BM_TelescopeR2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_telescoping_certificate(CertificateId::R2));
}
BENCHMARK(BM_TelescopeR2);

static void BM_BoundaryTerm(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(boundary_term(CertificateId::R2).is_zero());
}
BENCHMARK(BM_BoundaryTerm);

static void BM_OdeCoefficients(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ExactRational a = make_rational(3, 2), b = make_rational(5, 2);
  for (auto _ : state) {
    const auto c = ode_taylor_coeffs(a, b, n);
    benchmark::DoNotOptimize(evaluate(c.back(), a, b));
  }
}
BENCHMARK(BM_OdeCoefficients)->Arg(10)->Arg(40);
