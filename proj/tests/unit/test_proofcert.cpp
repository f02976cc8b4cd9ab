#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "hypercheck/identities.hpp"
#include "hypercheck/proofcert.hpp"
#include "hypercheck/quadrature.hpp"

using namespace hypercheck;

namespace {

const MultiPoly kA = MultiPoly::variable(Var::a);
const MultiPoly kB = MultiPoly::variable(Var::b);
const MultiPoly kT = MultiPoly::variable(Var::t);
const MultiPoly kX = MultiPoly::variable(Var::x);

ExactRational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 17);
  return make_rational(num(rng), den(rng));
}

double quad_reciprocal(double A, double B, double C) {
  return tanh_sinh_integrate(WeightedIntegrand::plain([=](double x) { return 1.0 / ((A * x + B) * x + C); }))
      .value;
}

double rel_diff(double got, double want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

}  // namespace

TEST_CASE("moebius map on the singular points") {
  const ExactRational a = 2, b = 1;
  CHECK(moebius_map({0, false}, a, b) == ExtendedRational{1, false});
  CHECK(moebius_map({1, false}, a, b) == ExtendedRational{0, false});
  CHECK(moebius_map({ExactRational(b * (a + 1) / (b - a)), false}, a, b) == ExtendedRational{-a, false});
  CHECK(moebius_map(ExtendedRational::infinity(), a, b) == ExtendedRational{-b, false});
  CHECK(moebius_map({-b, false}, a, b).infinite);

  std::mt19937 rng(7);
  int checked = 0;
  while (checked < 20) {
    const ExactRational ra = random_rational(rng);
    const ExactRational rb = random_rational(rng);
    if (ra == rb || rb == 0) continue;
    CHECK(verify_moebius_singularities(ra, rb));
    const ExtendedRational u{random_rational(rng), false};
    CHECK(moebius_map(moebius_map(u, ra, rb), ra, rb) == u);
    ++checked;
  }
  CHECK_THROWS_AS(moebius_singularities(1, 1), std::invalid_argument);
}

TEST_CASE("P1 and P2 expansion") {
  const auto [p1, p2] = build_p1_p2();
  CHECK(p1.A == 1 + kT);
  CHECK(p1.B == kA + kB - kT);
  CHECK(p1.C == kA * kB);
  CHECK(p2.A == kT);
  CHECK(p2.B == kA - kB - kT);
  CHECK(p2.C == (kA + 1) * kB);
  CHECK(p1.as_poly().substitute(Var::t, ExactRational(0)) == (kX + kA) * (kX + kB));
  CHECK_THROWS_AS(QuadraticInX::from_poly(kX.pow(3)), std::invalid_argument);
}

TEST_CASE("shared invariants") {
  const auto [p1, p2] = build_p1_p2();
  CHECK(p1.b_plus_2c() == kA + kB - kT + 2 * kA * kB);
  CHECK(p2.b_plus_2c() == kA + kB - kT + 2 * kA * kB);
  const MultiPoly delta =
      kA * kA + kB * kB + kT * kT - 2 * kA * kB - 2 * kA * kT - 2 * kB * kT - 4 * kA * kB * kT;
  CHECK(p1.discriminant() == delta);
  CHECK(p2.discriminant() == delta);
  CHECK(check_invariants_match());

  // Any single-coefficient change of P2 breaks the match.
  for (int slot = 0; slot < 3; ++slot) {
    for (const MultiPoly& bump : {MultiPoly(1), kA, kB, kT, kA * kB}) {
      QuadraticInX q = p2;
      (slot == 0 ? q.A : slot == 1 ? q.B : q.C) += bump;
      CHECK_FALSE(check_invariants_match(p1, q));
    }
  }
}

TEST_CASE("quadratic log integral") {
  CHECK(quadratic_log_integral(1, 3, 2) == doctest::Approx(std::log(4.0 / 3.0)).epsilon(1e-14));
  CHECK(quadratic_log_integral(0, 1, 3) == doctest::Approx(std::log(4.0 / 3.0)).epsilon(1e-14));
  CHECK_THROWS_AS(quadratic_log_integral(1, 0, 1), std::domain_error);     // Delta < 0
  CHECK_THROWS_AS(quadratic_log_integral(1, -1, 0.1), std::domain_error);  // roots inside
  CHECK_THROWS_AS(quadratic_log_integral(1, 0, -0.25), std::domain_error); // root at 1/2
  CHECK_THROWS_AS(quadratic_log_integral(1, -1, 0), std::domain_error);    // root at 0

  std::mt19937 rng(11);
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  int checked = 0;
  while (checked < 20) {
    const double A = coef(rng), B = coef(rng), C = coef(rng);
    double value = 0.0;
    try {
      value = quadratic_log_integral(A, B, C);
    } catch (const std::domain_error&) {
      continue;
    }
    // Stay clear of near-root cases where 1/P is badly conditioned.
    if (std::min({std::abs(C), std::abs(A + B + C)}) < 0.2) continue;
    CHECK(rel_diff(value, quad_reciprocal(A, B, C)) <= 1e-11);
    ++checked;
  }
}

TEST_CASE("quadratic reciprocal integral covers every discriminant sign") {
  // Delta < 0: int dx/(x^2+1) = pi/4.
  CHECK(quadratic_reciprocal_integral(1, 0, 1) == doctest::Approx(std::atan(1.0)).epsilon(1e-14));
  CHECK(quadratic_reciprocal_integral(-1, 0, -1) == doctest::Approx(-std::atan(1.0)).epsilon(1e-14));
  // Delta = 0: int dx/(x+1)^2 = 1/2.
  CHECK(quadratic_reciprocal_integral(1, 2, 1) == doctest::Approx(0.5).epsilon(1e-14));
  for (const auto& [A, B, C] : {std::array<double, 3>{2, 1, 3}, {-0.5, 0.2, -1}, {5, -4, 1}}) {
    CHECK(rel_diff(quadratic_reciprocal_integral(A, B, C), quad_reciprocal(A, B, C)) <= 1e-12);
  }
}

TEST_CASE("I1(t) = I2(t) near the origin") {
  const auto [p1, p2] = build_p1_p2();
  for (const auto& [a, b] : {std::pair{2.0, 1.0}, {0.5, 0.3}, {3.0, 0.2}}) {
    for (double t : {0.0, 0.1, -0.1, 0.5, -0.5}) {
      const auto c1 = p1.coefficients_at(a, b, t);
      const auto c2 = p2.coefficients_at(a, b, t);
      const double i1 = quadratic_reciprocal_integral(c1[0], c1[1], c1[2]);
      const double i2 = quadratic_reciprocal_integral(c2[0], c2[1], c2[2]);
      CAPTURE(a);
      CAPTURE(b);
      CAPTURE(t);
      CHECK(rel_diff(i1, i2) <= 1e-11);
      CHECK(rel_diff(quad_reciprocal(c1[0], c1[1], c1[2]), quad_reciprocal(c2[0], c2[1], c2[2])) <= 1e-10);
      CHECK(rel_diff(i1, quad_reciprocal(c1[0], c1[1], c1[2])) <= 1e-11);
    }
  }
}

TEST_CASE("telescoping certificates") {
  CHECK(verify_telescoping_certificate(CertificateId::R1));
  CHECK(verify_telescoping_certificate(CertificateId::R2));
  // Swapped certificates do not telescope the other integrand.
  CHECK_FALSE(verify_telescoping_certificate(CertificateId::R1, certificate(CertificateId::R2).value));
  CHECK_FALSE(verify_telescoping_certificate(CertificateId::R2, certificate(CertificateId::R1).value));

  for (CertificateId id : {CertificateId::R1, CertificateId::R2}) {
    const RatFunc R = certificate(id).value;
    for (std::size_t i = 0; i < 10; ++i) {
      const RatFunc mutated = mutate_certificate(R, i);
      CHECK_FALSE(mutated == R);
      CHECK_FALSE(verify_telescoping_certificate(id, mutated));
    }
  }
}

TEST_CASE("boundary term is the constant 2") {
  for (CertificateId id : {CertificateId::R1, CertificateId::R2}) {
    CHECK(boundary_term(id) == RatFunc(2));
    const TelescopedOde ode = telescoped_ode(id);
    CHECK(ode.constant == boundary_term(id));
    CHECK(ode.i_coeff == kT - 2 * kA * kB - kA - kB);
  }
  // R1 vanishes at x = 0, so the boundary is F1 R1 at x = 1 alone.
  CHECK(certificate(CertificateId::R1).value.substitute(Var::x, ExactRational(0)).is_zero());
}

TEST_CASE("ODE Taylor coefficients") {
  const ExactRational a = 2, b = 1;
  const auto c = ode_taylor_coeffs(a, b, 10);
  REQUIRE(c.size() == 11);
  CHECK(c[0] == LogLinearCoeff{0, 1});
  CHECK(c[1] == LogLinearCoeff{-2, 7});
  CHECK(evaluate(c[0], a, b) == doctest::Approx(std::log(4.0 / 3.0)).epsilon(1e-15));

  // c1 against its defining integral.
  const double c1_quad = tanh_sinh_integrate(WeightedIntegrand::plain([](double x) {
                           const double p = (x + 2) * (x + 1);
                           return x * (1 - x) / (p * p);
                         })).value;
  CHECK(std::abs(evaluate(c[1], a, b) - c1_quad) <= 1e-10);

  // The recurrence follows from the ODE: substitute the truncated series and
  // every coefficient of t^m below the truncation must vanish.
  const ExactRational S = 2 * a * b + a + b, D = (a - b) * (a - b);
  for (std::size_t m = 0; m < 10; ++m) {
    // [t^m] of (t - S) I + (t^2 - 2tS + D) I' + 2.
    LogLinearCoeff sum = ExactRational(-S) * c[m] + ExactRational(D * static_cast<long>(m + 1)) * c[m + 1];
    if (m >= 1) sum = sum + c[m - 1] - ExactRational(2 * S * static_cast<long>(m)) * c[m];
    if (m >= 2) sum = sum + ExactRational(static_cast<long>(m - 1)) * c[m - 1];
    if (m == 0) sum.rational += 2;
    CHECK(sum == LogLinearCoeff{});
  }

  CHECK_THROWS_AS(ode_taylor_coeffs(1, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(ode_taylor_coeffs(-1, 1, 3), std::invalid_argument);
  CHECK(i_at_zero(1.0, 1.0) == doctest::Approx(0.5));
  CHECK(i_at_zero(2.0, 1.0) == doctest::Approx(std::log(4.0 / 3.0)));
}

TEST_CASE("three-way agreement of Taylor coefficients and both integrals") {
  const std::pair<ExactRational, ExactRational> pairs[] = {
      {2, 1}, {3, 1}, {make_rational(1, 2), make_rational(3, 2)}, {1, make_rational(1, 4)}, {5, 2},
      {make_rational(3, 4), make_rational(1, 2)}, {4, make_rational(1, 2)}, {make_rational(3, 2), make_rational(5, 2)},
      {make_rational(1, 4), 3}, {6, make_rational(5, 4)}};
  for (const auto& [a, b] : pairs) {
    const auto c = ode_taylor_coeffs(a, b, 10);
    for (std::size_t m = 0; m <= 10; ++m) {
      const auto r = verify_ezz({a.get_d(), b.get_d(), static_cast<double>(m)});
      const double cm = evaluate(c[m], a, b);
      CAPTURE(a.get_d());
      CAPTURE(b.get_d());
      CAPTURE(m);
      CHECK(rel_diff(cm, r.lhs) <= 1e-9);
      CHECK(rel_diff(cm, r.rhs) <= 1e-9);
    }
  }
}
