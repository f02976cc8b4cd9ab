#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "hypercheck/identities.hpp"
#include "hypercheck/errors.hpp"

using namespace hypercheck;

namespace {

const double kLog43 = std::log(4.0 / 3.0);

double rel_diff(double got, double want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

}  // namespace

TEST_CASE("report bookkeeping") {
  const auto r = make_report("demo", {{"a", 1.0}}, 2.0, 2.0 + 1e-12, 1e-10);
  CHECK(r.abs_err == doctest::Approx(1e-12).epsilon(1e-3));
  CHECK(r.rel_err == doctest::Approx(1e-12 / (2.0 + 1e-12)).epsilon(1e-3));
  CHECK(r.pass);
  CHECK_FALSE(make_report("demo", {}, 1.0, 1.1, 1e-10).pass);
  CHECK(make_report("zero", {}, 0.0, 0.0, 1e-10).pass);
  CHECK_FALSE(make_report("nan", {}, NAN, 1.0, 1e-10).pass);
  const auto e = make_exact_report("sym", {}, true);
  CHECK(e.pass);
  CHECK(e.tol == 0.0);
  CHECK(e.rel_err == 0.0);
}

TEST_CASE("verify_ezz") {
  // I(0) = ln(a(b+1)/((a+1)b))/(a-b) = ln(4/3) at a=2, b=1.
  const auto r = verify_ezz({2, 1, 0});
  CHECK(r.pass);
  CHECK(std::abs(r.lhs - kLog43) <= 1e-10);
  CHECK(std::abs(r.rhs - kLog43) <= 1e-10);
  CHECK(r.identity_name == "ezz");
  CHECK(r.params.at("a") == 2.0);

  // a = b = 1: RHS denominator is the constant 2^3, so rhs = B(3,3)/8 = 1/240.
  const auto eq = verify_ezz({1, 1, 2});
  CHECK(eq.pass);
  CHECK(rel_diff(eq.rhs, 1.0 / 240.0) <= 1e-13);

  const auto frac = verify_ezz({0.5, 3, -0.5}, 1e-9);
  CHECK(frac.pass);

  CHECK_THROWS_AS(verify_ezz({0, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(verify_ezz({1, 1, -1}), std::invalid_argument);
}

TEST_CASE("verify_ezz is symmetric in a and b on the left side") {
  for (double n : {0.0, 1.0, 2.5, -0.5}) {
    const auto ab = verify_ezz({3.0, 0.4, n});
    const auto ba = verify_ezz({0.4, 3.0, n});
    CHECK(rel_diff(ab.lhs, ba.lhs) <= 1e-13);
    CHECK(ab.pass);
    CHECK(ba.pass);
    // The right-hand integrands differ, the values do not.
    CHECK(rel_diff(ab.rhs, ba.rhs) <= 1e-10);
  }
}

TEST_CASE("verify_theorem_main") {
  const auto r = verify_theorem_main({2, 1, 0, 0, 0, 0});
  CHECK(r.pass);
  CHECK(std::abs(r.lhs - kLog43) <= 1e-12);
  CHECK(std::abs(r.rhs - kLog43) <= 1e-12);

  for (double n : {0.0, 1.0, 3.0, 0.5, -0.5}) {
    for (auto [a, b] : {std::pair{2.0, 1.0}, std::pair{0.3, 5.0}}) {
      const auto thm = verify_theorem_main({a, b, n, n, n, n});
      const auto ezz = verify_ezz({a, b, n});
      CHECK(rel_diff(thm.lhs, ezz.lhs) <= 1e-12);
      CHECK(rel_diff(thm.rhs, ezz.rhs) <= 1e-12);
    }
  }

  CHECK(verify_theorem_main({1.5, 0.7, 2.5, -0.5, 0.5, 1.25}, 1e-9).pass);
  CHECK(verify_theorem_main({0.5, 3.0, -0.7, 1.3, -0.75, -0.5}, 1e-9).pass);
  CHECK_THROWS_AS(verify_theorem_main({1, 1, 0, 0, -1, 0}), std::invalid_argument);
}

TEST_CASE("verify_5ezz") {
  const auto r = verify_5ezz({2, 1, 0, 0, 0});
  CHECK(r.pass);
  CHECK(std::abs(r.lhs - kLog43) <= 1e-12);
  CHECK_FALSE(r.detail.empty());

  for (double n : {0.0, 2.0, 4.0}) {
    const auto five = verify_5ezz({1.7, 0.6, n, n, n});
    const auto ezz = verify_ezz({1.7, 0.6, n});
    CHECK(rel_diff(five.lhs, ezz.lhs) <= 1e-12);
    CHECK(rel_diff(five.rhs, ezz.rhs) <= 1e-12);
  }
  CHECK(verify_5ezz({0.8, 1.3, 1.5, 0.5, 2}, 1e-9).pass);
}

TEST_CASE("verify_chv") {
  const auto trivial = verify_chv({1, 0, 0});
  CHECK(trivial.pass);
  CHECK(trivial.lhs == trivial.rhs);

  // int x(1-x)/(x+1)^3 = 3/4 - ln 2 by the substitution u = x + 1.
  const auto r = verify_chv({1, 1, 1});
  CHECK(r.pass);
  CHECK(rel_diff(r.lhs, 0.75 - std::log(2.0)) <= 1e-12);

  CHECK(verify_chv({2, 3, 2}).pass);
  CHECK_THROWS_AS(verify_chv({1, 2, 3}), std::invalid_argument);
}

TEST_CASE("verify_appell_identity") {
  for (double y : {-0.6, 0.0, 0.4}) {
    const auto r = verify_appell_identity({1.5, 2, 1, y, y});
    CHECK(r.lhs == 1.0);
    CHECK(r.pass);
  }
  const auto r = verify_appell_identity({1, 1, 1, -0.5, -0.25}, 1e-9);
  CHECK(r.pass);
  const auto origin = verify_appell_identity({1, 1, 1, 0, 0});
  CHECK(origin.lhs == 1.0);
  CHECK(origin.rhs == 1.0);

  // (y-x)/(y-1) = -1.1/0.7 leaves the series clamp.
  CHECK_THROWS_AS(verify_appell_identity({1, 1, 1, -0.8, 0.3}), SeriesDiverges);
  CHECK_THROWS_AS(verify_appell_identity({3, 1, 1, 0.1, 0.1}), std::invalid_argument);
}

TEST_CASE("verify_gen_integral") {
  const auto unit = verify_gen_integral({1, 1, 1, 0, 0});
  CHECK(std::abs(unit.lhs - 1.0) <= 1e-13);
  CHECK(std::abs(unit.rhs - 1.0) <= 1e-13);
  CHECK(verify_gen_integral({1.5, 2, 1, -0.4, -0.8}, 1e-9).pass);

  // alpha = beta = beta' = n+1 with x = -1/a, y = -1/b is the ezz integral
  // scaled by (ab)^(n+1).
  for (double n : {0.0, 1.0, 3.0}) {
    const double a = 2.0, b = 1.0;
    const auto gen = verify_gen_integral({n + 1, n + 1, n + 1, -1 / a, -1 / b});
    const auto ezz = verify_ezz({a, b, n});
    const double scale = std::pow(a * b, n + 1);
    CHECK(gen.pass);
    CHECK(rel_diff(gen.lhs / scale, ezz.lhs) <= 1e-11);
    CHECK(rel_diff(gen.rhs / scale, ezz.rhs) <= 1e-11);
  }
}

TEST_CASE("series and integral forms agree") {
  for (double x : {-0.4, -0.1, 0.0}) {
    for (double y : {-0.8, -0.1, 0.3}) {
      const AppellCaseParams p{2.5, 1, 2, x, y};
      const double z = (y - x) / (y - 1);
      if (std::abs(z) > 0.95) continue;
      const auto agree = verify_appell_gen_agreement(p, 1e-9);
      INFO("x=" << x << " y=" << y << " " << agree.detail);
      CHECK(agree.pass);
    }
  }
}

TEST_CASE("verify_gamma_mixed_partial") {
  const auto base = verify_gamma_mixed_partial({1, 1, 2, 0, 0});
  CHECK(base.pass);
  CHECK(base.lhs == 1.0);
  CHECK(base.tol == 0.0);

  // 0!2!B(2,2) = 2/6 and 1!1!B(3,1) = 1/3.
  const auto r = verify_gamma_mixed_partial({1, 1, 2, 1, 1});
  CHECK(r.pass);
  CHECK(r.detail == "exact 1/3 vs 1/3");

  const auto real = verify_gamma_mixed_partial({1.5, 2.25, 4, 2, 1}, 1e-12);
  CHECK(real.pass);
  CHECK(real.tol == 1e-12);

  CHECK_THROWS_AS(verify_gamma_mixed_partial({3, 1, 2, 0, 0}), std::invalid_argument);
}
