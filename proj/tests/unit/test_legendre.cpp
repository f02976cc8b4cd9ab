#include <doctest.h>

#include <stdexcept>

#include "hypercheck/errors.hpp"
#include "hypercheck/legendre.hpp"

using namespace hypercheck;

namespace {

ExactRational q(long n, long d = 1) { return make_rational(n, d); }

// Bonnet: (n+1) P_{n+1} = (2n+1) x P_n - n P_{n-1}.
std::vector<ExactPoly> bonnet_table(unsigned up_to) {
  std::vector<ExactPoly> p{ExactPoly::constant(1), ExactPoly::x()};
  for (unsigned n = 1; n < up_to; ++n) {
    p.push_back(q(1, n + 1) * (q(2 * n + 1) * (ExactPoly::x() * p[n]) - q(n) * p[n - 1]));
  }
  return p;
}

}  // namespace

TEST_CASE("exact polynomial arithmetic") {
  const ExactPoly x = ExactPoly::x();
  CHECK(ExactPoly({1, 0, 0}).degree() == 0);
  CHECK(ExactPoly{}.degree() == -1);
  CHECK((x - x).is_zero());
  CHECK((x + ExactPoly::constant(1)) * (x - ExactPoly::constant(1)) == ExactPoly({-1, 0, 1}));
  CHECK((x + ExactPoly::constant(1)).pow(3) == ExactPoly({1, 3, 3, 1}));
  CHECK((x * x).compose_affine(2, 1) == ExactPoly({1, 4, 4}));
  CHECK(ExactPoly({1, 2, 3}).evaluate(2) == 17);
  CHECK(ExactPoly({q(-1, 2), 0, q(3, 2)}).to_string() == "3/2*x^2 - 1/2");
}

TEST_CASE("poly_derivative") {
  const ExactPoly x3({0, 0, 0, 1});
  CHECK(poly_derivative(x3, 1) == ExactPoly({0, 0, 3}));
  CHECK(poly_derivative(x3, 4).is_zero());
  CHECK(poly_derivative(x3, 0) == x3);
  CHECK(poly_derivative(rodrigues_base(2), 2) == ExactPoly({-4, 0, 12}));
}

TEST_CASE("legendre_poly by Rodrigues matches Bonnet") {
  CHECK(legendre_poly(0) == ExactPoly::constant(1));
  CHECK(legendre_poly(1) == ExactPoly::x());
  CHECK(legendre_poly(2) == ExactPoly({q(-1, 2), 0, q(3, 2)}));
  const auto table = bonnet_table(20);
  for (unsigned n = 0; n <= 20; ++n) {
    CAPTURE(n);
    const ExactPoly p = legendre_poly(n);
    CHECK(p == table[n]);
    CHECK(p.evaluate(1) == 1);
    CHECK(p.evaluate(-1) == (n % 2 == 0 ? 1 : -1));
  }
}

TEST_CASE("derivative symmetry and its shifted form") {
  const auto s11 = di_symmetry_sides(1, 1);
  CHECK(s11.lhs == ExactPoly({-2, 0, 2}));
  CHECK(s11.rhs == ExactPoly({-2, 0, 2}));
  // n = k: both sides are (2n)! (x^2-1)^n.
  const auto s44 = di_symmetry_sides(4, 4);
  CHECK(s44.lhs == ExactRational(factorial(8)) * rodrigues_base(4));
  for (unsigned n = 0; n <= 12; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(verify_di_symmetry(n, k));
      CHECK(verify_corollary2(n, k));
      if (n <= 8) CHECK(verify_di_corollary2_bridge(n, k));
    }
  }
  CHECK_THROWS_AS(verify_di_symmetry(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(verify_corollary2(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(verify_di_corollary2_bridge(2, 3), std::invalid_argument);
}

TEST_CASE("shifted identity rejects a wrong constant") {
  // f_1 f_1'' = 2 f_1, so 3 f_1 is wrong.
  const ExactPoly f1 = shifted_base(1);
  CHECK(f1 * poly_derivative(f1, 2) == q(2) * f1);
  CHECK_FALSE(f1 * poly_derivative(f1, 2) == q(3) * f1);
}

TEST_CASE("triple-binomial sum") {
  const auto s = corollary3_sides(2, 1, 1);
  CHECK(s.lhs == 4);
  CHECK(s.rhs == 4);
  for (unsigned n = 0; n <= 30; ++n) {
    CHECK(corollary3_sides(n, 0, n / 2).lhs == corollary3_sides(n, 0, n / 2).rhs);
    for (unsigned k = 0; k <= n; ++k) {
      for (unsigned l = 0; l <= n; ++l) CHECK(verify_corollary3(n, k, l));
    }
  }
  CHECK_THROWS_AS(verify_corollary3(2, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(verify_corollary3(2, 0, 3), std::invalid_argument);
}

TEST_CASE("terminating 3F2") {
  CHECK(terminating_3f2(3, 0, 2) == 1);
  CHECK(terminating_3f2(2, 1, 2) == 1);
  CHECK(terminating_3f2_closed_form(2, 1, 2) == 1);
  CHECK(terminating_3f2_degenerate(2, 1, 1));
  CHECK_THROWS_AS(terminating_3f2(2, 1, 1), DegenerateParameters);

  const auto p = terminating_3f2_params(4, 2, 3);
  CHECK(p.upper[0] == -2);
  CHECK(p.upper[1] == -1);
  CHECK(p.upper[2] == q(7, 2));
  CHECK(p.lower[0] == 1);
  CHECK(p.lower[1] == q(1, 2));
  CHECK(p.last_index == 1);
  // One live term: 1 + (-2)(-1)(7/2)/(1 * 1/2 * 1) = 15 = C(6,2)/C(6,6).
  CHECK(terminating_3f2(4, 2, 3) == 15);

  int live = 0;
  for (unsigned n = 0; n <= 12; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      for (unsigned l = 0; l <= n; ++l) {
        if (terminating_3f2_degenerate(n, k, l)) continue;
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(l);
        CHECK(terminating_3f2(n, k, l) == terminating_3f2_closed_form(n, k, l));
        ++live;
      }
    }
  }
  CHECK(live > 100);
}

TEST_CASE("Legendre eigenoperators") {
  const ExactPoly P2 = legendre_poly(2);
  CHECK(legendre_operator_apply(0, P2) == P2);
  CHECK(legendre_operator_apply(1, ExactPoly::x()) == ExactPoly({0, 2}));
  CHECK(legendre_operator_apply(1, P2) == ExactPoly({-3, 0, 9}));
  CHECK(legendre_operator_apply(1, P2) == q(6) * P2);
  CHECK(legendre_operator_apply(3, legendre_poly(5)) == q(20160) * legendre_poly(5));
  for (unsigned n = 0; n <= 12; ++n) {
    CHECK(verify_legendre_eigen(n));
    for (unsigned k = 0; k <= n; ++k) CHECK(verify_corollary4(n, k));
  }
  CHECK_THROWS_AS(verify_corollary4(1, 2), std::invalid_argument);
}
