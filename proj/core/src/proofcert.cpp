#include "hypercheck/proofcert.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hypercheck {

namespace {

const MultiPoly kA = MultiPoly::variable(Var::a);
const MultiPoly kB = MultiPoly::variable(Var::b);
const MultiPoly kT = MultiPoly::variable(Var::t);
const MultiPoly kX = MultiPoly::variable(Var::x);

MultiPoly s_poly() { return 2 * kA * kB + kA + kB; }

class MpfrValue {
 public:
  explicit MpfrValue(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~MpfrValue() { mpfr_clear(v_); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

std::size_t bit_size(const ExactRational& r) {
  return mpz_sizeinbase(r.get_num_mpz_t(), 2) + mpz_sizeinbase(r.get_den_mpz_t(), 2);
}

void check_no_zero_on_unit_interval(double A, double B, double C) {
  const double p0 = C;
  const double p1 = A + B + C;
  bool ok = p0 != 0.0 && p1 != 0.0 && std::signbit(p0) == std::signbit(p1);
  if (ok && A != 0.0) {
    const double vertex = -B / (2.0 * A);
    if (vertex > 0.0 && vertex < 1.0) {
      const double pv = C - B * B / (4.0 * A);
      ok = pv != 0.0 && std::signbit(pv) == std::signbit(p0);
    }
  }
  if (!ok) throw std::domain_error("quadratic has a zero in [0, 1]");
}

// log((s + r)/(s - r)) / r using (s+r)(s-r) = 4 P(0) P(1) to avoid cancellation.
double log_branch(double A, double B, double C, double delta) {
  const double r = std::sqrt(delta);
  const double s = B + 2.0 * C;
  const double q = 4.0 * C * (A + B + C);
  double num = 0.0;
  double den = 0.0;
  if (s >= 0.0) {
    num = s + r;
    den = q / num;
  } else {
    den = s - r;
    num = q / den;
  }
  return std::log(num / den) / r;
}

}  // namespace

ExtendedRational moebius_map(const ExtendedRational& u, const ExactRational& a, const ExactRational& b) {
  (void)a;
  if (u.infinite) return {-b, false};
  const ExactRational den = b + u.value;
  if (den == 0) return ExtendedRational::infinity();
  return {ExactRational(b * (1 - u.value) / den), false};
}

std::array<SingularityPair, 4> moebius_singularities(const ExactRational& a, const ExactRational& b) {
  if (a == b) throw std::invalid_argument("moebius singularities require a != b");
  return {{
      {{0, false}, {1, false}},
      {{1, false}, {0, false}},
      {{ExactRational(b * (a + 1) / (b - a)), false}, {-a, false}},
      {ExtendedRational::infinity(), {-b, false}},
  }};
}

bool verify_moebius_singularities(const ExactRational& a, const ExactRational& b) {
  const auto points = moebius_singularities(a, b);
  return std::all_of(points.begin(), points.end(), [&](const auto& p) {
    return moebius_map(p.from, a, b) == p.to && moebius_map(p.to, a, b) == p.from;
  });
}

QuadraticInX QuadraticInX::from_poly(const MultiPoly& p) {
  auto parts = p.coefficients_in(Var::x);
  if (parts.size() > 3) throw std::invalid_argument("polynomial is not quadratic in x");
  parts.resize(3);
  return {parts[2], parts[1], parts[0]};
}

MultiPoly QuadraticInX::as_poly() const { return A * kX * kX + B * kX + C; }

std::array<double, 3> QuadraticInX::coefficients_at(double a, double b, double t) const {
  const std::array<double, kVarCount> pt{a, b, t, 0.0};
  return {A.evaluate(pt), B.evaluate(pt), C.evaluate(pt)};
}

std::pair<QuadraticInX, QuadraticInX> build_p1_p2() {
  const MultiPoly shared = kT * kX * (1 - kX);
  const MultiPoly p1 = (kX + kA) * (kX + kB) - shared;
  const MultiPoly p2 = (kA - kB) * kX + (kA + 1) * kB - shared;
  return {QuadraticInX::from_poly(p1), QuadraticInX::from_poly(p2)};
}

bool check_invariants_match(const QuadraticInX& p, const QuadraticInX& q) {
  return (p.discriminant() - q.discriminant()).is_zero() && (p.b_plus_2c() - q.b_plus_2c()).is_zero();
}

bool check_invariants_match() {
  const auto [p1, p2] = build_p1_p2();
  return check_invariants_match(p1, p2);
}

double quadratic_log_integral(double A, double B, double C) {
  check_no_zero_on_unit_interval(A, B, C);
  if (A == 0.0) {
    if (B == 0.0) return 1.0 / C;
    return std::log((B + C) / C) / B;
  }
  const double delta = B * B - 4.0 * A * C;
  if (!(delta > 0.0)) throw std::domain_error("quadratic_log_integral requires a positive discriminant");
  return log_branch(A, B, C, delta);
}

double quadratic_reciprocal_integral(double A, double B, double C) {
  check_no_zero_on_unit_interval(A, B, C);
  if (A == 0.0) return quadratic_log_integral(A, B, C);
  const double delta = B * B - 4.0 * A * C;
  if (delta > 0.0) return log_branch(A, B, C, delta);
  const double s = B + 2.0 * C;
  if (delta == 0.0) return 2.0 / s;
  // (2/w) (atan((2A+B)/w) - atan(B/w)), folded into one atan2 whose branch
  // follows the sign of A.
  const double w = std::sqrt(-delta);
  const double sign = A > 0.0 ? 1.0 : -1.0;
  return 2.0 / w * std::atan2(sign * w, sign * s);
}

Certificate certificate(CertificateId which) {
  const MultiPoly S = s_poly();
  if (which == CertificateId::R1) {
    return {which, RatFunc(((kA + kB + kT + 2) * kX + S - kT) * kX)};
  }
  const MultiPoly num = (S * kT - (kA - kB).pow(2)) * kX * kX + kB * (kA + 1) * (S - kT);
  return {which, RatFunc(num, kT + kB - kA)};
}

RatFunc telescoped_integrand(CertificateId which) {
  const auto [p1, p2] = build_p1_p2();
  return RatFunc(1, which == CertificateId::R1 ? p1.as_poly() : p2.as_poly());
}

RatFunc telescoping_residual(const RatFunc& F, const RatFunc& R) {
  const MultiPoly S = s_poly();
  const MultiPoly Q = kT * kT - 2 * kT * S + (kA - kB).pow(2);
  return RatFunc(kT - S) * F + RatFunc(Q) * F.diff(Var::t) + (F * R).diff(Var::x);
}

bool verify_telescoping_certificate(CertificateId which, const RatFunc& R) {
  return telescoping_residual(telescoped_integrand(which), R).is_zero();
}

bool verify_telescoping_certificate(CertificateId which) {
  return verify_telescoping_certificate(which, certificate(which).value);
}

RatFunc mutate_certificate(const RatFunc& R, std::size_t index) {
  const auto& terms = R.num().terms();
  if (terms.empty()) return RatFunc(R.num() + 1, R.den());
  auto it = terms.begin();
  std::advance(it, static_cast<std::ptrdiff_t>(index % terms.size()));
  const ExactRational delta = 1 + static_cast<long>(index / terms.size());
  return RatFunc(R.num() + MultiPoly::monomial(it->first, delta), R.den());
}

RatFunc boundary_term(CertificateId which) {
  const RatFunc product = telescoped_integrand(which) * certificate(which).value;
  return product.substitute(Var::x, ExactRational(1)) - product.substitute(Var::x, ExactRational(0));
}

TelescopedOde telescoped_ode(CertificateId which) {
  const MultiPoly S = s_poly();
  return {kT - S, kT * kT - 2 * kT * S + (kA - kB).pow(2), boundary_term(which)};
}

ExactRational log_argument(const ExactRational& a, const ExactRational& b) {
  return ExactRational(a * (b + 1) / ((a + 1) * b));
}

double evaluate(const LogLinearCoeff& c, const ExactRational& a, const ExactRational& b) {
  const ExactRational arg = log_argument(a, b);
  const std::size_t bits = 256 + 2 * std::max({bit_size(c.rational), bit_size(c.log_coeff), bit_size(arg)});
  const auto prec = static_cast<mpfr_prec_t>(bits);
  MpfrValue lambda(prec);
  MpfrValue sum(prec);
  mpfr_set_q(lambda.get(), arg.get_mpq_t(), MPFR_RNDN);
  mpfr_log(lambda.get(), lambda.get(), MPFR_RNDN);
  mpfr_mul_q(sum.get(), lambda.get(), c.log_coeff.get_mpq_t(), MPFR_RNDN);
  mpfr_add_q(sum.get(), sum.get(), c.rational.get_mpq_t(), MPFR_RNDN);
  return mpfr_get_d(sum.get(), MPFR_RNDN);
}

LogLinearCoeff i_at_zero(const ExactRational& a, const ExactRational& b) {
  if (a == b) throw std::invalid_argument("exact I(0) requires a != b");
  return {0, ExactRational(1 / (a - b))};
}

double i_at_zero(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw std::invalid_argument("I(0) requires a, b > 0");
  if (a == b) return 1.0 / (a * (a + 1.0));
  return std::log(a * (b + 1.0) / ((a + 1.0) * b)) / (a - b);
}

std::vector<LogLinearCoeff> ode_taylor_coeffs(const ExactRational& a, const ExactRational& b, std::size_t N) {
  if (a <= 0 || b <= 0) throw std::invalid_argument("ode_taylor_coeffs requires a, b > 0");
  if (a == b) throw std::invalid_argument("ode_taylor_coeffs requires a != b (the recurrence divides by (a-b)^2)");
  const ExactRational S = 2 * a * b + a + b;
  const ExactRational D = (a - b) * (a - b);
  std::vector<LogLinearCoeff> c;
  c.reserve(N + 1);
  c.push_back(i_at_zero(a, b));
  for (std::size_t m = 0; m < N; ++m) {
    const ExactRational mm = static_cast<unsigned long>(m);
    LogLinearCoeff next = ExactRational(S * (2 * mm + 1)) * c[m];
    if (m == 0) {
      next.rational -= 2;
    } else {
      next = next - mm * c[m - 1];
    }
    c.push_back(ExactRational(1 / (D * (mm + 1))) * next);
  }
  return c;
}

}  // namespace hypercheck
