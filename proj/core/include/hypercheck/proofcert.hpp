#pragma once

// Exact checks of the proof machinery behind the integral identity: the
// singularity bookkeeping of the Moebius substitution, the shared invariants
// of the two generating-function quadratics, the two telescoping certificates
// with their boundary terms, and the Taylor coefficients forced by the
// resulting first-order ODE.

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "hypercheck/exact.hpp"
#include "hypercheck/multipoly.hpp"
#include "hypercheck/ratfunc.hpp"

namespace hypercheck {

// A rational number or the point at infinity.
struct ExtendedRational {
  ExactRational value = 0;
  bool infinite = false;

  static ExtendedRational infinity() { return {0, true}; }
  friend bool operator==(const ExtendedRational& l, const ExtendedRational& r) {
    return l.infinite == r.infinite && (l.infinite || l.value == r.value);
  }
};

// x = b(1-u)/(b+u). u = infinity maps to -b and u = -b maps to infinity.
// The map is its own inverse.
ExtendedRational moebius_map(const ExtendedRational& u, const ExactRational& a, const ExactRational& b);

struct SingularityPair {
  ExtendedRational from;
  ExtendedRational to;
};

// {0, 1, b(a+1)/(b-a), infinity} -> {1, 0, -a, -b}. Requires a != b.
std::array<SingularityPair, 4> moebius_singularities(const ExactRational& a, const ExactRational& b);
// True iff moebius_map sends every listed point to its partner and back.
bool verify_moebius_singularities(const ExactRational& a, const ExactRational& b);

// P(x) = A x^2 + B x + C with coefficients in (a, b, t).
struct QuadraticInX {
  MultiPoly A;
  MultiPoly B;
  MultiPoly C;

  // Throws std::invalid_argument if p has x-degree above 2.
  static QuadraticInX from_poly(const MultiPoly& p);

  MultiPoly discriminant() const { return B * B - 4 * A * C; }
  MultiPoly b_plus_2c() const { return B + 2 * C; }
  MultiPoly as_poly() const;
  // Numeric (A, B, C) at a parameter point.
  std::array<double, 3> coefficients_at(double a, double b, double t) const;
};

// P1 = (x+a)(x+b) - t x(1-x), P2 = (a-b)x + (a+1)b - t x(1-x).
std::pair<QuadraticInX, QuadraticInX> build_p1_p2();

// Exact: same discriminant and same B + 2C.
bool check_invariants_match(const QuadraticInX& p, const QuadraticInX& q);
bool check_invariants_match();

// int_0^1 dx/(Ax^2+Bx+C) = (1/r) log((B+2C+r)/(B+2C-r)), r = sqrt(B^2-4AC).
// A = 0 falls back to (1/B) log((B+C)/C). Throws std::domain_error when
// Delta <= 0 (with A != 0) or when P has a zero in [0, 1].
double quadratic_log_integral(double A, double B, double C);

// Same integral for any sign of Delta: log branch for Delta > 0, arctan branch
// for Delta < 0, 2/(B+2C) for Delta = 0. Throws std::domain_error when P has a
// zero in [0, 1].
double quadratic_reciprocal_integral(double A, double B, double C);

enum class CertificateId { R1, R2 };

struct Certificate {
  CertificateId which;
  RatFunc value;
};

// The two built-in certificates, transcribed as exact rational functions.
Certificate certificate(CertificateId which);
// F_j = 1/P_j.
RatFunc telescoped_integrand(CertificateId which);

// (t - S) F + (t^2 - 2tS + (a-b)^2) dF/dt + d(F R)/dx with S = 2ab + a + b.
RatFunc telescoping_residual(const RatFunc& F, const RatFunc& R);

// True iff the residual for (F_j, R) is identically zero.
bool verify_telescoping_certificate(CertificateId which, const RatFunc& R);
bool verify_telescoping_certificate(CertificateId which);

// Adds 1 + index / terms to the coefficient of numerator term (index mod terms).
RatFunc mutate_certificate(const RatFunc& R, std::size_t index);

// [F_j R_j] at x = 1 minus at x = 0.
RatFunc boundary_term(CertificateId which);

// The ODE (t - S) I + (t^2 - 2tS + (a-b)^2) I' + c = 0 as (coefficient of I,
// coefficient of I', constant c) with c taken from boundary_term.
struct TelescopedOde {
  MultiPoly i_coeff;
  MultiPoly di_coeff;
  RatFunc constant;
};
TelescopedOde telescoped_ode(CertificateId which);

// p + q * Lambda with Lambda = log(a(b+1)/((a+1)b)).
struct LogLinearCoeff {
  ExactRational rational = 0;
  ExactRational log_coeff = 0;

  friend LogLinearCoeff operator+(const LogLinearCoeff& l, const LogLinearCoeff& r) {
    return {l.rational + r.rational, l.log_coeff + r.log_coeff};
  }
  friend LogLinearCoeff operator-(const LogLinearCoeff& l, const LogLinearCoeff& r) {
    return {l.rational - r.rational, l.log_coeff - r.log_coeff};
  }
  friend LogLinearCoeff operator*(const ExactRational& s, const LogLinearCoeff& c) {
    return {s * c.rational, s * c.log_coeff};
  }
  friend bool operator==(const LogLinearCoeff& l, const LogLinearCoeff& r) {
    return l.rational == r.rational && l.log_coeff == r.log_coeff;
  }
};

// Evaluates p + q Lambda in extended precision before rounding, since the
// Taylor coefficients are tiny differences of large terms.
double evaluate(const LogLinearCoeff& c, const ExactRational& a, const ExactRational& b);

ExactRational log_argument(const ExactRational& a, const ExactRational& b);

// Exact I(0) = Lambda / (a - b); requires a != b.
LogLinearCoeff i_at_zero(const ExactRational& a, const ExactRational& b);
// Numeric I(0) for a, b > 0; a = b gives the limit 1/(a(a+1)).
double i_at_zero(double a, double b);

// c_0 .. c_N of I(t) = sum c_m t^m from the ODE recurrence
//   D (m+1) c_{m+1} = S (2m+1) c_m - m c_{m-1} - 2 [m = 0],
// D = (a-b)^2, S = 2ab + a + b, c_0 = I(0). Requires a, b > 0 and a != b.
std::vector<LogLinearCoeff> ode_taylor_coeffs(const ExactRational& a, const ExactRational& b, std::size_t N);

}  // namespace hypercheck
