#pragma once

// Real-argument special functions: Gamma, Beta, the Gauss 2F1 series, the
// Appell F1 double series, and their Euler/Picard integral representations.
// Series are only evaluated inside a clamp of their convergence discs; there
// is no analytic continuation.

#include "hypercheck/errors.hpp"

namespace hypercheck {

struct Hyp2F1Params {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double z = 0.0;
};

struct AppellParams {
  double alpha = 0.0;
  double beta = 0.0;
  double beta_prime = 0.0;
  double gamma = 0.0;
  double x = 0.0;
  double y = 0.0;
};

inline constexpr double kHyp2F1MaxAbsZ = 0.95;
inline constexpr double kAppellMaxAbsArg = 0.9;
inline constexpr double kSeriesEpsilon = 1e-16;
inline constexpr long kSeriesTermCap = 200'000;

// x > 0. Exact factorial for integer x <= 20, Lanczos otherwise.
// Throws std::invalid_argument for x <= 0 and RangeError for x > 171.6.
double gamma_real(double x);
// log Gamma(x) for x > 0; no overflow limit.
double log_gamma(double x);

// Gamma(p) Gamma(q) / Gamma(p + q) via log-Gamma; symmetric bit for bit.
double beta(double p, double q);
double log_beta(double p, double q);

// Throws ParameterPole when gamma is a nonpositive integer and
// SeriesDiverges when |z| > 0.95.
double gauss_2f1(const Hyp2F1Params& p);

// Summed along anti-diagonals m + n = N. Throws ParameterPole as above and
// SeriesDiverges when |x| or |y| exceeds 0.9.
double appell_f1(const AppellParams& p);

// Gamma(gamma)/(Gamma(beta)Gamma(beta')) * int_0^1 t^(beta-1) (1-t)^(beta'-1) (1-tz)^(-alpha) dt
// with gamma = beta + beta'. Requires beta, beta' > 0, gamma > alpha > 0, |z| < 1.
double euler_integral_2f1(const Hyp2F1Params& p, double beta_prime);

// Gamma(gamma)/(Gamma(alpha)Gamma(gamma-alpha)) *
//   int_0^1 t^(alpha-1) (1-t)^(gamma-alpha-1) (1-tx)^(-beta) (1-ty)^(-beta') dt
// with gamma = beta + beta'. Requires beta, beta' > 0, gamma > alpha > 0, x, y < 1.
double picard_integral_f1(const AppellParams& p);

}  // namespace hypercheck
