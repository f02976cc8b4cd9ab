#pragma once

// Residual checks for the integral and hypergeometric identities. Every check
// evaluates both sides independently and returns an IdentityReport; no check
// assumes the identity it is testing.

#include <map>
#include <string>

namespace hypercheck {

inline constexpr double kDefaultIdentityTolerance = 1e-10;

struct IdentityReport {
  std::string identity_name;
  std::map<std::string, double> params;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
  // abs_err / max(|lhs|, |rhs|, 1e-300)
  double rel_err = 0.0;
  double tol = 0.0;
  bool pass = false;
  // Secondary measurements (cross-checks); empty when there are none.
  std::string detail;
};

// Fills abs_err, rel_err and pass from lhs, rhs and tol.
IdentityReport make_report(std::string name, std::map<std::string, double> params, double lhs, double rhs,
                           double tol);
// Exact (symbolic) outcome: rel_err = 0, tol = 0, pass as given.
IdentityReport make_exact_report(std::string name, std::map<std::string, double> params, bool pass,
                                 double lhs = 0.0, double rhs = 0.0);

struct EzzParams {
  double a = 0.0;
  double b = 0.0;
  double n = 0.0;
};

struct TheoremParams {
  double a = 0.0;
  double b = 0.0;
  double k = 0.0;
  double n = 0.0;
  double s = 0.0;
  double l = 0.0;
};

// Theorem parameters with n tied to l + s - k.
struct ReducedTheoremParams {
  double a = 0.0;
  double b = 0.0;
  double k = 0.0;
  double l = 0.0;
  double s = 0.0;
};

struct AppellCaseParams {
  double alpha = 0.0;
  double beta = 0.0;
  double beta_prime = 0.0;
  double x = 0.0;
  double y = 0.0;
};

struct ChvParams {
  double b = 0.0;
  unsigned n = 0;
  unsigned k = 0;
};

struct GammaMixedParams {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  unsigned m = 0;
  unsigned n = 0;
};

// int_0^1 x^n(1-x)^n / ((x+a)(x+b))^(n+1)  vs  int_0^1 x^n(1-x)^n / ((a-b)x + (a+1)b)^(n+1)
// for a, b > 0 and real n > -1.
IdentityReport verify_ezz(const EzzParams& p, double tol = kDefaultIdentityTolerance);

// int x^l (1-x)^s / ((x+a)^(k+1) (x+b)^(n+1))
//   vs (b+1)^(s-n) / b^(n-l) * int x^s (1-x)^l (x+b)^(n+k-l-s) / ((a-b)x + (a+1)b)^(k+1)
IdentityReport verify_theorem_main(const TheoremParams& p, double tol = kDefaultIdentityTolerance);

// The n = l + s - k specialisation. Also re-runs verify_theorem_main at that n
// and requires both evaluations to agree within 1e-12.
IdentityReport verify_5ezz(const ReducedTheoremParams& p, double tol = kDefaultIdentityTolerance);

// 2F1(alpha, beta; beta+beta'; (y-x)/(y-1))  vs  (1-y)^alpha F1(alpha; beta, beta'; beta+beta'; x, y).
// Throws SeriesDiverges when |(y-x)/(y-1)| > 0.95.
IdentityReport verify_appell_identity(const AppellCaseParams& p, double tol = kDefaultIdentityTolerance);

// int t^(beta-1) (1-t)^(beta'-1) / ((y-x)t + 1 - y)^alpha
//   vs Gamma(beta)Gamma(beta')/(Gamma(alpha)Gamma(beta+beta'-alpha)) *
//      int t^(alpha-1) (1-t)^(beta+beta'-alpha-1) / ((1-tx)^beta (1-ty)^beta')
IdentityReport verify_gen_integral(const AppellCaseParams& p, double tol = kDefaultIdentityTolerance);

// Compares the series form and the integral form of the Appell identity at the
// same point, after scaling the integral form by (1-y)^alpha / B(beta, beta').
// lhs/rhs are the two normalised left sides; the right sides are compared too
// and rel_err is the larger of the two discrepancies.
IdentityReport verify_appell_gen_agreement(const AppellCaseParams& p, double tol = kDefaultIdentityTolerance);

// int x^n(1-x)^n/(x+b)^(n+k+1)  vs  (b(b+1))^(-k) int x^n(1-x)^n/(x+b)^(n-k+1), 0 <= k <= n.
IdentityReport verify_chv(const ChvParams& p, double tol = kDefaultIdentityTolerance);

// Gamma(g-a)Gamma(a+m+n)B(g+m-b, b+n)  vs  Gamma(b+n)Gamma(g+m-b)B(a+m+n, g-a).
// Integer alpha, beta, gamma take an exact factorial path; otherwise both sides
// are formed in log space. Every Gamma/Beta argument must be positive.
IdentityReport verify_gamma_mixed_partial(const GammaMixedParams& p, double tol = kDefaultIdentityTolerance);

}  // namespace hypercheck
