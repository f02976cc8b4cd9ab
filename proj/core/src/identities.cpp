#include "hypercheck/identities.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "hypercheck/exact.hpp"
#include "hypercheck/quadrature.hpp"
#include "hypercheck/special.hpp"

namespace hypercheck {

namespace {

constexpr double kCrossCheckTolerance = 1e-12;

std::string describe(const std::map<std::string, double>& params) {
  std::ostringstream out;
  out.precision(17);
  bool first = true;
  for (const auto& [k, v] : params) {
    out << (first ? "" : ", ") << k << "=" << v;
    first = false;
  }
  return out.str();
}

// Runs a quadrature, re-throwing non-convergence with the identity and
// parameters attached.
double integrate(const WeightedIntegrand& f, const std::string& name, const std::map<std::string, double>& params) {
  try {
    return tanh_sinh_integrate(f, kQuadDefaultTolerance).value;
  } catch (const NonConvergence& e) {
    throw NonConvergence(std::string(e.what()) + " [" + name + ": " + describe(params) + "]", e.partial());
  }
}

void require(bool ok, const std::string& name, const std::string& what) {
  if (!ok) throw std::invalid_argument(name + ": " + what);
}

bool is_integral_value(double v) { return v == std::floor(v); }

double relative(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

}  // namespace

IdentityReport make_report(std::string name, std::map<std::string, double> params, double lhs, double rhs,
                           double tol) {
  IdentityReport r;
  r.identity_name = std::move(name);
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_err = std::abs(lhs - rhs);
  r.rel_err = r.abs_err / std::max({std::abs(lhs), std::abs(rhs), 1e-300});
  r.tol = tol;
  r.pass = std::isfinite(r.rel_err) && r.rel_err <= tol;
  return r;
}

IdentityReport make_exact_report(std::string name, std::map<std::string, double> params, bool pass, double lhs,
                                 double rhs) {
  IdentityReport r;
  r.identity_name = std::move(name);
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_err = 0.0;
  r.rel_err = 0.0;
  r.tol = 0.0;
  r.pass = pass;
  return r;
}

IdentityReport verify_ezz(const EzzParams& p, double tol) {
  const std::string name = "ezz";
  require(p.a > 0 && p.b > 0, name, "requires a, b > 0");
  require(p.n > -1, name, "requires n > -1");
  const std::map<std::string, double> params{{"a", p.a}, {"b", p.b}, {"n", p.n}};
  const double a = p.a, b = p.b, e = p.n + 1.0;
  const double lhs = integrate(
      make_integrand(p.n, p.n, [a, b, e](double x) { return std::pow((x + a) * (x + b), -e); }), name, params);
  const double rhs = integrate(
      make_integrand(p.n, p.n, [a, b, e](double x) { return std::pow((a - b) * x + (a + 1) * b, -e); }), name,
      params);
  return make_report(name, params, lhs, rhs, tol);
}

namespace {

struct TheoremSides {
  double lhs;
  double rhs;
};

TheoremSides theorem_sides(const TheoremParams& p, const std::string& name,
                           const std::map<std::string, double>& params) {
  require(p.a > 0 && p.b > 0, name, "requires a, b > 0");
  require(p.s > -1 && p.l > -1, name, "requires s, l > -1");
  const double a = p.a, b = p.b, k = p.k, n = p.n, s = p.s, l = p.l;
  const double lhs = integrate(make_integrand(l, s,
                                              [a, b, k, n](double x) {
                                                return std::pow(x + a, -(k + 1)) * std::pow(x + b, -(n + 1));
                                              }),
                               name, params);
  const double shift = n + k - l - s;
  const double integral = integrate(make_integrand(s, l,
                                                   [a, b, k, shift](double x) {
                                                     return std::pow(x + b, shift) *
                                                            std::pow((a - b) * x + (a + 1) * b, -(k + 1));
                                                   }),
                                    name, params);
  const double prefactor = std::pow(b + 1, s - n) / std::pow(b, n - l);
  return {lhs, prefactor * integral};
}

}  // namespace

IdentityReport verify_theorem_main(const TheoremParams& p, double tol) {
  const std::string name = "theorem";
  const std::map<std::string, double> params{{"a", p.a}, {"b", p.b}, {"k", p.k},
                                             {"n", p.n}, {"s", p.s}, {"l", p.l}};
  const auto sides = theorem_sides(p, name, params);
  return make_report(name, params, sides.lhs, sides.rhs, tol);
}

IdentityReport verify_5ezz(const ReducedTheoremParams& p, double tol) {
  const std::string name = "5ezz";
  require(p.a > 0 && p.b > 0, name, "requires a, b > 0");
  require(p.s > -1 && p.l > -1, name, "requires s, l > -1");
  const std::map<std::string, double> params{{"a", p.a}, {"b", p.b}, {"k", p.k}, {"l", p.l}, {"s", p.s}};
  const double a = p.a, b = p.b, k = p.k, l = p.l, s = p.s;
  const double lhs = integrate(make_integrand(l, s,
                                              [a, b, k, l, s](double x) {
                                                return std::pow(x + a, -(k + 1)) *
                                                       std::pow(x + b, -(l + s - k + 1));
                                              }),
                               name, params);
  const double integral = integrate(
      make_integrand(s, l, [a, b, k](double x) { return std::pow((a - b) * x + (a + 1) * b, -(k + 1)); }), name,
      params);
  const double rhs = std::pow(b + 1, k - l) / std::pow(b, s - k) * integral;

  auto report = make_report(name, params, lhs, rhs, tol);
  const auto full = theorem_sides({a, b, k, l + s - k, s, l}, name, params);
  const double cross = std::max(relative(lhs, full.lhs), relative(rhs, full.rhs));
  std::ostringstream detail;
  detail.precision(3);
  detail << "theorem cross-check rel " << cross;
  report.detail = detail.str();
  report.pass = report.pass && cross <= kCrossCheckTolerance;
  return report;
}

namespace {

void require_appell_params(const AppellCaseParams& p, const std::string& name) {
  require(p.alpha > 0 && p.beta > 0 && p.beta_prime > 0, name, "requires alpha, beta, beta' > 0");
  require(p.beta + p.beta_prime > p.alpha, name, "requires beta + beta' > alpha");
}

std::map<std::string, double> appell_param_map(const AppellCaseParams& p) {
  return {{"alpha", p.alpha}, {"beta", p.beta}, {"beta_prime", p.beta_prime}, {"x", p.x}, {"y", p.y}};
}

struct AppellSides {
  double lhs;
  double rhs;
};

AppellSides appell_series_sides(const AppellCaseParams& p) {
  const double gamma = p.beta + p.beta_prime;
  const double z = (p.y - p.x) / (p.y - 1.0);
  const double lhs = gauss_2f1({p.alpha, p.beta, gamma, z});
  const double rhs = std::pow(1.0 - p.y, p.alpha) * appell_f1({p.alpha, p.beta, p.beta_prime, gamma, p.x, p.y});
  return {lhs, rhs};
}

AppellSides gen_integral_sides(const AppellCaseParams& p, const std::string& name,
                               const std::map<std::string, double>& params) {
  const double alpha = p.alpha, beta = p.beta, bp = p.beta_prime, x = p.x, y = p.y;
  const double gamma = beta + bp;
  const double lhs = integrate(
      make_integrand(beta - 1, bp - 1, [alpha, x, y](double t) { return std::pow((y - x) * t + 1 - y, -alpha); }),
      name, params);
  const double integral = integrate(make_integrand(alpha - 1, gamma - alpha - 1,
                                                   [beta, bp, x, y](double t) {
                                                     return std::pow(1 - t * x, -beta) * std::pow(1 - t * y, -bp);
                                                   }),
                                    name, params);
  const double prefactor =
      std::exp(log_gamma(beta) + log_gamma(bp) - log_gamma(alpha) - log_gamma(gamma - alpha));
  return {lhs, prefactor * integral};
}

}  // namespace

IdentityReport verify_appell_identity(const AppellCaseParams& p, double tol) {
  const std::string name = "appell";
  require_appell_params(p, name);
  require(std::abs(p.x) < 1 && std::abs(p.y) < 1, name, "requires |x|, |y| < 1");
  const auto sides = appell_series_sides(p);
  return make_report(name, appell_param_map(p), sides.lhs, sides.rhs, tol);
}

IdentityReport verify_gen_integral(const AppellCaseParams& p, double tol) {
  const std::string name = "gen";
  require_appell_params(p, name);
  require(p.x < 1 && p.y < 1, name, "requires x, y < 1");
  const auto params = appell_param_map(p);
  const auto sides = gen_integral_sides(p, name, params);
  return make_report(name, params, sides.lhs, sides.rhs, tol);
}

IdentityReport verify_appell_gen_agreement(const AppellCaseParams& p, double tol) {
  const std::string name = "appell_gen_agreement";
  require_appell_params(p, name);
  require(std::abs(p.x) < 1 && std::abs(p.y) < 1, name, "requires |x|, |y| < 1");
  const auto params = appell_param_map(p);
  const auto series = appell_series_sides(p);
  const auto integral = gen_integral_sides(p, name, params);
  const double scale = std::pow(1.0 - p.y, p.alpha) / beta(p.beta, p.beta_prime);
  const double lhs_gap = relative(series.lhs, scale * integral.lhs);
  const double rhs_gap = relative(series.rhs, scale * integral.rhs);

  auto report = make_report(name, params, series.lhs, scale * integral.lhs, tol);
  std::ostringstream detail;
  detail.precision(3);
  detail << "lhs gap " << lhs_gap << ", rhs gap " << rhs_gap;
  report.detail = detail.str();
  if (rhs_gap > lhs_gap) {
    report.abs_err = std::abs(series.rhs - scale * integral.rhs);
    report.rel_err = rhs_gap;
  }
  report.pass = std::isfinite(report.rel_err) && report.rel_err <= tol;
  return report;
}

IdentityReport verify_chv(const ChvParams& p, double tol) {
  const std::string name = "chv";
  require(p.b > 0, name, "requires b > 0");
  require(p.k <= p.n, name, "requires 0 <= k <= n");
  const std::map<std::string, double> params{
      {"b", p.b}, {"n", static_cast<double>(p.n)}, {"k", static_cast<double>(p.k)}};
  const double b = p.b, n = p.n, k = p.k;
  const double lhs =
      integrate(make_integrand(n, n, [b, n, k](double x) { return std::pow(x + b, -(n + k + 1)); }), name, params);
  const double integral =
      integrate(make_integrand(n, n, [b, n, k](double x) { return std::pow(x + b, -(n - k + 1)); }), name, params);
  const double rhs = std::pow(b * (b + 1), -k) * integral;
  return make_report(name, params, lhs, rhs, tol);
}

IdentityReport verify_gamma_mixed_partial(const GammaMixedParams& p, double tol) {
  const std::string name = "gamma_mixed";
  const double a = p.alpha, b = p.beta, g = p.gamma, m = p.m, n = p.n;
  const std::map<std::string, double> params{{"alpha", a}, {"beta", b}, {"gamma", g}, {"m", m}, {"n", n}};
  for (double arg : {g - a, a + m + n, g + m - b, b + n}) {
    require(arg > 0, name, "every Gamma/Beta argument must be positive (" + describe(params) + ")");
  }

  if (is_integral_value(a) && is_integral_value(b) && is_integral_value(g)) {
    // Gamma(k) = (k-1)! and B(p,q) = (p-1)!(q-1)!/(p+q-1)!, both exact.
    auto fact = [](double v) { return ExactRational(factorial(static_cast<unsigned long>(v) - 1)); };
    auto exact_beta = [&](double pp, double qq) { return ExactRational(fact(pp) * fact(qq) / fact(pp + qq)); };
    const ExactRational lhs = fact(g - a) * fact(a + m + n) * exact_beta(g + m - b, b + n);
    const ExactRational rhs = fact(b + n) * fact(g + m - b) * exact_beta(a + m + n, g - a);
    auto report = make_exact_report(name, params, lhs == rhs, lhs.get_d(), rhs.get_d());
    report.detail = "exact " + lhs.get_str() + " vs " + rhs.get_str();
    if (lhs != rhs) {
      report.abs_err = std::abs(report.lhs - report.rhs);
      report.rel_err = relative(report.lhs, report.rhs);
    }
    return report;
  }

  const double log_lhs = log_gamma(g - a) + log_gamma(a + m + n) + log_beta(g + m - b, b + n);
  const double log_rhs = log_gamma(b + n) + log_gamma(g + m - b) + log_beta(a + m + n, g - a);
  return make_report(name, params, std::exp(log_lhs), std::exp(log_rhs), tol);
}

}  // namespace hypercheck
