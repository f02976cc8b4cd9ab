#include "hypercheck/special.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "hypercheck/quadrature.hpp"

namespace hypercheck {

namespace {

// Godfrey's Lanczos coefficients, g = 607/128.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,      -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,    .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4,  .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,   -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4,  .36899182659531622704e-5,
};

constexpr double kGammaMaxArg = 171.6;

double lanczos_sum(double z) {
  double a = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) a += kLanczos[i] / (z + static_cast<double>(i));
  return a;
}

bool is_integer(double x) { return x == std::floor(x); }

bool is_nonpositive_integer(double x) { return x <= 0.0 && is_integer(x); }

double exact_factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return static_cast<double>(f);
}

void require_positive(double x, const char* name) {
  if (!(x > 0.0)) {
    std::ostringstream msg;
    msg << name << " requires a positive argument (got " << x << ")";
    throw std::invalid_argument(msg.str());
  }
}

// Series convergence: three consecutive terms below eps * |partial sum|.
class StopRule {
 public:
  bool update(double term, double sum) {
    if (std::abs(term) <= kSeriesEpsilon * std::abs(sum)) {
      return ++small_ >= 3;
    }
    small_ = 0;
    return false;
  }

 private:
  int small_ = 0;
};

void require_euler_admissible(double alpha, double beta, double beta_prime, double gamma) {
  if (!(beta > 0.0) || !(beta_prime > 0.0)) {
    throw std::invalid_argument("integral representation requires beta, beta' > 0");
  }
  if (std::abs(gamma - (beta + beta_prime)) > 1e-12 * std::max(1.0, std::abs(gamma))) {
    throw std::invalid_argument("integral representation requires gamma = beta + beta'");
  }
  if (!(alpha > 0.0) || !(gamma > alpha)) {
    throw std::invalid_argument("integral representation requires gamma > alpha > 0");
  }
}

}  // namespace

double gamma_real(double x) {
  require_positive(x, "gamma_real");
  if (x > kGammaMaxArg) {
    std::ostringstream msg;
    msg << "gamma_real overflows double range at x = " << x;
    throw RangeError(msg.str());
  }
  if (is_integer(x) && x <= 20.0) return exact_factorial(static_cast<int>(x) - 1);
  if (x < 0.5) return gamma_real(x + 1.0) / x;
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  // Split the power so t^(z+1/2) cannot overflow before e^-t brings it back.
  const double half = 0.5 * (z + 0.5);
  const double p = std::pow(t, half);
  return std::sqrt(2.0 * std::numbers::pi) * p * std::exp(-t) * p * lanczos_sum(z);
}

double log_gamma(double x) {
  require_positive(x, "log_gamma");
  if (is_integer(x) && x <= 20.0) return std::log(exact_factorial(static_cast<int>(x) - 1));
  if (x < 0.5) return log_gamma(x + 1.0) - std::log(x);
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(lanczos_sum(z));
}

double log_beta(double p, double q) {
  require_positive(p, "beta");
  require_positive(q, "beta");
  if (q < p) std::swap(p, q);
  return log_gamma(p) + log_gamma(q) - log_gamma(p + q);
}

double beta(double p, double q) { return std::exp(log_beta(p, q)); }

double gauss_2f1(const Hyp2F1Params& p) {
  if (is_nonpositive_integer(p.gamma)) {
    std::ostringstream msg;
    msg << "2F1 lower parameter gamma = " << p.gamma << " is a pole";
    throw ParameterPole(msg.str());
  }
  if (!(std::abs(p.z) <= kHyp2F1MaxAbsZ)) {
    std::ostringstream msg;
    msg << "2F1 series argument |z| = " << std::abs(p.z) << " exceeds " << kHyp2F1MaxAbsZ;
    throw SeriesDiverges(msg.str());
  }
  double sum = 1.0;
  double term = 1.0;
  StopRule stop;
  for (long n = 0; n < kSeriesTermCap; ++n) {
    const double dn = static_cast<double>(n);
    term *= (p.alpha + dn) * (p.beta + dn) / ((p.gamma + dn) * (dn + 1.0)) * p.z;
    sum += term;
    if (stop.update(term, sum)) return sum;
  }
  throw SeriesDiverges("2F1 series hit the term cap");
}

double appell_f1(const AppellParams& p) {
  if (is_nonpositive_integer(p.gamma)) {
    std::ostringstream msg;
    msg << "F1 lower parameter gamma = " << p.gamma << " is a pole";
    throw ParameterPole(msg.str());
  }
  if (!(std::abs(p.x) <= kAppellMaxAbsArg) || !(std::abs(p.y) <= kAppellMaxAbsArg)) {
    std::ostringstream msg;
    msg << "F1 series arguments (" << p.x << ", " << p.y << ") leave the disc |.| <= " << kAppellMaxAbsArg;
    throw SeriesDiverges(msg.str());
  }
  // u[m] = (beta)_m x^m / m!, v[n] = (beta')_n y^n / n!; the N-th anti-diagonal is
  // (alpha)_N/(gamma)_N * sum_m u[m] v[N-m].
  std::vector<double> u{1.0};
  std::vector<double> v{1.0};
  double prefactor = 1.0;
  double sum = 1.0;
  StopRule stop;
  for (long big_n = 1; big_n < kSeriesTermCap; ++big_n) {
    const double prev = static_cast<double>(big_n - 1);
    u.push_back(u.back() * (p.beta + prev) / (prev + 1.0) * p.x);
    v.push_back(v.back() * (p.beta_prime + prev) / (prev + 1.0) * p.y);
    prefactor *= (p.alpha + prev) / (p.gamma + prev);
    double diagonal = 0.0;
    for (long m = 0; m <= big_n; ++m) diagonal += u[m] * v[big_n - m];
    const double term = prefactor * diagonal;
    sum += term;
    if (stop.update(term, sum)) return sum;
  }
  throw SeriesDiverges("F1 series hit the term cap");
}

double euler_integral_2f1(const Hyp2F1Params& p, double beta_prime) {
  require_euler_admissible(p.alpha, p.beta, beta_prime, p.gamma);
  if (!(std::abs(p.z) < 1.0)) throw std::invalid_argument("Euler integral requires |z| < 1");
  const double alpha = p.alpha;
  const double z = p.z;
  const auto f = make_integrand(p.beta - 1.0, beta_prime - 1.0,
                                [alpha, z](double t) { return std::pow(1.0 - t * z, -alpha); });
  return tanh_sinh_integrate(f).value / beta(p.beta, beta_prime);
}

double picard_integral_f1(const AppellParams& p) {
  require_euler_admissible(p.alpha, p.beta, p.beta_prime, p.gamma);
  if (!(p.x < 1.0) || !(p.y < 1.0)) throw std::invalid_argument("Picard integral requires x, y < 1");
  const auto f = make_integrand(p.alpha - 1.0, p.gamma - p.alpha - 1.0, [p](double t) {
    return std::pow(1.0 - t * p.x, -p.beta) * std::pow(1.0 - t * p.y, -p.beta_prime);
  });
  return tanh_sinh_integrate(f).value / beta(p.alpha, p.gamma - p.alpha);
}

}  // namespace hypercheck
