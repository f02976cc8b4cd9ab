#include "hypercheck/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace hypercheck {

namespace {

// Nodes beyond |t| = 20 carry weights far below double range for every
// admissible exponent.
constexpr double kMaxAbscissa = 20.0;
constexpr double kTailRatio = 1e-20;

class NodeEvaluator {
 public:
  explicit NodeEvaluator(const WeightedIntegrand& f) : f_(f) {}

  // pi cosh(t) x^(l+1) (1-x)^(s+1) g(x), i.e. the weighted integrand times dx/dt.
  double operator()(double t) {
    const double u = 0.5 * std::numbers::pi * std::sinh(t);
    double log_x = 0.0;
    double log_1mx = 0.0;
    double x = 0.0;
    if (u >= 0.0) {
      const double e = std::exp(-2.0 * u);
      log_x = -std::log1p(e);
      log_1mx = -2.0 * u + log_x;
      x = 1.0 / (1.0 + e);
    } else {
      const double e = std::exp(2.0 * u);
      log_1mx = -std::log1p(e);
      log_x = 2.0 * u + log_1mx;
      x = e / (1.0 + e);
    }
    const double log_cosh = std::abs(t) + std::log1p(std::exp(-2.0 * std::abs(t))) - std::numbers::ln2;
    const double log_weight = std::log(std::numbers::pi) + log_cosh + (f_.l_exp() + 1.0) * log_x +
                              (f_.s_exp() + 1.0) * log_1mx;
    const double weight = std::exp(log_weight);
    if (weight == 0.0) return 0.0;
    ++evaluations_;
    return weight * f_.smooth(x);
  }

  std::size_t evaluations() const { return evaluations_; }

 private:
  const WeightedIntegrand& f_;
  std::size_t evaluations_ = 0;
};

// Sum of node values at t = offset + j*stride for j >= 0 in one direction,
// stopping once contributions are negligible against `scale`.
double directional_sum(NodeEvaluator& eval, double first, double stride, double scale) {
  double sum = 0.0;
  int small_run = 0;
  for (double t = first; std::abs(t) <= kMaxAbscissa; t += stride) {
    const double v = eval(t);
    sum += v;
    const double ref = std::abs(scale) + std::abs(sum);
    if (std::abs(t) >= 1.0 && std::abs(v) <= kTailRatio * ref) {
      if (++small_run >= 2) break;
    } else {
      small_run = 0;
    }
  }
  return sum;
}

class Refinement {
 public:
  explicit Refinement(const WeightedIntegrand& f) : eval_(f) {}

  // Level 0: step 1, all integer nodes.
  double start() {
    h_ = 1.0;
    const double centre = eval_(0.0);
    raw_ = centre;
    raw_ += directional_sum(eval_, 1.0, 1.0, raw_);
    raw_ += directional_sum(eval_, -1.0, -1.0, raw_);
    level_ = 0;
    return h_ * raw_;
  }

  // Halves the step, adding only the new odd nodes.
  double refine() {
    h_ *= 0.5;
    double added = directional_sum(eval_, h_, 2.0 * h_, raw_);
    added += directional_sum(eval_, -h_, -2.0 * h_, raw_);
    // raw_ holds the plain node sum at the previous step; after halving the
    // integral estimate is h * (old nodes + new nodes).
    raw_ += added;
    ++level_;
    return h_ * raw_;
  }

  int level() const { return level_; }
  std::size_t evaluations() const { return eval_.evaluations(); }

 private:
  NodeEvaluator eval_;
  double h_ = 1.0;
  double raw_ = 0.0;
  int level_ = 0;
};

}  // namespace

WeightedIntegrand::WeightedIntegrand(double l_exp, double s_exp, Smooth smooth)
    : l_exp_(l_exp), s_exp_(s_exp), smooth_(std::move(smooth)) {
  if (!(l_exp > -1.0) || !(s_exp > -1.0)) {
    std::ostringstream msg;
    msg << "weight exponents must exceed -1 (got l=" << l_exp << ", s=" << s_exp << ")";
    throw std::invalid_argument(msg.str());
  }
  if (!smooth_) throw std::invalid_argument("weighted integrand without a smooth factor");
}

QuadResult tanh_sinh_at_level(const WeightedIntegrand& f, int level) {
  if (level < 0 || level > 20) throw std::invalid_argument("tanh-sinh level out of range");
  Refinement r(f);
  double previous = r.start();
  double current = previous;
  for (int l = 1; l <= level; ++l) {
    previous = current;
    current = r.refine();
  }
  return QuadResult{current, level == 0 ? 0.0 : std::abs(current - previous), r.evaluations(), level};
}

QuadResult tanh_sinh_integrate(const WeightedIntegrand& f, double rel_tol) {
  if (!(rel_tol >= kQuadMinTolerance)) {
    throw std::invalid_argument("tanh-sinh tolerance below 1e-14");
  }
  Refinement r(f);
  double current = r.start();
  while (r.level() < kQuadFirstLevel) current = r.refine();

  QuadResult result{current, 0.0, r.evaluations(), r.level()};
  while (r.level() < kQuadLastLevel) {
    const double previous = current;
    current = r.refine();
    result = QuadResult{current, std::abs(current - previous), r.evaluations(), r.level()};
    if (!std::isfinite(current)) break;
    if (result.error_estimate <= rel_tol * std::max(std::abs(current), 1e-300)) return result;
  }
  std::ostringstream msg;
  msg.precision(3);
  msg << "tanh-sinh did not converge: level " << result.level << ", value " << result.value
      << ", error estimate " << result.error_estimate << " > " << rel_tol << " relative";
  throw NonConvergence(msg.str(), result);
}

}  // namespace hypercheck

namespace hypercheck {

namespace {

bool is_small_nonnegative_integer(double v) { return v >= 0.0 && v <= 64.0 && v == std::floor(v); }

}  // namespace

WeightedIntegrand make_integrand(double l_exp, double s_exp, WeightedIntegrand::Smooth smooth) {
  const bool fold_l = is_small_nonnegative_integer(l_exp) && l_exp > 0.0;
  const bool fold_s = is_small_nonnegative_integer(s_exp) && s_exp > 0.0;
  if (!fold_l && !fold_s) return WeightedIntegrand(l_exp, s_exp, std::move(smooth));
  const int li = fold_l ? static_cast<int>(l_exp) : 0;
  const int si = fold_s ? static_cast<int>(s_exp) : 0;
  auto folded = [li, si, g = std::move(smooth)](double x) {
    double w = 1.0;
    for (int i = 0; i < li; ++i) w *= x;
    const double y = 1.0 - x;
    for (int i = 0; i < si; ++i) w *= y;
    return w * g(x);
  };
  return WeightedIntegrand(fold_l ? 0.0 : l_exp, fold_s ? 0.0 : s_exp, std::move(folded));
}

}  // namespace hypercheck
