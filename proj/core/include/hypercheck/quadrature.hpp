#pragma once

// Double-exponential (tanh-sinh) quadrature on [0, 1] for integrands of the
// form x^l (1-x)^s g(x) with l, s > -1 and g bounded and continuous.
//
// With x = (1 + tanh(pi/2 sinh t)) / 2 the transformed integrand decays
// double-exponentially in |t|, so the trapezoid rule in t converges fast even
// when the weight is singular at 0 or 1. The weight and the Jacobian are
// combined in log space: near the endpoints x and 1-x underflow long before
// x^l (1-x)^s dx/dt does.

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

namespace hypercheck {

struct QuadResult {
  double value = 0.0;
  // |S_L - S_{L-1}| for the last two refinement levels.
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
  int level = 0;
};

class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(const std::string& what, QuadResult partial)
      : std::runtime_error(what), partial_(partial) {}
  const QuadResult& partial() const { return partial_; }

 private:
  QuadResult partial_;
};

class WeightedIntegrand {
 public:
  using Smooth = std::function<double(double)>;

  // Throws std::invalid_argument unless l_exp > -1 and s_exp > -1.
  WeightedIntegrand(double l_exp, double s_exp, Smooth smooth);

  static WeightedIntegrand plain(Smooth smooth) { return {0.0, 0.0, std::move(smooth)}; }

  double l_exp() const { return l_exp_; }
  double s_exp() const { return s_exp_; }
  double smooth(double x) const { return smooth_(x); }

 private:
  double l_exp_;
  double s_exp_;
  Smooth smooth_;
};

inline constexpr int kQuadFirstLevel = 3;
inline constexpr int kQuadLastLevel = 12;
inline constexpr double kQuadDefaultTolerance = 1e-12;
inline constexpr double kQuadMinTolerance = 1e-14;

// Refines from step 2^-3 down to 2^-12, stopping once two successive levels
// agree to rel_tol. Throws NonConvergence when the last level still disagrees
// and std::invalid_argument for rel_tol < 1e-14.
QuadResult tanh_sinh_integrate(const WeightedIntegrand& f, double rel_tol = kQuadDefaultTolerance);

// Trapezoid sum at a single step 2^-level; error_estimate is the difference
// from the previous level (0 for level 0).
QuadResult tanh_sinh_at_level(const WeightedIntegrand& f, int level);

}  // namespace hypercheck

namespace hypercheck {

// Folds nonnegative integer exponents into the smooth factor (plain
// tanh-sinh) and keeps fractional or negative ones as the log-space weight.
WeightedIntegrand make_integrand(double l_exp, double s_exp, WeightedIntegrand::Smooth smooth);

}  // namespace hypercheck
