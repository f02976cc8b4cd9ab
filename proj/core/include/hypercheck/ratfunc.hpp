#pragma once

#include <string>
#include <string_view>

#include "hypercheck/multipoly.hpp"

namespace hypercheck {

// num/den over Q(a, b, t, x). Fractions are never reduced (there is no
// multivariate gcd here); equality is decided by cross-multiplication.
class RatFunc {
 public:
  RatFunc() : num_(0), den_(1) {}
  RatFunc(MultiPoly num);  // NOLINT(google-explicit-constructor)
  // Throws std::invalid_argument when den is the zero polynomial.
  RatFunc(MultiPoly num, MultiPoly den);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const { return RatFunc(-num_, den_); }
  friend RatFunc operator+(const RatFunc& f, const RatFunc& g);
  friend RatFunc operator-(const RatFunc& f, const RatFunc& g);
  friend RatFunc operator*(const RatFunc& f, const RatFunc& g);
  // Throws std::invalid_argument when g is identically zero.
  friend RatFunc operator/(const RatFunc& f, const RatFunc& g);
  friend bool operator==(const RatFunc& f, const RatFunc& g);

  // Quotient rule, (num' den - num den') / den^2.
  RatFunc diff(Var v) const;
  // Throws std::domain_error when the denominator vanishes at the value.
  RatFunc substitute(Var v, const ExactRational& value) const;

  std::string to_string() const;

 private:
  MultiPoly num_;
  MultiPoly den_;
};

RatFunc ratfunc_diff(const RatFunc& f, Var v);
RatFunc ratfunc_diff(const RatFunc& f, std::string_view var);
bool ratfunc_equal(const RatFunc& f, const RatFunc& g);

}  // namespace hypercheck
