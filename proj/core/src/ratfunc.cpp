#include "hypercheck/ratfunc.hpp"

#include <stdexcept>
#include <utility>

namespace hypercheck {

RatFunc::RatFunc(MultiPoly num) : num_(std::move(num)), den_(1) {}

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) {
    throw std::invalid_argument("rational function with zero denominator");
  }
}

RatFunc operator+(const RatFunc& f, const RatFunc& g) {
  if (f.den_ == g.den_) return RatFunc(f.num_ + g.num_, f.den_);
  return RatFunc(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
}

RatFunc operator-(const RatFunc& f, const RatFunc& g) { return f + (-g); }

RatFunc operator*(const RatFunc& f, const RatFunc& g) {
  return RatFunc(f.num_ * g.num_, f.den_ * g.den_);
}

RatFunc operator/(const RatFunc& f, const RatFunc& g) {
  if (g.is_zero()) {
    throw std::invalid_argument("division by the zero rational function");
  }
  return RatFunc(f.num_ * g.den_, f.den_ * g.num_);
}

bool operator==(const RatFunc& f, const RatFunc& g) { return f.num_ * g.den_ == g.num_ * f.den_; }

RatFunc RatFunc::diff(Var v) const {
  MultiPoly dn = num_.diff(v);
  MultiPoly dd = den_.diff(v);
  if (dd.is_zero()) return RatFunc(std::move(dn), den_);
  return RatFunc(dn * den_ - num_ * dd, den_ * den_);
}

RatFunc RatFunc::substitute(Var v, const ExactRational& value) const {
  MultiPoly den = den_.substitute(v, value);
  if (den.is_zero()) {
    throw std::domain_error("denominator vanishes at " + std::string(var_name(v)) + " = " +
                            value.get_str());
  }
  return RatFunc(num_.substitute(v, value), std::move(den));
}

std::string RatFunc::to_string() const {
  if (den_ == MultiPoly(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFunc ratfunc_diff(const RatFunc& f, Var v) { return f.diff(v); }

RatFunc ratfunc_diff(const RatFunc& f, std::string_view var) { return f.diff(parse_var(var)); }

bool ratfunc_equal(const RatFunc& f, const RatFunc& g) { return f == g; }

}  // namespace hypercheck
