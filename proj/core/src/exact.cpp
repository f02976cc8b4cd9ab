#include "hypercheck/exact.hpp"

#include <cmath>
#include <stdexcept>

namespace hypercheck {

ExactRational make_rational(const ExactInteger& num, const ExactInteger& den) {
  if (den == 0) {
    throw std::invalid_argument("rational with zero denominator");
  }
  ExactRational r(num, den);
  r.canonicalize();
  return r;
}

ExactRational rational_from_double(double value) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument("cannot convert non-finite double to a rational");
  }
  // mpq_set_d is exact for finite doubles.
  ExactRational r;
  mpq_set_d(r.get_mpq_t(), value);
  return r;
}

ExactInteger factorial(unsigned long n) {
  ExactInteger r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

ExactInteger binomial(long n, long k) {
  if (n < 0) {
    throw std::invalid_argument("binomial: negative n");
  }
  if (k < 0 || k > n) {
    return 0;
  }
  ExactInteger r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

ExactRational rising_factorial(const ExactRational& a, unsigned long n) {
  ExactRational r = 1;
  ExactRational factor = a;
  for (unsigned long i = 0; i < n; ++i) {
    r *= factor;
    factor += 1;
  }
  return r;
}

std::string to_string(const ExactRational& value) { return value.get_str(); }

}  // namespace hypercheck
