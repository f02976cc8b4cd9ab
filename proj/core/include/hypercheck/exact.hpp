#pragma once

// Exact scalar arithmetic. Integers and rationals are GMP values; mpq_class
// keeps every result canonical (positive denominator, coprime parts).

#include <gmpxx.h>

#include <string>

namespace hypercheck {

using ExactInteger = mpz_class;
using ExactRational = mpq_class;

// Canonicalized num/den. Throws std::invalid_argument when den == 0.
ExactRational make_rational(const ExactInteger& num, const ExactInteger& den);

// A double is a dyadic rational; this returns it without rounding.
// Throws std::invalid_argument for NaN or infinity.
ExactRational rational_from_double(double value);

ExactInteger factorial(unsigned long n);

// n!/(k!(n-k)!) for 0 <= k <= n, and 0 for k outside that range.
// Throws std::invalid_argument for n < 0.
ExactInteger binomial(long n, long k);

// (a)_n = a(a+1)...(a+n-1); the empty product (n = 0) is 1.
ExactRational rising_factorial(const ExactRational& a, unsigned long n);

std::string to_string(const ExactRational& value);

inline bool is_integer(const ExactRational& value) { return value.get_den() == 1; }

}  // namespace hypercheck
