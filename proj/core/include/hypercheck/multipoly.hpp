#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hypercheck/exact.hpp"

namespace hypercheck {

// The four symbols every proof-machinery polynomial lives in.
enum class Var : std::uint8_t { a = 0, b = 1, t = 2, x = 3 };

inline constexpr std::size_t kVarCount = 4;
inline constexpr std::array<Var, kVarCount> kAllVars = {Var::a, Var::b, Var::t, Var::x};

std::string_view var_name(Var v);
// Throws std::invalid_argument for anything other than "a", "b", "t", "x".
Var parse_var(std::string_view name);

using Exponents = std::array<std::uint32_t, kVarCount>;

std::uint32_t total_degree(const Exponents& e);

// Graded lexicographic: total degree first, then lexicographic with a < b < t < x.
struct GradedLexLess {
  bool operator()(const Exponents& lhs, const Exponents& rhs) const;
};

// Sparse polynomial over Q in (a, b, t, x). Zero coefficients are never stored
// and terms are kept in graded-lex order, so structural equality is polynomial
// equality.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, ExactRational, GradedLexLess>;

  MultiPoly() = default;
  MultiPoly(const ExactRational& constant);  // NOLINT(google-explicit-constructor)
  MultiPoly(long constant);                  // NOLINT(google-explicit-constructor)

  static MultiPoly variable(Var v);
  static MultiPoly monomial(const Exponents& exponents, const ExactRational& coeff);

  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Coefficient of the monomial with the given exponents (0 when absent).
  ExactRational coefficient(const Exponents& exponents) const;
  ExactRational constant_term() const { return coefficient(Exponents{}); }

  std::uint32_t degree(Var v) const;
  std::uint32_t total_degree() const;

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  MultiPoly operator-() const;

  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
  friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
  friend bool operator==(const MultiPoly& lhs, const MultiPoly& rhs) { return lhs.terms_ == rhs.terms_; }

  MultiPoly pow(unsigned exponent) const;
  MultiPoly diff(Var v) const;
  // Replaces v by a rational value.
  MultiPoly substitute(Var v, const ExactRational& value) const;
  // Replaces v by a polynomial.
  MultiPoly substitute(Var v, const MultiPoly& value) const;
  // Coefficients c_i with p = sum_i c_i v^i; every c_i is free of v.
  std::vector<MultiPoly> coefficients_in(Var v) const;

  ExactRational evaluate(const std::array<ExactRational, kVarCount>& point) const;
  double evaluate(const std::array<double, kVarCount>& point) const;

  std::string to_string() const;

 private:
  void add_term(const Exponents& exponents, const ExactRational& coeff);

  TermMap terms_;
};

// Formal partial derivative by variable name. Unknown names throw
// std::invalid_argument.
MultiPoly poly_diff(const MultiPoly& p, std::string_view var);

}  // namespace hypercheck
