#pragma once

// Exact univariate polynomials over Q and the finite identities around
// Rodrigues' formula: the derivative symmetry of (x^2-1)^n, its shifted form
// for f_n = x^n (1+x)^n, the triple-binomial sum with its terminating 3F2
// form, and the eigenoperators D^k (x^2-1)^k D^k of the Legendre polynomials.

#include <array>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "hypercheck/exact.hpp"

namespace hypercheck {

// Dense coefficients, index = degree. The zero polynomial has no coefficients.
class ExactPoly {
 public:
  ExactPoly() = default;
  explicit ExactPoly(std::vector<ExactRational> coeffs);
  ExactPoly(std::initializer_list<ExactRational> coeffs);

  static ExactPoly constant(const ExactRational& c);
  static ExactPoly x();

  const std::vector<ExactRational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  ExactRational coefficient(std::size_t k) const;
  ExactRational evaluate(const ExactRational& at) const;

  ExactPoly& operator+=(const ExactPoly& o);
  ExactPoly& operator-=(const ExactPoly& o);
  ExactPoly& operator*=(const ExactPoly& o);
  ExactPoly& operator*=(const ExactRational& s);

  friend ExactPoly operator+(ExactPoly l, const ExactPoly& r) { return l += r; }
  friend ExactPoly operator-(ExactPoly l, const ExactPoly& r) { return l -= r; }
  friend ExactPoly operator*(ExactPoly l, const ExactPoly& r) { return l *= r; }
  friend ExactPoly operator*(const ExactRational& s, ExactPoly p) { return p *= s; }
  friend bool operator==(const ExactPoly& l, const ExactPoly& r) { return l.coeffs_ == r.coeffs_; }

  ExactPoly pow(unsigned n) const;
  // p(scale * x + offset).
  ExactPoly compose_affine(const ExactRational& scale, const ExactRational& offset) const;
  std::string to_string() const;

 private:
  void normalize();
  std::vector<ExactRational> coeffs_;
};

// k-th formal derivative.
ExactPoly poly_derivative(const ExactPoly& p, std::size_t k = 1);

// (x^2 - 1)^n and f_n = x^n (1 + x)^n.
ExactPoly rodrigues_base(unsigned n);
ExactPoly shifted_base(unsigned n);

// P_n = D^n (x^2-1)^n / (2^n n!).
ExactPoly legendre_poly(unsigned n);

// Both sides of (n-k)! (x^2-1)^k D^{n+k} (x^2-1)^n = (n+k)! D^{n-k} (x^2-1)^n.
struct PolyIdentitySides {
  ExactPoly lhs;
  ExactPoly rhs;
};
PolyIdentitySides di_symmetry_sides(unsigned n, unsigned k);

// The checks below throw std::invalid_argument when k > n (or l > n).
bool verify_di_symmetry(unsigned n, unsigned k);
// f_k f_n^{(n+k)} = ((n+k)!/(n-k)!) f_n^{(n-k)}.
bool verify_corollary2(unsigned n, unsigned k);
// Substituting x -> 2x+1 into both symmetry sides gives the f_n sides times
// (n-k)! 4^n 2^{k-n}.
bool verify_di_corollary2_bridge(unsigned n, unsigned k);

// sum_m C(k,m) C(n,m+l) C(2m+2l, k+n) = C(n,l) C(2l, n-k).
struct BinomialSides {
  ExactInteger lhs;
  ExactInteger rhs;
};
BinomialSides corollary3_sides(unsigned n, unsigned k, unsigned l);
bool verify_corollary3(unsigned n, unsigned k, unsigned l);

// 3F2(-k, l-n, l+1/2; l-(k+n)/2+1, (1-n-k)/2+l; 1).
struct Terminating3F2Params {
  std::array<ExactRational, 3> upper;
  std::array<ExactRational, 2> lower;
  // Last index with a nonzero numerator: min(k, n - l).
  unsigned last_index;
};
Terminating3F2Params terminating_3f2_params(unsigned n, unsigned k, unsigned l);
// A lower Pochhammer vanishes at a live index, or C(2l, n+k) = 0.
bool terminating_3f2_degenerate(unsigned n, unsigned k, unsigned l);
// Exact value of the series. Throws DegenerateParameters when degenerate.
ExactRational terminating_3f2(unsigned n, unsigned k, unsigned l);
// C(2l, n-k) / C(2l, n+k). Throws DegenerateParameters when the denominator is 0.
ExactRational terminating_3f2_closed_form(unsigned n, unsigned k, unsigned l);

// D^k ((x^2-1)^k D^k p).
ExactPoly legendre_operator_apply(unsigned k, const ExactPoly& p);
// L[P_n] = ((n+k)!/(n-k)!) P_n.
bool verify_corollary4(unsigned n, unsigned k);
// D((x^2-1) P_n') = n(n+1) P_n.
bool verify_legendre_eigen(unsigned n);

}  // namespace hypercheck
