#include "hypercheck/legendre.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hypercheck/errors.hpp"

namespace hypercheck {

namespace {

void require_k_le_n(unsigned n, unsigned k, const char* what) {
  if (k > n) throw std::invalid_argument(std::string(what) + " requires k <= n");
}

ExactRational fact(unsigned n) { return ExactRational(factorial(n)); }

ExactRational pow2(long e) {
  ExactRational r = 1;
  if (e >= 0) {
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return r;
}

}  // namespace

ExactPoly::ExactPoly(std::vector<ExactRational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

ExactPoly::ExactPoly(std::initializer_list<ExactRational> coeffs) : coeffs_(coeffs) { normalize(); }

ExactPoly ExactPoly::constant(const ExactRational& c) { return ExactPoly({c}); }

ExactPoly ExactPoly::x() { return ExactPoly({0, 1}); }

void ExactPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ExactRational ExactPoly::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0; }

ExactRational ExactPoly::evaluate(const ExactRational& at) const {
  ExactRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

ExactPoly& ExactPoly::operator+=(const ExactPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

ExactPoly& ExactPoly::operator-=(const ExactPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

ExactPoly& ExactPoly::operator*=(const ExactPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<ExactRational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

ExactPoly& ExactPoly::operator*=(const ExactRational& s) {
  for (auto& c : coeffs_) c *= s;
  normalize();
  return *this;
}

ExactPoly ExactPoly::pow(unsigned n) const {
  ExactPoly result = constant(1);
  ExactPoly base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

ExactPoly ExactPoly::compose_affine(const ExactRational& scale, const ExactRational& offset) const {
  const ExactPoly inner({offset, scale});
  ExactPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + constant(*it);
  return acc;
}

std::string ExactPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const ExactRational& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    const ExactRational mag = abs(c);
    if (i == 0 || mag != 1) out << hypercheck::to_string(mag);
    if (i > 0) out << (i == 0 || mag != 1 ? "*x" : "x");
    if (i > 1) out << "^" << i;
    first = false;
  }
  return out.str();
}

ExactPoly poly_derivative(const ExactPoly& p, std::size_t k) {
  std::vector<ExactRational> c = p.coeffs();
  for (std::size_t step = 0; step < k && !c.empty(); ++step) {
    for (std::size_t i = 1; i < c.size(); ++i) c[i - 1] = c[i] * static_cast<unsigned long>(i);
    c.pop_back();
  }
  return ExactPoly(std::move(c));
}

ExactPoly rodrigues_base(unsigned n) { return ExactPoly({-1, 0, 1}).pow(n); }

ExactPoly shifted_base(unsigned n) { return ExactPoly({0, 1, 1}).pow(n); }

ExactPoly legendre_poly(unsigned n) {
  return ExactRational(1 / (pow2(n) * fact(n))) * poly_derivative(rodrigues_base(n), n);
}

PolyIdentitySides di_symmetry_sides(unsigned n, unsigned k) {
  require_k_le_n(n, k, "di_symmetry");
  const ExactPoly q = rodrigues_base(n);
  return {fact(n - k) * (rodrigues_base(k) * poly_derivative(q, n + k)), fact(n + k) * poly_derivative(q, n - k)};
}

bool verify_di_symmetry(unsigned n, unsigned k) {
  const auto sides = di_symmetry_sides(n, k);
  return sides.lhs == sides.rhs;
}

bool verify_corollary2(unsigned n, unsigned k) {
  require_k_le_n(n, k, "corollary2");
  const ExactPoly f = shifted_base(n);
  const ExactPoly lhs = shifted_base(k) * poly_derivative(f, n + k);
  const ExactPoly rhs = ExactRational(fact(n + k) / fact(n - k)) * poly_derivative(f, n - k);
  return lhs == rhs;
}

bool verify_di_corollary2_bridge(unsigned n, unsigned k) {
  require_k_le_n(n, k, "di_corollary2_bridge");
  const auto sides = di_symmetry_sides(n, k);
  const ExactPoly f = shifted_base(n);
  const ExactRational scale = fact(n - k) * pow2(2L * n) * pow2(static_cast<long>(k) - static_cast<long>(n));
  const ExactPoly cor_lhs = shifted_base(k) * poly_derivative(f, n + k);
  const ExactPoly cor_rhs = ExactRational(fact(n + k) / fact(n - k)) * poly_derivative(f, n - k);
  return sides.lhs.compose_affine(2, 1) == scale * cor_lhs && sides.rhs.compose_affine(2, 1) == scale * cor_rhs;
}

BinomialSides corollary3_sides(unsigned n, unsigned k, unsigned l) {
  if (k > n || l > n) throw std::invalid_argument("corollary3 requires k, l <= n");
  ExactInteger lhs = 0;
  for (unsigned m = 0; m <= k; ++m) {
    lhs += binomial(k, m) * binomial(n, m + l) * binomial(2L * (m + l), static_cast<long>(k + n));
  }
  return {lhs, binomial(n, l) * binomial(2L * l, static_cast<long>(n) - static_cast<long>(k))};
}

bool verify_corollary3(unsigned n, unsigned k, unsigned l) {
  const auto sides = corollary3_sides(n, k, l);
  return sides.lhs == sides.rhs;
}

Terminating3F2Params terminating_3f2_params(unsigned n, unsigned k, unsigned l) {
  if (k > n || l > n) throw std::invalid_argument("terminating_3f2 requires k, l <= n");
  const ExactRational nk = static_cast<unsigned long>(n + k);
  const ExactRational L = static_cast<unsigned long>(l);
  return {{ExactRational(-static_cast<long>(k)), ExactRational(static_cast<long>(l) - static_cast<long>(n)),
           ExactRational(L + make_rational(1, 2))},
          {ExactRational(L - nk / 2 + 1), ExactRational((1 - nk) / 2 + L)},
          std::min(k, n - l)};
}

bool terminating_3f2_degenerate(unsigned n, unsigned k, unsigned l) {
  const auto p = terminating_3f2_params(n, k, l);
  if (binomial(2L * l, static_cast<long>(n + k)) == 0) return true;
  for (const auto& b : p.lower) {
    for (unsigned j = 0; j < p.last_index; ++j) {
      if (b + j == 0) return true;
    }
  }
  return false;
}

ExactRational terminating_3f2(unsigned n, unsigned k, unsigned l) {
  if (terminating_3f2_degenerate(n, k, l)) {
    throw DegenerateParameters("terminating 3F2 is degenerate at n=" + std::to_string(n) + " k=" +
                               std::to_string(k) + " l=" + std::to_string(l));
  }
  const auto p = terminating_3f2_params(n, k, l);
  ExactRational term = 1;
  ExactRational sum = 1;
  for (unsigned m = 0; m < p.last_index; ++m) {
    term *= p.upper[0] + m;
    term *= p.upper[1] + m;
    term *= p.upper[2] + m;
    term /= (p.lower[0] + m) * (p.lower[1] + m) * (m + 1);
    sum += term;
  }
  return sum;
}

ExactRational terminating_3f2_closed_form(unsigned n, unsigned k, unsigned l) {
  const ExactInteger den = binomial(2L * l, static_cast<long>(n + k));
  if (den == 0) throw DegenerateParameters("C(2l, n+k) vanishes");
  return make_rational(binomial(2L * l, static_cast<long>(n) - static_cast<long>(k)), den);
}

ExactPoly legendre_operator_apply(unsigned k, const ExactPoly& p) {
  return poly_derivative(rodrigues_base(k) * poly_derivative(p, k), k);
}

bool verify_corollary4(unsigned n, unsigned k) {
  require_k_le_n(n, k, "corollary4");
  const ExactPoly P = legendre_poly(n);
  return legendre_operator_apply(k, P) == ExactRational(fact(n + k) / fact(n - k)) * P;
}

bool verify_legendre_eigen(unsigned n) {
  const ExactPoly P = legendre_poly(n);
  const ExactPoly lhs = poly_derivative(rodrigues_base(1) * poly_derivative(P, 1), 1);
  return lhs == ExactRational(static_cast<unsigned long>(n) * (n + 1)) * P;
}

}  // namespace hypercheck
