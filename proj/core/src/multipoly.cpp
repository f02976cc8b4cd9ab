#include "hypercheck/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hypercheck {

std::string_view var_name(Var v) {
  switch (v) {
    case Var::a: return "a";
    case Var::b: return "b";
    case Var::t: return "t";
    case Var::x: return "x";
  }
  return "?";
}

Var parse_var(std::string_view name) {
  for (Var v : kAllVars) {
    if (var_name(v) == name) return v;
  }
  throw std::invalid_argument("unknown variable '" + std::string(name) + "' (expected a, b, t or x)");
}

std::uint32_t total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

bool GradedLexLess::operator()(const Exponents& lhs, const Exponents& rhs) const {
  const auto dl = hypercheck::total_degree(lhs);
  const auto dr = hypercheck::total_degree(rhs);
  if (dl != dr) return dl < dr;
  return lhs < rhs;
}

MultiPoly::MultiPoly(const ExactRational& constant) { add_term(Exponents{}, constant); }

MultiPoly::MultiPoly(long constant) : MultiPoly(ExactRational(constant)) {}

MultiPoly MultiPoly::variable(Var v) {
  Exponents e{};
  e[static_cast<std::size_t>(v)] = 1;
  return monomial(e, 1);
}

MultiPoly MultiPoly::monomial(const Exponents& exponents, const ExactRational& coeff) {
  MultiPoly p;
  p.add_term(exponents, coeff);
  return p;
}

void MultiPoly::add_term(const Exponents& exponents, const ExactRational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

ExactRational MultiPoly::coefficient(const Exponents& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? ExactRational(0) : it->second;
}

std::uint32_t MultiPoly::degree(Var v) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(v)]);
  return d;
}

std::uint32_t MultiPoly::total_degree() const {
  // Graded order puts the highest total degree last.
  return terms_.empty() ? 0 : hypercheck::total_degree(terms_.rbegin()->first);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
  MultiPoly r;
  for (const auto& [el, cl] : lhs.terms_) {
    for (const auto& [er, cr] : rhs.terms_) {
      Exponents e;
      for (std::size_t i = 0; i < kVarCount; ++i) e[i] = el[i] + er[i];
      r.add_term(e, cl * cr);
    }
  }
  return r;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = 1;
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::diff(Var v) const {
  const auto idx = static_cast<std::size_t>(v);
  MultiPoly r;
  for (const auto& [e, c] : terms_) {
    if (e[idx] == 0) continue;
    Exponents d = e;
    d[idx] -= 1;
    r.add_term(d, c * e[idx]);
  }
  return r;
}

MultiPoly MultiPoly::substitute(Var v, const ExactRational& value) const {
  const auto idx = static_cast<std::size_t>(v);
  MultiPoly r;
  for (const auto& [e, c] : terms_) {
    ExactRational factor = 1;
    for (std::uint32_t i = 0; i < e[idx]; ++i) factor *= value;
    Exponents reduced = e;
    reduced[idx] = 0;
    r.add_term(reduced, c * factor);
  }
  return r;
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& value) const {
  const auto parts = coefficients_in(v);
  // Horner in the substituted polynomial.
  MultiPoly r;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    r = r * value + *it;
  }
  return r;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(Var v) const {
  const auto idx = static_cast<std::size_t>(v);
  std::vector<MultiPoly> parts(degree(v) + 1);
  for (const auto& [e, c] : terms_) {
    Exponents reduced = e;
    reduced[idx] = 0;
    parts[e[idx]].add_term(reduced, c);
  }
  return parts;
}

ExactRational MultiPoly::evaluate(const std::array<ExactRational, kVarCount>& point) const {
  ExactRational sum = 0;
  for (const auto& [e, c] : terms_) {
    ExactRational term = c;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      for (std::uint32_t k = 0; k < e[i]; ++k) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

double MultiPoly::evaluate(const std::array<double, kVarCount>& point) const {
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double term = c.get_d();
    for (std::size_t i = 0; i < kVarCount; ++i) {
      for (std::uint32_t k = 0; k < e[i]; ++k) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest degree first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    ExactRational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool is_unit_monomial = hypercheck::total_degree(e) > 0;
    bool need_star = false;
    if (!(is_unit_monomial && mag == 1)) {
      out << mag.get_str();
      need_star = true;
    }
    for (Var v : kAllVars) {
      const auto p = e[static_cast<std::size_t>(v)];
      if (p == 0) continue;
      if (need_star) out << "*";
      out << var_name(v);
      if (p > 1) out << "^" << p;
      need_star = true;
    }
  }
  return out.str();
}

MultiPoly poly_diff(const MultiPoly& p, std::string_view var) { return p.diff(parse_var(var)); }

}  // namespace hypercheck
