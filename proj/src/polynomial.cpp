#include "psd/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace psd {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> coeffs(power + 1);
  coeffs[power] = c;
  return Polynomial(std::move(coeffs));
}

Degree Polynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Rational Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational Polynomial::lead() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (coeffs_.empty() || rhs.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (sgn(scalar) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Polynomial& Polynomial::operator/=(const Rational& scalar) {
  if (sgn(scalar) == 0) throw std::domain_error("polynomial division by zero scalar");
  for (auto& c : coeffs_) c /= scalar;
  return *this;
}

Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
Polynomial operator-(Polynomial p) { return p *= Rational(-1); }
Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  Polynomial out = lhs;
  return out *= rhs;
}
Polynomial operator*(Polynomial p, const Rational& scalar) { return p *= scalar; }
Polynomial operator*(const Rational& scalar, Polynomial p) { return p *= scalar; }
Polynomial operator/(Polynomial p, const Rational& scalar) { return p /= scalar; }

Polynomial pow(const Polynomial& p, unsigned exponent) {
  Polynomial result = Polynomial::constant(Rational(1));
  Polynomial factor = p;
  while (exponent != 0) {
    if (exponent & 1u) result *= factor;
    exponent >>= 1u;
    if (exponent != 0) factor *= factor;
  }
  return result;
}

Polynomial compose(const Polynomial& outer, const Polynomial& inner) {
  Polynomial result;
  const auto coeffs = outer.coeffs();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    result *= inner;
    result += Polynomial::constant(*it);
  }
  return result;
}

Polynomial affine_substitute(const Polynomial& p, const Rational& c1, const Rational& c0) {
  return compose(p, Polynomial{c0, c1});
}

Rational evaluate(const Polynomial& p, const Rational& t) {
  Rational acc(0);
  const auto coeffs = p.coeffs();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

Polynomial derivative(const Polynomial& p) {
  const auto coeffs = p.coeffs();
  if (coeffs.size() <= 1) return {};
  std::vector<Rational> out(coeffs.size() - 1);
  for (std::size_t i = 1; i < coeffs.size(); ++i) out[i - 1] = coeffs[i] * static_cast<unsigned long>(i);
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  const std::size_t dd = *divisor.degree();
  std::vector<Rational> rem(dividend.coeffs().begin(), dividend.coeffs().end());
  if (rem.size() <= dd) return {Polynomial{}, dividend};
  std::vector<Rational> quot(rem.size() - dd);
  const Rational lead = divisor.lead();
  const auto dcoeffs = divisor.coeffs();
  for (std::size_t i = rem.size(); i-- > dd;) {
    if (sgn(rem[i]) == 0) continue;
    Rational q = rem[i] / lead;
    quot[i - dd] = q;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= q * dcoeffs[j];
  }
  rem.resize(dd);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial exact_quotient(const Polynomial& dividend, const Polynomial& divisor) {
  auto [q, r] = divmod(dividend, divisor);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
  return q;
}

Polynomial monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  return p / p.lead();
}

Polynomial primitive_part(const Polynomial& p) {
  if (p.is_zero()) return p;
  Integer den_lcm(1);
  for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer content(0);
  std::vector<Integer> scaled;
  scaled.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    Integer v = c.get_num() * (den_lcm / c.get_den());
    content = gcd(content, v);
    scaled.push_back(std::move(v));
  }
  if (sgn(scaled.back()) < 0) content = -content;
  std::vector<Rational> out;
  out.reserve(scaled.size());
  for (const auto& v : scaled) out.emplace_back(Integer(v / content));
  return Polynomial(std::move(out));
}

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
  Polynomial a = primitive_part(p);
  Polynomial b = primitive_part(q);
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = primitive_part(r);
  }
  return monic(a);
}

std::string to_string(const Polynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  const auto coeffs = p.coeffs();
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const Rational& c = coeffs[i];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (i == 0 || !unit) out << mag.get_str();
    if (i > 0) {
      if (!unit) out << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

}  // namespace psd
