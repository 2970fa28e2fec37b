#include "psd/multivariate.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace psd {

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::out_of_range("variable index out of range");
  MultiPoly p(nvars);
  Exponents e(nvars, 0);
  e[index] = 1;
  p.add_term(e, Rational(1));
  return p;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

unsigned MultiPoly::degree_in(std::size_t var) const {
  unsigned deg = 0;
  for (const auto& [e, c] : terms_) deg = std::max(deg, e[var]);
  return deg;
}

MultiPoly MultiPoly::coefficient(std::size_t var, unsigned power) const {
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] != power) continue;
    Exponents reduced = e;
    reduced[var] = 0;
    out.add_term(reduced, c);
  }
  return out;
}

MultiPoly MultiPoly::substitute(std::size_t var, const MultiPoly& value) const {
  MultiPoly out(nvars_);
  std::vector<MultiPoly> powers{constant(nvars_, Rational(1))};
  for (const auto& [e, c] : terms_) {
    while (powers.size() <= e[var]) powers.push_back(powers.back() * value);
    Exponents rest = e;
    rest[var] = 0;
    MultiPoly mono(nvars_);
    mono.add_term(rest, c);
    out += mono * powers[e[var]];
  }
  return out;
}

MultiPoly MultiPoly::divide_by_power(std::size_t var, unsigned power) const {
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] < power) throw std::logic_error("multivariate division by a variable power is inexact");
    Exponents reduced = e;
    reduced[var] -= power;
    out.add_term(reduced, c);
  }
  return out;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != nvars_) throw std::invalid_argument("evaluation point has the wrong dimension");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < nvars_; ++i) term *= psd::pow(point[i], e[i]);
    acc += term;
  }
  return acc;
}

Polynomial MultiPoly::as_univariate(std::size_t var) const {
  std::vector<Rational> coeffs(degree_in(var) + 1);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (i != var && e[i] != 0) throw std::logic_error("polynomial depends on more than one variable");
    }
    coeffs[e[var]] = c;
  }
  return Polynomial(std::move(coeffs));
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& scalar) {
  if (sgn(scalar) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) out << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) out << "-";
    first = false;
    const Rational mag = abs(c);
    bool constant_term = std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
    bool need_star = false;
    if (constant_term || mag != 1) {
      out << mag.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (need_star) out << "*";
      out << (i < names.size() ? names[i] : "v" + std::to_string(i));
      if (e[i] > 1) out << "^" << e[i];
      need_star = true;
    }
  }
  return out.str();
}

MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
  if (lhs.nvars() != rhs.nvars()) throw std::invalid_argument("multivariate product: variable counts differ");
  MultiPoly out(lhs.nvars());
  MultiPoly::Exponents e(lhs.nvars());
  for (const auto& [e1, c1] : lhs.terms()) {
    for (const auto& [e2, c2] : rhs.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      out.add_term(e, c1 * c2);
    }
  }
  return out;
}

MultiPoly operator*(MultiPoly p, const Rational& scalar) { return p *= scalar; }
MultiPoly operator*(const Rational& scalar, MultiPoly p) { return p *= scalar; }

MultiPoly pow(const MultiPoly& p, unsigned exponent) {
  MultiPoly result = MultiPoly::constant(p.nvars(), Rational(1));
  MultiPoly factor = p;
  while (exponent != 0) {
    if (exponent & 1u) result = result * factor;
    exponent >>= 1u;
    if (exponent != 0) factor = factor * factor;
  }
  return result;
}

MultiPoly compose(const Polynomial& p, const MultiPoly& value) {
  MultiPoly result(value.nvars());
  const auto coeffs = p.coeffs();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    result = result * value;
    result += MultiPoly::constant(value.nvars(), *it);
  }
  return result;
}

}  // namespace psd
