#ifndef PSD_POLYNOMIAL_HPP
#define PSD_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "psd/rational.hpp"

namespace psd {

/// Degree of a polynomial; std::nullopt stands for the degree of the zero
/// polynomial (minus infinity).
using Degree = std::optional<std::size_t>;

/// Dense univariate polynomial over the rationals. Index i of coeffs() holds
/// the coefficient of x^i; the highest stored coefficient is always nonzero,
/// so the zero polynomial is the empty sequence.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t power);
  static Polynomial x() { return monomial(Rational(1), 1); }

  std::span<const Rational> coeffs() const { return coeffs_; }
  Degree degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Coefficient of x^i; zero above the degree.
  Rational coeff(std::size_t i) const;
  /// Leading coefficient; zero for the zero polynomial.
  Rational lead() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);
  Polynomial& operator/=(const Rational& scalar);

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

Polynomial operator+(Polynomial lhs, const Polynomial& rhs);
Polynomial operator-(Polynomial lhs, const Polynomial& rhs);
Polynomial operator-(Polynomial p);
Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
Polynomial operator*(Polynomial p, const Rational& scalar);
Polynomial operator*(const Rational& scalar, Polynomial p);
Polynomial operator/(Polynomial p, const Rational& scalar);

Polynomial pow(const Polynomial& p, unsigned exponent);

/// outer(inner(x)), by Horner's scheme over polynomials.
Polynomial compose(const Polynomial& outer, const Polynomial& inner);

/// p(c1*x + c0).
Polynomial affine_substitute(const Polynomial& p, const Rational& c1, const Rational& c0);

Rational evaluate(const Polynomial& p, const Rational& t);

Polynomial derivative(const Polynomial& p);

/// Euclidean division over Q: returns (quotient, remainder) with
/// deg remainder < deg divisor. Throws std::domain_error on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& dividend, const Polynomial& divisor);

/// Division that must be exact; throws std::logic_error otherwise.
Polynomial exact_quotient(const Polynomial& dividend, const Polynomial& divisor);

Polynomial monic(const Polynomial& p);

/// Primitive integer polynomial with positive leading coefficient that is a
/// rational multiple of p (zero stays zero).
Polynomial primitive_part(const Polynomial& p);

/// Monic gcd over Q, computed with a primitive remainder sequence over Z.
/// gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& p, const Polynomial& q);

/// Human-readable form such as "4/3*x^3 - 1/3*x"; the variable name is
/// configurable so outer components can print in u.
std::string to_string(const Polynomial& p, const std::string& var = "x");

}  // namespace psd

#endif  // PSD_POLYNOMIAL_HPP
