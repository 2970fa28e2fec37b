#ifndef PSD_MULTIVARIATE_HPP
#define PSD_MULTIVARIATE_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "psd/polynomial.hpp"
#include "psd/rational.hpp"

namespace psd {

/// Sparse polynomial over Q in a fixed number of variables. Only used for the
/// low-degree symbolic coefficient comparisons, so a map of exponent vectors
/// is plenty.
class MultiPoly {
 public:
  using Exponents = std::vector<unsigned>;

  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Rational& c);
  static MultiPoly variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  unsigned degree_in(std::size_t var) const;

  /// Collects the coefficient of var^power; the result no longer depends on var.
  MultiPoly coefficient(std::size_t var, unsigned power) const;

  /// Replaces var by value everywhere.
  MultiPoly substitute(std::size_t var, const MultiPoly& value) const;

  /// Exact division by var^power; throws std::logic_error if some term has a
  /// smaller exponent.
  MultiPoly divide_by_power(std::size_t var, unsigned power) const;

  Rational evaluate(const std::vector<Rational>& point) const;

  /// Univariate view when only var occurs; throws std::logic_error otherwise.
  Polynomial as_univariate(std::size_t var) const;

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const Rational& scalar);

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
  void add_term(const Exponents& e, const Rational& c);

  std::size_t nvars_;
  std::map<Exponents, Rational> terms_;
};

MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs);
MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs);
MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
MultiPoly operator*(MultiPoly p, const Rational& scalar);
MultiPoly operator*(const Rational& scalar, MultiPoly p);
MultiPoly pow(const MultiPoly& p, unsigned exponent);

/// p(value), Horner over MultiPoly.
MultiPoly compose(const Polynomial& p, const MultiPoly& value);

}  // namespace psd

#endif  // PSD_MULTIVARIATE_HPP
