#ifndef PSD_RATIONAL_HPP
#define PSD_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace psd {

// Arbitrary precision integers and reduced fractions. mpq_class keeps its
// value canonical (positive denominator, gcd 1) after every arithmetic
// operation; only direct construction from a numerator/denominator pair needs
// an explicit canonicalize(), which frac() does.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational frac(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational frac(std::int64_t num, std::int64_t den) {
  return frac(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

inline Rational from_int(std::int64_t v) { return Rational(Integer(static_cast<long>(v))); }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

Rational pow(const Rational& base, unsigned exponent);
Integer pow(const Integer& base, unsigned exponent);
Integer binomial(unsigned n, unsigned k);
Integer gcd(const Integer& a, const Integer& b);

/// True iff r = q^2 for some rational q.
bool is_rational_square(const Rational& r);

/// "p/q" with the denominator always present ("0/1", "-1/3", "36/1").
std::string to_string(const Rational& r);

/// Accepts "p/q", "-p/q" or a bare integer "p". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace psd

#endif  // PSD_RATIONAL_HPP
