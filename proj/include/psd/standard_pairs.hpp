#ifndef PSD_STANDARD_PAIRS_HPP
#define PSD_STANDARD_PAIRS_HPP

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "psd/polynomial.hpp"
#include "psd/report.hpp"
#include "psd/special_polys.hpp"

namespace psd {

enum class PairKind { first, second, third, fourth, fifth };

std::string to_string(PairKind kind);

/// (x^m, a x^r p(x)^m)
struct FirstKind {
  unsigned m = 1;
  unsigned r = 0;
  Polynomial p = Polynomial::constant(Rational(1));
  Rational a{1};
  bool switched = false;
};

/// (x^2, (a x^2 + b) p(x)^2)
struct SecondKind {
  Rational a{1};
  Rational b{1};
  Polynomial p = Polynomial::constant(Rational(1));
  bool switched = false;
};

/// (D_m(x, a^n), D_n(x, a^m)) with gcd(m, n) = 1
struct ThirdKind {
  unsigned m = 1;
  unsigned n = 1;
  Rational a{1};
};

/// (a^(-m/2) D_m(x, a), -b^(-n/2) D_n(x, b)) with gcd(m, n) = 2
struct FourthKind {
  unsigned m = 2;
  unsigned n = 2;
  Rational a{1};
  Rational b{1};
};

/// ((a x^2 - 1)^3, 3x^4 - 4x^3)
struct FifthKind {
  Rational a{1};
  bool switched = false;
};

using StandardPair = std::variant<FirstKind, SecondKind, ThirdKind, FourthKind, FifthKind>;

PairKind kind_of(const StandardPair& sp);

/// Throws std::invalid_argument naming the violated condition.
void validate(const StandardPair& sp);

/// The concrete pair (f, g), with the switched flag applied.
std::pair<Polynomial, Polynomial> realize(const StandardPair& sp);

/// e1 * p + e0 with e1 != 0; the outer affine map of a degree-one phi.
struct LinearForm {
  Rational e1;
  Rational e0;

  LinearForm(Rational scale, Rational offset);
  Polynomial apply(const Polynomial& p) const { return p * e1 + Polynomial::constant(e0); }
};

/// Rational roots of a polynomial of degree 1 or 2, ascending. Throws
/// std::invalid_argument for other degrees.
std::vector<Rational> rational_roots_low_degree(const Polynomial& p);

/// S_{a,b}^k(c1 x + c0) is never e1 x^(k+1) + e0. Requires c1 != 0, k >= 2.
Report lemma1_reject(const PowerSumSpec& spec, const Rational& c1, const Rational& c0);

/// S_{a,b}^k(c1 x + c0) is never e1 D_m(x, delta) + e0 for m = k + 1 > 4.
/// m <= 4 is rejected with std::invalid_argument, since there genuine
/// identities exist.
Report lemma2_reject(const PowerSumSpec& spec, const Rational& c1, const Rational& c0, const Rational& delta);

/// S_{a,b}^3(c1 x + c0) is never e1 (3x^4 - 4x^3) + e0.
Report fifth_kind_reject(std::int64_t a, std::int64_t b);

}  // namespace psd

#endif  // PSD_STANDARD_PAIRS_HPP
