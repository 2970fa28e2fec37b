#ifndef PSD_SHIFTED_COEFFS_HPP
#define PSD_SHIFTED_COEFFS_HPP

#include <optional>

#include "psd/polynomial.hpp"
#include "psd/special_polys.hpp"

namespace psd {

/// Closed forms for the top coefficients of S_{a,b}^k(c1*x + c0), in terms of
/// c0' = b/a + c0:
///   s_{k+1} = a^k c1^(k+1) / (k+1)
///   s_k     = a^k c1^k (2c0' - 1) / 2
///   s_{k-1} = a^k c1^(k-1) k (6c0'^2 - 6c0' + 1) / 12
///   s_{k-3} = a^k c1^(k-3) k(k-1)(k-2) (30c0'^4 - 60c0'^3 + 30c0'^2 - 1) / 720   (k >= 4)
struct ShiftedCoeffs {
  Rational s_top;
  Rational s_k;
  Rational s_km1;
  std::optional<Rational> s_km3;
  Rational c0prime;
};

/// Requires c1 != 0 and k >= 2; throws std::invalid_argument otherwise.
ShiftedCoeffs shifted_coeffs(const PowerSumSpec& spec, const Rational& c1, const Rational& c0);

/// Coefficient of x^j in p(c1*x + c0) as a polynomial in c0, namely
/// c1^j * p^(j)(c0) / j!.
Polynomial shift_coefficient_in_offset(const Polynomial& p, std::size_t j, const Rational& c1);

}  // namespace psd

#endif  // PSD_SHIFTED_COEFFS_HPP
