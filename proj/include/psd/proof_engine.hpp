#ifndef PSD_PROOF_ENGINE_HPP
#define PSD_PROOF_ENGINE_HPP

#include <cstdint>
#include <optional>

#include "psd/polynomial.hpp"
#include "psd/report.hpp"
#include "psd/shifted_coeffs.hpp"
#include "psd/special_polys.hpp"

namespace psd {

/// The four leading coefficients (indices 2k+2, 2k+1, 2k, 2k-2) of a degree
/// 2k+2 polynomial that is even in its variable.
struct EvenTopCoeffs {
  Rational top;
  Rational odd;
  Rational c2k;
  Rational c2km2;

  friend bool operator==(const EvenTopCoeffs&, const EvenTopCoeffs&) = default;
};

/// Both sides of S_{a,b}^k(A x^2 + B) = S_{c,d}^{2k+1}(x - d/c + 1/2).
struct Thm2Coeffs {
  unsigned k = 2;
  Rational A;
  Rational B;
  EvenTopCoeffs rhs;  // r_{2k+2}, r_{2k+1}, r_{2k}, r_{2k-2}
  EvenTopCoeffs lhs;  // t_{2k+2}, t_{2k+1}, t_{2k}, t_{2k-2}
};

/// Closed forms for S_{c,d}^{2k+1}(x - d/c + 1/2):
///   r_{2k+2} = c^{2k+1}/(2k+2), r_{2k+1} = 0, r_{2k} = -c^{2k+1}(2k+1)/24,
///   r_{2k-2} = 7 c^{2k+1} (2k+1) k (2k-1) / 2880.
EvenTopCoeffs rhs_coeffs(std::int64_t c, std::int64_t d, unsigned k);

/// Closed forms for S_{a,b}^k(A x^2 + B), with beta = b/a:
///   t_{2k+2} = a^k A^{k+1}/(k+1), t_{2k+1} = 0,
///   t_{2k}   = a^k A^k B + a^k A^k (2 beta - 1)/2,
///   t_{2k-2} = a^k k/2 A^{k-1} B^2 + a^k k/2 A^{k-1} B (2 beta - 1)
///            + a^k k/12 A^{k-1} (6 beta^2 - 6 beta + 1).
EvenTopCoeffs lhs_coeffs(const PowerSumSpec& spec, const Rational& A, const Rational& B);

Thm2Coeffs thm2_coeffs(const PowerSumSpec& lhs, std::int64_t c, std::int64_t d, const Rational& A,
                       const Rational& B);

/// Symbolic comparison of the two sides with A, B and beta = b/a kept as
/// indeterminates. Shows that the index 2k-2 residual, after eliminating
/// c^{2k+1} and beta with the index 2k+2 and 2k equations, does not depend on
/// B and is a nonzero multiple of A^2 (2k+1)(3-k) - 15, then that no rational
/// A solves it. Requires k >= 2.
Report theorem2_contradiction(unsigned k);

/// The index 2k-2 residual divided by a^k A^(k-1), with c^{2k+1} and beta
/// eliminated, evaluated at (A, B); equals k (A^2 (2k+1)(3-k)/360 - 1/24).
/// Requires A != 0.
Rational theorem2_residual(unsigned k, const Rational& A, const Rational& B);

struct Thm1Reduction {
  Report report;
  Polynomial scaled_sum;       // 8a S_{a,b}^1(x)
  Polynomial completed_square;  // (2ax + 2b - a)^2 - (2b - a)^2
  std::optional<Polynomial> rhs_in_y;  // 8a c^l/(l+1) (B_{l+1}(y + d/c) - B_{l+1}(d/c))
};

/// Rewrites S_{a,b}^1(x) = S_{c,d}^l(y) as a square in x. The optional
/// right-hand spec (c, d, l) also assembles the scaled right side in y.
Thm1Reduction thm1_reduction(std::int64_t a, std::int64_t b, const std::optional<PowerSumSpec>& rhs = std::nullopt);

struct Thm3Reduction {
  Report report;
  Polynomial quartic;            // coefficients of S_{a,b}^3 in u = x + b/a - 1/2
  Rational representation_constant;  // (a^4 - 16a^2b^2 + 32ab^3 - 16b^4) / (64a)
  Rational K;                    // 64a S_{a,b}^3(x) + K = (X - s)^2, X = (2ax + 2b - a)^2
  Rational s;
  bool displayed_constants_hold = false;  // 3a^4 + 16a^2b^2 - 32ab^3 - 16b^4 with s = 2a^2
  std::optional<Polynomial> rhs_in_y;     // 64a S_{c,d}^l(y) + K
};

/// Quartic representation of S_{a,b}^3 and the square completion in
/// X = (2ax + 2b - a)^2, with K and s derived by exact computation.
Thm3Reduction thm3_reduction(std::int64_t a, std::int64_t b, const std::optional<PowerSumSpec>& rhs = std::nullopt);

/// Arithmetic skeleton of the case split on deg phi for S_{a,b}^k(x) =
/// S_{c,d}^l(y). Throws std::invalid_argument unless 2 <= k < l.
Report degphi_case_split(unsigned k, unsigned l);

Json to_json(const EvenTopCoeffs& c);

}  // namespace psd

#endif  // PSD_PROOF_ENGINE_HPP
