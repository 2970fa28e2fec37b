#ifndef PSD_SPECIAL_POLYS_HPP
#define PSD_SPECIAL_POLYS_HPP

#include <cstdint>

#include "psd/polynomial.hpp"

namespace psd {

/// The triple (a, b, k) of S_{a,b}^k(x) = b^k + (a+b)^k + ... + (a(x-1)+b)^k.
struct PowerSumSpec {
  std::int64_t a = 1;
  std::int64_t b = 0;
  unsigned k = 1;

  friend bool operator==(const PowerSumSpec&, const PowerSumSpec&) = default;
};

/// Throws std::invalid_argument unless a != 0, gcd(a, b) = 1 and k >= 1.
void validate(const PowerSumSpec& spec);

/// D_m(x, param) with param != 0 and m >= 1.
struct DicksonSpec {
  unsigned m = 1;
  Rational param{1};
};

/// B_k = B_k(0), with B_1 = -1/2. Values are cached in a table shared by all
/// threads; each entry is written once.
Rational bernoulli_number(unsigned k);

/// B_k(x) = sum_i C(k, i) B_i x^(k-i).
Polynomial bernoulli_polynomial(unsigned k);

Polynomial dickson_polynomial(const DicksonSpec& spec);

/// Direct integer summation of (a*i + b)^k for 0 <= i < n. n = 0 gives the
/// empty sum, n = 1 gives b^k.
Integer power_sum_direct(const PowerSumSpec& spec, std::uint64_t n);

/// a^k/(k+1) * (B_{k+1}(x + b/a) - B_{k+1}(b/a)), the polynomial extension of
/// power_sum_direct to all x.
Polynomial power_sum_polynomial(const PowerSumSpec& spec);

/// The degree-v polynomial H with S_{a,b}^{2v-1}(x) = H((x + b/a - 1/2)^2).
/// Throws std::logic_error if the shifted power sum has an odd-power term.
Polynomial hat_power_sum(unsigned v, std::int64_t a, std::int64_t b);

}  // namespace psd

#endif  // PSD_SPECIAL_POLYS_HPP
