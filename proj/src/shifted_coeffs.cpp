#include "psd/shifted_coeffs.hpp"

#include <stdexcept>

namespace psd {

ShiftedCoeffs shifted_coeffs(const PowerSumSpec& spec, const Rational& c1, const Rational& c0) {
  validate(spec);
  if (is_zero(c1)) throw std::invalid_argument("shifted_coeffs: c1 must be nonzero");
  if (spec.k < 2) throw std::invalid_argument("shifted_coeffs: k must be at least 2");

  const unsigned k = spec.k;
  const Rational ak = pow(from_int(spec.a), k);
  const Rational t = frac(spec.b, spec.a) + c0;
  const Rational t2 = t * t;

  ShiftedCoeffs out;
  out.c0prime = t;
  out.s_top = ak * pow(c1, k + 1) / (k + 1);
  out.s_k = ak * pow(c1, k) * (2 * t - 1) / 2;
  out.s_km1 = ak * pow(c1, k - 1) * k * (6 * t2 - 6 * t + 1) / 12;
  if (k >= 4) {
    const Rational poly = 30 * t2 * t2 - 60 * t2 * t + 30 * t2 - 1;
    out.s_km3 = ak * pow(c1, k - 3) * (k * (k - 1) * (k - 2)) * poly / 720;
  }
  return out;
}

Polynomial shift_coefficient_in_offset(const Polynomial& p, std::size_t j, const Rational& c1) {
  Polynomial d = p;
  Integer factorial(1);
  for (std::size_t i = 1; i <= j; ++i) {
    d = derivative(d);
    factorial *= static_cast<unsigned long>(i);
  }
  return d * (pow(c1, static_cast<unsigned>(j)) / Rational(factorial));
}

}  // namespace psd
