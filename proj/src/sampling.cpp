#include "psd/sampling.hpp"

#include <numeric>
#include <vector>

namespace psd {

std::pair<std::int64_t, std::int64_t> Sampler::coprime_pair(std::int64_t bound) {
  for (;;) {
    const std::int64_t a = uniform(-bound, bound);
    const std::int64_t b = uniform(-bound, bound);
    if (a != 0 && std::gcd(a, b) == 1) return {a, b};
  }
}

PowerSumSpec Sampler::power_sum_spec(unsigned k_min, unsigned k_max, std::int64_t bound) {
  const auto [a, b] = coprime_pair(bound);
  return {a, b, static_cast<unsigned>(uniform(k_min, k_max))};
}

Rational Sampler::rational(std::int64_t num_bound, std::int64_t den_bound) {
  return frac(uniform(-num_bound, num_bound), uniform(1, den_bound));
}

Rational Sampler::nonzero_rational(std::int64_t num_bound, std::int64_t den_bound) {
  for (;;) {
    Rational r = rational(num_bound, den_bound);
    if (!is_zero(r)) return r;
  }
}

Polynomial Sampler::polynomial(std::size_t deg) {
  std::vector<Rational> coeffs(deg + 1);
  for (std::size_t i = 0; i < deg; ++i) coeffs[i] = rational();
  coeffs[deg] = nonzero_rational();
  return Polynomial(std::move(coeffs));
}

}  // namespace psd
