#ifndef PSD_SAMPLING_HPP
#define PSD_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <utility>

#include "psd/polynomial.hpp"
#include "psd/special_polys.hpp"

namespace psd {

inline constexpr std::uint64_t kDefaultSeed = 20130611;

/// Deterministic generator for the sweeps. Only the raw mt19937_64 stream is
/// used (no std distributions), so a seed reproduces across standard
/// libraries.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

  /// Coprime (a, b) with a != 0 and |a|, |b| <= bound.
  std::pair<std::int64_t, std::int64_t> coprime_pair(std::int64_t bound = 9);

  PowerSumSpec power_sum_spec(unsigned k_min, unsigned k_max, std::int64_t bound = 9);

  /// p/q with |p| <= num_bound and 1 <= q <= den_bound.
  Rational rational(std::int64_t num_bound = 9, std::int64_t den_bound = 9);
  Rational nonzero_rational(std::int64_t num_bound = 9, std::int64_t den_bound = 9);

  /// Polynomial of exact degree deg with small random rational coefficients.
  Polynomial polynomial(std::size_t deg);

 private:
  std::mt19937_64 engine_;
};

}  // namespace psd

#endif  // PSD_SAMPLING_HPP
