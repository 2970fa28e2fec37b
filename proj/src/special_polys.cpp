#include "psd/special_polys.hpp"

#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace psd {

void validate(const PowerSumSpec& spec) {
  if (spec.a == 0) throw std::invalid_argument("power sum spec: a must be nonzero");
  if (std::gcd(spec.a, spec.b) != 1) {
    throw std::invalid_argument("power sum spec: gcd(a, b) must be 1, got (" + std::to_string(spec.a) + ", " +
                                std::to_string(spec.b) + ")");
  }
  if (spec.k < 1) throw std::invalid_argument("power sum spec: k must be positive");
}

namespace {

class BernoulliTable {
 public:
  Rational get(unsigned k) {
    {
      std::shared_lock lock(mutex_);
      if (k < values_.size()) return values_[k];
    }
    std::unique_lock lock(mutex_);
    // sum_{j=0}^{n} C(n+1, j) B_j = 0
    while (values_.size() <= k) {
      const auto n = static_cast<unsigned>(values_.size());
      Rational acc(0);
      for (unsigned j = 0; j < n; ++j) acc += Rational(binomial(n + 1, j)) * values_[j];
      values_.push_back(-acc / (n + 1));
    }
    return values_[k];
  }

 private:
  std::shared_mutex mutex_;
  std::vector<Rational> values_{Rational(1)};
};

BernoulliTable& table() {
  static BernoulliTable instance;
  return instance;
}

}  // namespace

Rational bernoulli_number(unsigned k) { return table().get(k); }

Polynomial bernoulli_polynomial(unsigned k) {
  std::vector<Rational> coeffs(k + 1);
  for (unsigned i = 0; i <= k; ++i) coeffs[k - i] = Rational(binomial(k, i)) * bernoulli_number(i);
  return Polynomial(std::move(coeffs));
}

Polynomial dickson_polynomial(const DicksonSpec& spec) {
  if (spec.m < 1) throw std::invalid_argument("dickson polynomial: degree must be positive");
  if (is_zero(spec.param)) throw std::invalid_argument("dickson polynomial: parameter must be nonzero");
  const unsigned m = spec.m;
  std::vector<Rational> coeffs(m + 1);
  const Rational neg = -spec.param;
  for (unsigned i = 0; i <= m / 2; ++i) {
    // m/(m-i) * C(m-i, i) is an integer for i <= m/2
    Rational weight = frac(Integer(m) * binomial(m - i, i), Integer(m - i));
    coeffs[m - 2 * i] = weight * pow(neg, i);
  }
  return Polynomial(std::move(coeffs));
}

Integer power_sum_direct(const PowerSumSpec& spec, std::uint64_t n) {
  Integer sum(0);
  const Integer a(static_cast<long>(spec.a));
  Integer term(static_cast<long>(spec.b));
  for (std::uint64_t i = 0; i < n; ++i) {
    sum += pow(term, spec.k);
    term += a;
  }
  return sum;
}

Polynomial power_sum_polynomial(const PowerSumSpec& spec) {
  validate(spec);
  const Polynomial bern = bernoulli_polynomial(spec.k + 1);
  const Rational shift = frac(spec.b, spec.a);
  Polynomial shifted = affine_substitute(bern, Rational(1), shift);
  shifted -= Polynomial::constant(evaluate(bern, shift));
  return shifted * (pow(from_int(spec.a), spec.k) / (spec.k + 1));
}

Polynomial hat_power_sum(unsigned v, std::int64_t a, std::int64_t b) {
  if (v < 1) throw std::invalid_argument("hat power sum: v must be positive");
  const PowerSumSpec spec{a, b, 2 * v - 1};
  const Polynomial s = power_sum_polynomial(spec);
  // x = u + 1/2 - b/a
  const Polynomial centred = affine_substitute(s, Rational(1), frac(1, 2) - frac(b, a));
  std::vector<Rational> even(v + 1);
  const auto coeffs = centred.coeffs();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i % 2 == 1) {
      if (!is_zero(coeffs[i])) {
        throw std::logic_error("hat power sum: odd coefficient of u^" + std::to_string(i) +
                               " is nonzero for (a, b, k) = (" + std::to_string(a) + ", " + std::to_string(b) +
                               ", " + std::to_string(2 * v - 1) + ")");
      }
    } else {
      even[i / 2] = coeffs[i];
    }
  }
  return Polynomial(std::move(even));
}

}  // namespace psd
