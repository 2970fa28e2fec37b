#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>
#include <vector>

#include "psd/polynomial.hpp"
#include "psd/sampling.hpp"
#include "psd/special_polys.hpp"

using namespace psd;

namespace {

Integer factorial(unsigned n) {
  Integer f(1);
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

// Coefficients of t/(e^t - 1) by inverting the series (e^t - 1)/t = sum t^n/(n+1)!,
// then B_n = n! * [t^n].
std::vector<Rational> bernoulli_from_series(unsigned order) {
  std::vector<Rational> d(order + 1);
  for (unsigned n = 0; n <= order; ++n) d[n] = Rational(1) / Rational(factorial(n + 1));
  std::vector<Rational> inv(order + 1);
  inv[0] = 1;
  for (unsigned n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (unsigned j = 1; j <= n; ++j) acc += d[j] * inv[n - j];
    inv[n] = -acc;
  }
  for (unsigned n = 0; n <= order; ++n) inv[n] *= factorial(n);
  return inv;
}

// D_0 = 2, D_1 = x, D_m = x D_{m-1} - a D_{m-2}
Polynomial dickson_by_recurrence(unsigned m, const Rational& a) {
  Polynomial prev = Polynomial::constant(Rational(2));
  Polynomial cur = Polynomial::x();
  if (m == 0) return prev;
  for (unsigned i = 1; i < m; ++i) {
    Polynomial next = Polynomial::x() * cur - prev * a;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Integer naive_sum(std::int64_t a, std::int64_t b, unsigned k, unsigned n) {
  Integer s(0);
  for (unsigned i = 0; i < n; ++i) s += pow(Integer(static_cast<long>(a * i + b)), k);
  return s;
}

}  // namespace

TEST_CASE("Bernoulli numbers match the generating series") {
  const auto oracle = bernoulli_from_series(24);
  for (unsigned n = 0; n <= 24; ++n) {
    CAPTURE(n);
    CHECK(bernoulli_number(n) == oracle[n]);
  }
  CHECK(bernoulli_number(1) == frac(-1, 2));
  CHECK(bernoulli_number(12) == frac(-691, 2730));
  CHECK(bernoulli_number(20) == frac(-174611, 330));
}

TEST_CASE("Bernoulli polynomials telescope and reflect") {
  const Polynomial one_minus_x{Rational(1), Rational(-1)};
  const Polynomial x_plus_1{Rational(1), Rational(1)};
  for (unsigned k = 1; k <= 20; ++k) {
    CAPTURE(k);
    const Polynomial bk = bernoulli_polynomial(k);
    CHECK(bk.degree() == k);
    CHECK(compose(bk, x_plus_1) - bk == Polynomial::monomial(Rational(k), k - 1));
    const Polynomial reflected = compose(bk, one_minus_x);
    CHECK(reflected == (k % 2 == 0 ? bk : -bk));
    CHECK(derivative(bk) == bernoulli_polynomial(k - 1) * Rational(k));
  }
}

TEST_CASE("Dickson polynomials satisfy the functional equation and recurrence") {
  Sampler rng(21);
  for (unsigned m = 1; m <= 12; ++m) {
    const Rational a = rng.nonzero_rational();
    const Polynomial d = dickson_polynomial({m, a});
    CHECK(d == dickson_by_recurrence(m, a));
    for (int i = 0; i < 3; ++i) {
      const Rational z = rng.nonzero_rational();
      CHECK(evaluate(d, z + a / z) == pow(z, m) + pow(a / z, m));
    }
  }
  CHECK_THROWS_AS(dickson_polynomial({3, Rational(0)}), std::invalid_argument);
  CHECK_THROWS_AS(dickson_polynomial({0, Rational(1)}), std::invalid_argument);
}

TEST_CASE("power sum polynomial extends the direct sum") {
  Sampler rng(22);
  for (int trial = 0; trial < 30; ++trial) {
    const PowerSumSpec spec = rng.power_sum_spec(1, 9);
    CAPTURE(spec.a);
    CAPTURE(spec.b);
    CAPTURE(spec.k);
    const Polynomial s = power_sum_polynomial(spec);
    CHECK(s.degree() == spec.k + 1);
    CHECK(s.coeff(0) == 0);
    for (unsigned n = 0; n <= 25; ++n) {
      const Integer direct = naive_sum(spec.a, spec.b, spec.k, n);
      CHECK(power_sum_direct(spec, n) == direct);
      CHECK(evaluate(s, Rational(n)) == Rational(direct));
    }
    // S(x + 1) - S(x) = (a x + b)^k on all of Q
    const Polynomial step = compose(s, Polynomial{Rational(1), Rational(1)}) - s;
    CHECK(step == pow(Polynomial{from_int(spec.b), from_int(spec.a)}, spec.k));
  }
  CHECK_THROWS_AS(validate(PowerSumSpec{2, 4, 3}), std::invalid_argument);
  CHECK_THROWS_AS(validate(PowerSumSpec{0, 1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(validate(PowerSumSpec{1, 0, 0}), std::invalid_argument);
}

TEST_CASE("odd squares and the two Dickson bridging identities") {
  CHECK(power_sum_polynomial({2, 1, 2}) == Polynomial{Rational(0), frac(-1, 3), Rational(0), frac(4, 3)});
  CHECK(power_sum_polynomial({2, 1, 2}) == dickson_polynomial({3, frac(1, 12)}) * frac(4, 3));
  CHECK(power_sum_polynomial({2, 1, 3}) ==
        dickson_polynomial({4, frac(1, 8)}) * Rational(2) - Polynomial::constant(frac(1, 16)));
}

TEST_CASE("hat power sum recovers the odd power sum") {
  Sampler rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const auto [a, b] = rng.coprime_pair();
    const unsigned v = static_cast<unsigned>(rng.uniform(1, 6));
    const Polynomial h = hat_power_sum(v, a, b);
    CHECK(h.degree() == v);
    const Polynomial inner = pow(Polynomial{frac(b, a) - frac(1, 2), Rational(1)}, 2);
    CHECK(compose(h, inner) == power_sum_polynomial({a, b, 2 * v - 1}));
  }
}

TEST_CASE("Bernoulli cache is consistent under concurrent first use") {
  std::vector<Rational> seen(8);
  std::vector<std::thread> pool;
  for (std::size_t i = 0; i < seen.size(); ++i) {
    pool.emplace_back([&seen, i] { seen[i] = bernoulli_number(40); });
  }
  for (auto& t : pool) t.join();
  const auto oracle = bernoulli_from_series(40);
  for (const auto& v : seen) CHECK(v == oracle[40]);
}
