#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "psd/sampling.hpp"
#include "psd/shifted_coeffs.hpp"
#include "psd/special_polys.hpp"
#include "psd/standard_pairs.hpp"

using namespace psd;

namespace {

Rational factorial(unsigned n) {
  Rational f(1);
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("realized pairs have the listed shapes") {
  const Polynomial p{Rational(1), Rational(1)};
  auto [f1, g1] = realize(FirstKind{3, 1, p, Rational(2), false});
  CHECK(f1 == Polynomial::monomial(Rational(1), 3));
  CHECK(g1 == Polynomial::x() * pow(p, 3) * Rational(2));

  auto [f2, g2] = realize(SecondKind{Rational(1), Rational(-1), p, true});
  CHECK(g2 == Polynomial::monomial(Rational(1), 2));
  CHECK(f2 == Polynomial{Rational(-1), Rational(0), Rational(1)} * pow(p, 2));

  auto [f3, g3] = realize(ThirdKind{2, 3, Rational(2)});
  CHECK(f3 == dickson_polynomial({2, Rational(8)}));
  CHECK(g3 == dickson_polynomial({3, Rational(4)}));

  auto [f5, g5] = realize(FifthKind{Rational(1), false});
  CHECK(f5 == pow(Polynomial{Rational(-1), Rational(0), Rational(1)}, 3));
  CHECK(g5 == Polynomial{Rational(0), Rational(0), Rational(0), Rational(-4), Rational(3)});
  CHECK(kind_of(StandardPair{FifthKind{}}) == PairKind::fifth);
}

TEST_CASE("validation names violated conditions") {
  CHECK_THROWS_AS(validate(StandardPair{ThirdKind{2, 4, Rational(1)}}), std::invalid_argument);
  CHECK_THROWS_AS(validate(StandardPair{FourthKind{3, 5, Rational(1), Rational(1)}}), std::invalid_argument);
  CHECK_NOTHROW(validate(StandardPair{FourthKind{2, 4, Rational(1), Rational(1)}}));
  CHECK_THROWS_AS(LinearForm(Rational(0), Rational(1)), std::invalid_argument);
}

TEST_CASE("rational roots of low degree") {
  CHECK(rational_roots_low_degree(Polynomial{Rational(-6), Rational(1), Rational(1)}) ==
        std::vector<Rational>{Rational(-3), Rational(2)});
  // 6t^2 - 6t + 1 has discriminant 12
  CHECK(rational_roots_low_degree(Polynomial{Rational(1), Rational(-6), Rational(6)}).empty());
  CHECK(rational_roots_low_degree(Polynomial{Rational(1), Rational(2)}) == std::vector<Rational>{frac(-1, 2)});
  CHECK_THROWS_AS(rational_roots_low_degree(Polynomial::monomial(Rational(1), 3)), std::invalid_argument);
}

TEST_CASE("closed-form shifted coefficients agree with expansion") {
  Sampler rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const PowerSumSpec spec = rng.power_sum_spec(2, 12);
    const Rational c1 = rng.nonzero_rational();
    const Rational c0 = rng.rational();
    const Polynomial full = affine_substitute(power_sum_polynomial(spec), c1, c0);
    const ShiftedCoeffs sc = shifted_coeffs(spec, c1, c0);
    const unsigned k = spec.k;
    CHECK(sc.s_top == full.coeff(k + 1));
    CHECK(sc.s_k == full.coeff(k));
    CHECK(sc.s_km1 == full.coeff(k - 1));
    CHECK(sc.s_km3.has_value() == (k >= 4));
    if (sc.s_km3) CHECK(*sc.s_km3 == full.coeff(k - 3));
    CHECK(sc.c0prime == frac(spec.b, spec.a) + c0);
  }
  CHECK_THROWS_AS(shifted_coeffs({1, 0, 3}, Rational(0), Rational(1)), std::invalid_argument);
}

TEST_CASE("coefficient of x^j as a polynomial in the offset") {
  Sampler rng(42);
  const Polynomial p = rng.polynomial(6);
  const Rational c1 = rng.nonzero_rational();
  for (std::size_t j = 0; j <= 6; ++j) {
    const Polynomial as_c0 = shift_coefficient_in_offset(p, j, c1);
    for (int i = 0; i < 3; ++i) {
      const Rational c0 = rng.rational();
      CHECK(evaluate(as_c0, c0) == affine_substitute(p, c1, c0).coeff(j));
    }
  }
  // Taylor oracle at j = 2
  const Rational c0 = frac(3, 7);
  CHECK(evaluate(shift_coefficient_in_offset(p, 2, c1), c0) ==
        c1 * c1 * evaluate(derivative(derivative(p)), c0) / factorial(2));
}

TEST_CASE("no affine shift of a power sum is a pure power plus a constant") {
  Sampler rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    const PowerSumSpec spec = rng.power_sum_spec(2, 12);
    const Report r = lemma1_reject(spec, rng.nonzero_rational(), rng.rational());
    CHECK(r.verdict == "rejected");
    CHECK(r.all_verified());
  }
}

TEST_CASE("Dickson shapes are rejected for m > 4 and refused for m <= 4") {
  Sampler rng(44);
  for (unsigned m = 5; m <= 30; ++m) {
    const auto [a, b] = rng.coprime_pair();
    const Report r = lemma2_reject({a, b, m - 1}, rng.nonzero_rational(), rng.rational(), rng.nonzero_rational());
    CHECK(r.verdict == "rejected");
    CHECK(r.all_verified());
  }
  // genuine identities exist below the threshold
  CHECK_THROWS_AS(lemma2_reject({2, 1, 2}, Rational(1), Rational(0), frac(1, 12)), std::invalid_argument);
  CHECK_THROWS_AS(lemma2_reject({2, 1, 3}, Rational(1), Rational(0), frac(1, 8)), std::invalid_argument);
}

TEST_CASE("fifth kind never matches a cubic power sum") {
  Sampler rng(45);
  for (int trial = 0; trial < 10; ++trial) {
    const auto [a, b] = rng.coprime_pair();
    const Report r = fifth_kind_reject(a, b);
    CHECK(r.verdict == "rejected");
    CHECK(r.all_verified());
  }
}

TEST_CASE("report JSON carries the verdict and steps") {
  const Json j = to_json(fifth_kind_reject(1, 0));
  CHECK(j["lemma"] == "fifth-kind");
  CHECK(j["verdict"] == "rejected");
  CHECK_FALSE(j["steps"].empty());
}
