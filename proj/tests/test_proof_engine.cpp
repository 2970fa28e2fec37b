#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "psd/proof_engine.hpp"
#include "psd/sampling.hpp"
#include "psd/special_polys.hpp"

using namespace psd;

namespace {

std::string forced(const Report& r, const std::string& key) {
  for (const auto& [k, v] : r.forced_values) {
    if (k == key) return v;
  }
  return {};
}

// Residual at index 2k-2 from full expansions: pick c^{2k+1}/a^k and beta
// from the top and index-2k equations, realize beta as b/a, then subtract
// and scale by A^(k-1).
Rational residual_by_expansion(unsigned k, const Rational& A, const Rational& B) {
  const Rational gamma = 2 * pow(A, k + 1);
  // A^k B + A^k (2 beta - 1)/2 = -gamma (2k+1)/24
  const Rational beta = (-gamma * (2 * k + 1) / 24 / pow(A, k) - B) + frac(1, 2);
  const Integer a = beta.get_den();
  const Integer b = beta.get_num();
  const PowerSumSpec spec{a.get_si(), b.get_si(), k};
  const Polynomial lhs = compose(power_sum_polynomial(spec), Polynomial{B, Rational(0), A});
  const Rational ak = pow(Rational(a), k);
  CHECK(lhs.coeff(2 * k + 2) / ak == gamma / (2 * k + 2));
  CHECK(lhs.coeff(2 * k) / ak == -gamma * (2 * k + 1) / 24);
  const Rational r2km2 = 7 * gamma * (2 * k + 1) * k * (2 * k - 1) / 2880;
  return (lhs.coeff(2 * k - 2) / ak - r2km2) / pow(A, k - 1);
}

}  // namespace

TEST_CASE("right-side closed forms agree with expansion") {
  Sampler rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const auto [c, d] = rng.coprime_pair();
    const unsigned k = static_cast<unsigned>(rng.uniform(2, 12));
    const Polynomial full = affine_substitute(power_sum_polynomial({c, d, 2 * k + 1}), Rational(1),
                                              frac(1, 2) - frac(d, c));
    const EvenTopCoeffs r = rhs_coeffs(c, d, k);
    CHECK(r.top == full.coeff(2 * k + 2));
    CHECK(r.odd == full.coeff(2 * k + 1));
    CHECK(r.c2k == full.coeff(2 * k));
    CHECK(r.c2km2 == full.coeff(2 * k - 2));
    // the shifted sum is even
    for (std::size_t i = 1; i <= 2 * k + 2; i += 2) CHECK(full.coeff(i) == 0);
  }
}

TEST_CASE("left-side closed forms agree with expansion") {
  Sampler rng(52);
  for (int trial = 0; trial < 100; ++trial) {
    const PowerSumSpec spec = rng.power_sum_spec(2, 12);
    const Rational A = rng.nonzero_rational();
    const Rational B = rng.rational();
    const Polynomial full = compose(power_sum_polynomial(spec), Polynomial{B, Rational(0), A});
    const EvenTopCoeffs t = lhs_coeffs(spec, A, B);
    const unsigned k = spec.k;
    CHECK(t.top == full.coeff(2 * k + 2));
    CHECK(t.odd == full.coeff(2 * k + 1));
    CHECK(t.c2k == full.coeff(2 * k));
    CHECK(t.c2km2 == full.coeff(2 * k - 2));
  }
}

TEST_CASE("even-shape residual is B-independent and vanishes only on A^2 (2k+1)(3-k) = 15") {
  Sampler rng(53);
  for (unsigned k = 2; k <= 12; ++k) {
    CAPTURE(k);
    const Report r = theorem2_contradiction(k);
    CHECK(r.all_verified());
    CHECK(r.verdict == "contradiction");
    for (int i = 0; i < 5; ++i) {
      const Rational A = rng.nonzero_rational(5, 5);
      const Rational B1 = rng.rational();
      const Rational B2 = rng.rational();
      const Rational res = theorem2_residual(k, A, B1);
      CHECK(res == theorem2_residual(k, A, B2));
      CHECK(res == k * (A * A * (2 * k + 1) * (3 - static_cast<int>(k)) / 360 - frac(1, 24)));
      CHECK(res == residual_by_expansion(k, A, B1));
    }
  }
  CHECK(forced(theorem2_contradiction(2), "A^2") == "3/1");
  CHECK(forced(theorem2_contradiction(3), "equation") == "0 = 15");
  CHECK(forced(theorem2_contradiction(4), "A^2") == "-5/3");
  CHECK_THROWS_AS(theorem2_contradiction(1), std::invalid_argument);
}

TEST_CASE("linear power sum completes to a square") {
  Sampler rng(54);
  for (int trial = 0; trial < 50; ++trial) {
    const auto [a, b] = rng.coprime_pair();
    const Thm1Reduction r = thm1_reduction(a, b);
    CHECK(r.report.all_verified());
    const Polynomial lin{from_int(2 * b - a), from_int(2 * a)};
    const Rational shift = from_int(2 * b - a);
    CHECK(power_sum_polynomial({a, b, 1}) * from_int(8 * a) == pow(lin, 2) - Polynomial::constant(shift * shift));
  }
  const Thm1Reduction with_rhs = thm1_reduction(2, 1, PowerSumSpec{1, 0, 3});
  REQUIRE(with_rhs.rhs_in_y.has_value());
  CHECK(*with_rhs.rhs_in_y == power_sum_polynomial({1, 0, 3}) * Rational(16));
}

TEST_CASE("cubic power sum: quartic form and exact square completion") {
  Sampler rng(55);
  for (int trial = 0; trial < 50; ++trial) {
    const auto [a, b] = rng.coprime_pair();
    CAPTURE(a);
    CAPTURE(b);
    const Thm3Reduction r = thm3_reduction(a, b);
    CHECK(r.report.all_verified());
    const Polynomial s3 = power_sum_polynomial({a, b, 3});
    CHECK(affine_substitute(s3, Rational(1), frac(1, 2) - frac(b, a)) == r.quartic);
    CHECK(r.quartic.coeff(0) == r.representation_constant);
    const Rational A(a);
    const Rational B(b);
    CHECK(r.K == 16 * B * B * (A - B) * (A - B));
    CHECK(r.s == A * A);
    const Polynomial X = pow(Polynomial{from_int(2 * b - a), from_int(2 * a)}, 2);
    CHECK(s3 * from_int(64 * a) + Polynomial::constant(r.K) == pow(X - Polynomial::constant(r.s), 2));
  }
  const Thm3Reduction at21 = thm3_reduction(2, 1);
  CHECK(at21.K == 16);
  CHECK(at21.s == 4);
  CHECK_FALSE(at21.displayed_constants_hold);
}

TEST_CASE("deg phi case split") {
  for (unsigned k = 2; k <= 8; ++k) {
    for (unsigned l = k + 1; l <= 2 * k + 3; ++l) {
      const Report r = degphi_case_split(k, l);
      CHECK(r.all_verified());
      CHECK(r.verdict == (k == 2 && l == 3 ? "effective-case" : "finite"));
      if (l == 2 * k + 1) CHECK(forced(r, "deg phi > 1").find("theorem2_contradiction") != std::string::npos);
    }
  }
  CHECK_THROWS_AS(degphi_case_split(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(degphi_case_split(1, 3), std::invalid_argument);
}

TEST_CASE("coefficient bundle serializes exactly") {
  const Json j = to_json(rhs_coeffs(1, 0, 2));
  CHECK(j.dump().find('.') == std::string::npos);
}
