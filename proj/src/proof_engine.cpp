#include "psd/proof_engine.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "psd/decomposition.hpp"
#include "psd/multivariate.hpp"
#include "psd/standard_pairs.hpp"

namespace psd {

namespace {

void require_k(unsigned k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
}

void require_coprime(std::int64_t a, std::int64_t b) { validate(PowerSumSpec{a, b, 1}); }

}  // namespace

EvenTopCoeffs rhs_coeffs(std::int64_t c, std::int64_t d, unsigned k) {
  require_coprime(c, d);
  require_k(k);
  const Rational ck = pow(from_int(c), 2 * k + 1);
  EvenTopCoeffs out;
  out.top = ck / (2 * k + 2);
  out.odd = 0;
  out.c2k = -ck * (2 * k + 1) / 24;
  out.c2km2 = 7 * ck * ((2 * k + 1) * k * (2 * k - 1)) / 2880;
  return out;
}

EvenTopCoeffs lhs_coeffs(const PowerSumSpec& spec, const Rational& A, const Rational& B) {
  validate(spec);
  require_k(spec.k);
  if (is_zero(A)) throw std::invalid_argument("lhs_coeffs: A must be nonzero");
  const unsigned k = spec.k;
  const Rational ak = pow(from_int(spec.a), k);
  const Rational beta = frac(spec.b, spec.a);
  const Rational akk = pow(A, k);
  const Rational akm1 = pow(A, k - 1);
  EvenTopCoeffs out;
  out.top = ak * pow(A, k + 1) / (k + 1);
  out.odd = 0;
  out.c2k = ak * akk * B + ak * akk * (2 * beta - 1) / 2;
  out.c2km2 = ak * k * akm1 * B * B / 2 + ak * k * akm1 * B * (2 * beta - 1) / 2 +
              ak * k * akm1 * (6 * beta * beta - 6 * beta + 1) / 12;
  return out;
}

Thm2Coeffs thm2_coeffs(const PowerSumSpec& lhs, std::int64_t c, std::int64_t d, const Rational& A,
                       const Rational& B) {
  Thm2Coeffs out;
  out.k = lhs.k;
  out.A = A;
  out.B = B;
  out.rhs = rhs_coeffs(c, d, lhs.k);
  out.lhs = lhs_coeffs(lhs, A, B);
  return out;
}

namespace {

// Variables of the symbolic layer.
constexpr std::size_t kX = 0;
constexpr std::size_t kA = 1;
constexpr std::size_t kB = 2;
constexpr std::size_t kBeta = 3;
constexpr std::size_t kVars = 4;

const std::vector<std::string>& names() {
  static const std::vector<std::string> n{"x", "A", "B", "beta"};
  return n;
}

MultiPoly var(std::size_t i) { return MultiPoly::variable(kVars, i); }
MultiPoly cst(const Rational& c) { return MultiPoly::constant(kVars, c); }

struct SymbolicSides {
  MultiPoly lhs{kVars};  // S_{a,b}^k(A x^2 + B) / a^k
  Polynomial rhs;        // S_{c,d}^{2k+1}(x - d/c + 1/2) / c^{2k+1}, up to its constant term
};

SymbolicSides symbolic_sides(unsigned k) {
  SymbolicSides sides;
  const Polynomial bern = bernoulli_polynomial(k + 1);
  const MultiPoly arg = var(kA) * var(kX) * var(kX) + var(kB) + var(kBeta);
  sides.lhs = (compose(bern, arg) - compose(bern, var(kBeta))) * frac(1, k + 1);
  sides.rhs = affine_substitute(bernoulli_polynomial(2 * k + 2), Rational(1), frac(1, 2)) / (2 * k + 2);
  return sides;
}

// c^{2k+1}/a^k forced by the leading coefficients.
MultiPoly leading_ratio(const SymbolicSides& sides, unsigned k) {
  return sides.lhs.coefficient(kX, 2 * k + 2) * (Rational(1) / sides.rhs.coeff(2 * k + 2));
}

MultiPoly residual_at(const SymbolicSides& sides, const MultiPoly& gamma, unsigned index) {
  return sides.lhs.coefficient(kX, index) - gamma * sides.rhs.coeff(index);
}

MultiPoly beta_from_index_2k(unsigned k) {
  return cst(frac(1, 2)) - var(kA) * frac(2 * k + 1, 12) - var(kB);
}

MultiPoly residual_2km2_eliminated(unsigned k) {
  const SymbolicSides sides = symbolic_sides(k);
  const MultiPoly gamma = leading_ratio(sides, k);
  return residual_at(sides, gamma, 2 * k - 2).substitute(kBeta, beta_from_index_2k(k));
}

}  // namespace

Report theorem2_contradiction(unsigned k) {
  require_k(k);
  Report report;
  report.lemma = "theorem2";
  report.inputs = {{"k", std::to_string(k)}, {"l", std::to_string(2 * k + 1)}};

  const SymbolicSides sides = symbolic_sides(k);

  // Sanity: the normalized right side really is S_{c,d}^{2k+1} shifted, for a
  // couple of concrete (c, d).
  for (auto [c, d] : {std::pair<std::int64_t, std::int64_t>{1, 0}, {3, 2}}) {
    const Polynomial shifted = affine_substitute(power_sum_polynomial({c, d, 2 * k + 1}), Rational(1),
                                                 frac(1, 2) - frac(d, c));
    Polynomial expected = sides.rhs * pow(from_int(c), 2 * k + 1);
    expected -= Polynomial::constant(expected.coeff(0));
    report.check("right side normalization at (c, d) = (" + std::to_string(c) + ", " + std::to_string(d) + ")",
                 shifted - Polynomial::constant(shifted.coeff(0)), expected);
  }

  bool odd_vanish = true;
  for (unsigned j = 1; j < 2 * k + 2; j += 2) {
    odd_vanish = odd_vanish && sides.lhs.coefficient(kX, j).is_zero() && is_zero(sides.rhs.coeff(j));
  }
  report.check("all odd-index coefficients vanish on both sides (r_{2k+1} = t_{2k+1} = 0)", odd_vanish);

  // index 2k+2
  const MultiPoly gamma = leading_ratio(sides, k);
  const MultiPoly leading_constraint = pow(var(kA), k + 1) * Rational(2);
  report.check("index 2k+2: c^{2k+1} = 2 a^k A^{k+1}", gamma == leading_constraint);
  report.forced_values.emplace_back("c^{2k+1}/a^k", gamma.to_string(names()));

  // index 2k
  const MultiPoly t2k_display = pow(var(kA), k) * var(kB) + pow(var(kA), k) * (var(kBeta) * Rational(2) - cst(1)) * frac(1, 2);
  report.check("t_{2k}/a^k matches A^k B + A^k (2 beta - 1)/2", sides.lhs.coefficient(kX, 2 * k) == t2k_display);
  const MultiPoly res2k = residual_at(sides, gamma, 2 * k).divide_by_power(kA, k);
  const bool linear_in_beta = res2k.degree_in(kBeta) == 1 && res2k.coefficient(kBeta, 1).degree_in(kA) == 0 &&
                              res2k.coefficient(kBeta, 1).degree_in(kB) == 0;
  report.check("index 2k residual / A^k is linear in beta with constant slope", linear_in_beta);
  MultiPoly beta_forced(kVars);
  if (linear_in_beta) {
    const Rational slope = res2k.coefficient(kBeta, 1).evaluate({0, 0, 0, 0});
    beta_forced = res2k.coefficient(kBeta, 0) * (Rational(-1) / slope);
  }
  report.forced_values.emplace_back("beta", beta_forced.to_string(names()));
  report.check("index 2k: b/a - 1/2 = -A(2k+1)/12 - B", beta_forced == beta_from_index_2k(k));

  // index 2k-2
  const MultiPoly akm1 = pow(var(kA), k - 1);
  const MultiPoly beta = var(kBeta);
  const MultiPoly t2km2_display =
      akm1 * var(kB) * var(kB) * frac(k, 2) + akm1 * var(kB) * (beta * Rational(2) - cst(1)) * frac(k, 2) +
      akm1 * (beta * beta * Rational(6) - beta * Rational(6) + cst(1)) * frac(k, 12);
  report.check("t_{2k-2}/a^k matches the B^2, B and constant terms", sides.lhs.coefficient(kX, 2 * k - 2) == t2km2_display);

  const MultiPoly residual = residual_at(sides, gamma, 2 * k - 2).substitute(kBeta, beta_from_index_2k(k)).divide_by_power(kA, k - 1);
  report.check("index 2k-2 residual is independent of B", residual.degree_in(kB) == 0);
  report.forced_values.emplace_back("residual(A)", residual.to_string(names()));

  const Integer factor = Integer(2 * k + 1) * (Integer(3) - Integer(k));
  const Polynomial target{Rational(-15), Rational(0), Rational(factor)};
  Polynomial in_a;
  bool univariate = residual.degree_in(kB) == 0 && residual.degree_in(kBeta) == 0 && residual.degree_in(kX) == 0;
  if (univariate) in_a = residual.as_univariate(kA);
  const bool proportional = univariate && !is_zero(in_a.coeff(0)) && in_a * (Rational(-15) / in_a.coeff(0)) == target;
  report.check("residual is a nonzero multiple of A^2 (2k+1)(3-k) - 15", proportional);

  if (factor == 0) {
    report.forced_values.emplace_back("equation", "0 = 15");
    report.check("(k-3) factor vanishes, leaving 0 = 15", target.coeff(0) != 0);
    report.contradiction = "k = 3 reduces the comparison to 0 = 15";
  } else {
    const Rational a_squared = Rational(15) / Rational(factor);
    report.forced_values.emplace_back("A^2", to_string(a_squared));
    if (sgn(a_squared) < 0) {
      report.check("forced A^2 is negative", sgn(a_squared) < 0);
      report.contradiction = "k >= 4 forces A^2 = " + to_string(a_squared) + " < 0";
    } else {
      report.check("forced A^2 is not a rational square", !is_rational_square(a_squared));
      report.contradiction = "k = 2 forces A^2 = " + to_string(a_squared) + ", not the square of a rational";
    }
  }
  report.verdict = report.all_verified() ? "contradiction" : "counterexample";
  return report;
}

Rational theorem2_residual(unsigned k, const Rational& A, const Rational& B) {
  require_k(k);
  if (is_zero(A)) throw std::invalid_argument("theorem2_residual: A must be nonzero");
  return residual_2km2_eliminated(k).divide_by_power(kA, k - 1).evaluate({Rational(0), A, B, Rational(0)});
}

Thm1Reduction thm1_reduction(std::int64_t a, std::int64_t b, const std::optional<PowerSumSpec>& rhs) {
  const PowerSumSpec spec{a, b, 1};
  validate(spec);
  Thm1Reduction out;
  Report& report = out.report;
  report.lemma = "thm1-reduction";
  report.inputs = {{"a", std::to_string(a)}, {"b", std::to_string(b)}};

  const Rational ra = from_int(a);
  const Rational rb = from_int(b);
  const Polynomial s1 = power_sum_polynomial(spec);
  report.check("S_{a,b}^1(x) = a x^2/2 + (b - a/2) x", s1, Polynomial{Rational(0), rb - ra / 2, ra / 2});

  out.scaled_sum = s1 * (8 * ra);
  const Rational offset = 2 * rb - ra;
  out.completed_square = pow(Polynomial{offset, 2 * ra}, 2) - Polynomial::constant(offset * offset);
  report.check("8a S_{a,b}^1(x) = (2ax + 2b - a)^2 - (2b - a)^2", out.scaled_sum, out.completed_square);

  if (rhs) {
    validate(*rhs);
    report.inputs.emplace_back("rhs", "(" + std::to_string(rhs->a) + ", " + std::to_string(rhs->b) + ", " +
                                          std::to_string(rhs->k) + ")");
    const unsigned l = rhs->k;
    const Polynomial bern = bernoulli_polynomial(l + 1);
    const Rational shift = frac(rhs->b, rhs->a);
    Polynomial assembled = affine_substitute(bern, Rational(1), shift) - Polynomial::constant(evaluate(bern, shift));
    assembled *= 8 * ra * pow(from_int(rhs->a), l) / (l + 1);
    report.check("assembled right side equals 8a S_{c,d}^l(y)", assembled, power_sum_polynomial(*rhs) * (8 * ra));
    out.rhs_in_y = std::move(assembled);
  }
  report.verdict = report.all_verified() ? "verified" : "counterexample";
  return out;
}

Thm3Reduction thm3_reduction(std::int64_t a, std::int64_t b, const std::optional<PowerSumSpec>& rhs) {
  const PowerSumSpec spec{a, b, 3};
  validate(spec);
  Thm3Reduction out;
  Report& report = out.report;
  report.lemma = "thm3-reduction";
  report.inputs = {{"a", std::to_string(a)}, {"b", std::to_string(b)}};

  const Rational ra = from_int(a);
  const Rational rb = from_int(b);
  const Polynomial s3 = power_sum_polynomial(spec);

  // u = x + b/a - 1/2
  out.quartic = affine_substitute(s3, Rational(1), frac(1, 2) - frac(b, a));
  const Rational a3 = pow(ra, 3);
  const Rational a4 = pow(ra, 4);
  out.representation_constant =
      (a4 - 16 * ra * ra * rb * rb + 32 * ra * pow(rb, 3) - 16 * pow(rb, 4)) / (64 * ra);
  const Polynomial expected_quartic{out.representation_constant, Rational(0), -a3 / 8, Rational(0), a3 / 4};
  report.check("S_{a,b}^3 = a^3/4 u^4 - a^3/8 u^2 + (a^4 - 16a^2b^2 + 32ab^3 - 16b^4)/(64a)", out.quartic,
               expected_quartic);

  // Expand 64a S in powers of X and complete the square.
  const Polynomial scaled = s3 * (64 * ra);
  const Polynomial big_x = pow(Polynomial{2 * rb - ra, 2 * ra}, 2);
  const auto in_x = expand_in_powers_of(scaled, big_x);
  const bool quadratic_in_x = in_x.has_value() && in_x->degree() == Degree(2) && in_x->lead() == 1;
  report.check("64a S_{a,b}^3(x) is a monic quadratic in X = (2ax + 2b - a)^2", quadratic_in_x);
  if (quadratic_in_x) {
    out.s = -in_x->coeff(1) / 2;
    out.K = out.s * out.s - in_x->coeff(0);
  }
  report.forced_values.emplace_back("s", to_string(out.s));
  report.forced_values.emplace_back("K", to_string(out.K));
  const Polynomial completed = pow(big_x - Polynomial::constant(out.s), 2);
  report.check("64a S_{a,b}^3(x) + K = (X - s)^2", scaled + Polynomial::constant(out.K), completed);
  report.check("s = a^2", out.s, a4 / (ra * ra));
  report.check("K = 16 b^2 (a - b)^2", out.K, 16 * rb * rb * (ra - rb) * (ra - rb));

  const Rational displayed_k = 3 * a4 + 16 * ra * ra * rb * rb - 32 * ra * pow(rb, 3) - 16 * pow(rb, 4);
  const Rational displayed_s = 2 * ra * ra;
  out.displayed_constants_hold =
      scaled + Polynomial::constant(displayed_k) == pow(big_x - Polynomial::constant(displayed_s), 2);
  report.forced_values.emplace_back("displayed K", to_string(displayed_k));
  report.forced_values.emplace_back("displayed s", to_string(displayed_s));
  report.forced_values.emplace_back("displayed completion holds", out.displayed_constants_hold ? "true" : "false");
  if (!out.displayed_constants_hold) {
    report.forced_values.emplace_back(
        "discrepancy", "64a S + 3a^4 + 16a^2b^2 - 32ab^3 - 16b^4 = (X - 2a^2)^2 does not hold; exact completion is "
                       "64a S + " + to_string(out.K) + " = (X - " + to_string(out.s) + ")^2");
  }

  if (rhs) {
    validate(*rhs);
    report.inputs.emplace_back("rhs", "(" + std::to_string(rhs->a) + ", " + std::to_string(rhs->b) + ", " +
                                          std::to_string(rhs->k) + ")");
    out.rhs_in_y = power_sum_polynomial(*rhs) * (64 * ra) + Polynomial::constant(out.K);
  }
  report.verdict = report.all_verified() ? "verified" : "counterexample";
  return out;
}

Report degphi_case_split(unsigned k, unsigned l) {
  if (k < 2 || k >= l) throw std::invalid_argument("degphi_case_split needs 2 <= k < l");
  Report report;
  report.lemma = "degphi-case-split";
  report.inputs = {{"k", std::to_string(k)}, {"l", std::to_string(l)}};

  // deg phi = h > 1: the inner components f, g of the power sums have degree
  // 1 or 2 (the only nontrivial decomposition has a quadratic inner), with
  // (k+1) = h deg f and (l+1) = h deg g.
  std::vector<std::pair<unsigned, unsigned>> admissible;
  for (unsigned df = 1; df <= 2; ++df) {
    for (unsigned dg = 1; dg <= 2; ++dg) {
      if ((k + 1) % df != 0 || (l + 1) % dg != 0) continue;
      const unsigned h = (k + 1) / df;
      if (h > 1 && (l + 1) / dg == h) admissible.emplace_back(df, dg);
    }
  }
  const bool branch_open = !admissible.empty();
  report.check("deg phi > 1 admits only (deg f, deg g) = (1, 2)",
               !branch_open || (admissible.size() == 1 && admissible.front() == std::pair<unsigned, unsigned>{1, 2}));
  if (branch_open) {
    const unsigned h = k + 1;
    report.forced_values.emplace_back("h", std::to_string(h));
    report.check("l + 1 = 2h gives l = 2k + 1", l == 2 * k + 1);
    report.check("l >= 5", l >= 5);
    const Report thm2 = theorem2_contradiction(k);
    report.check("theorem2_contradiction(" + std::to_string(k) + ") closes the branch", thm2.all_verified());
    report.forced_values.emplace_back("deg phi > 1", "routed to theorem2_contradiction(" + std::to_string(k) + ")");
  } else {
    report.forced_values.emplace_back("deg phi > 1", "impossible: l + 1 != 2(k + 1)");
  }

  // deg phi = 1: (f, g) has degrees (k+1, l+1).
  report.check("second kind excluded: both degrees exceed 2", k + 1 > 2 && l + 1 > 2);
  report.forced_values.emplace_back("second kind", "excluded by degree");

  if (k == 3 && l == 5) {
    const Report fifth = fifth_kind_reject(1, 0);
    report.check("fifth kind rejected for (k, l) = (3, 5)", fifth.all_verified());
    report.forced_values.emplace_back("fifth kind", "rejected by fifth_kind_reject");
  } else {
    report.forced_values.emplace_back("fifth kind", "excluded: degrees are not (4, 6)");
  }

  const Report l1k = lemma1_reject({1, 0, k}, Rational(1), Rational(0));
  const Report l1l = lemma1_reject({1, 0, l}, Rational(1), Rational(0));
  report.check("first kind rejected (lemma1) on both sides", l1k.all_verified() && l1l.all_verified());
  report.forced_values.emplace_back("first kind", "rejected by lemma1_reject");

  if (l + 1 >= 5) {
    const Report l2 = lemma2_reject({1, 0, l}, Rational(1), frac(1, 2), Rational(1));
    report.check("third/fourth kind rejected (lemma2) with m = l + 1 >= 5", l2.all_verified());
    report.forced_values.emplace_back("third/fourth kind", "rejected by lemma2_reject");
    report.verdict = report.all_verified() ? "finite" : "counterexample";
  } else {
    report.check("residual case is (k, l) = (2, 3)", k == 2 && l == 3);
    report.forced_values.emplace_back("third/fourth kind",
                                      "effective case (k, l) = (2, 3): handled by the cubic hyperelliptic reduction");
    report.verdict = report.all_verified() ? "effective-case" : "counterexample";
  }
  return report;
}

Json to_json(const EvenTopCoeffs& c) {
  Json out;
  out["top"] = to_string(c.top);
  out["odd"] = to_string(c.odd);
  out["index_2k"] = to_string(c.c2k);
  out["index_2k-2"] = to_string(c.c2km2);
  return out;
}

}  // namespace psd
