#include "psd/standard_pairs.hpp"

#include <numeric>
#include <stdexcept>

#include "psd/shifted_coeffs.hpp"

namespace psd {

std::string to_string(PairKind kind) {
  switch (kind) {
    case PairKind::first: return "first";
    case PairKind::second: return "second";
    case PairKind::third: return "third";
    case PairKind::fourth: return "fourth";
    case PairKind::fifth: return "fifth";
  }
  return "unknown";
}

PairKind kind_of(const StandardPair& sp) { return static_cast<PairKind>(sp.index()); }

namespace {

void require(bool condition, const std::string& what) {
  if (!condition) throw std::invalid_argument("standard pair: " + what);
}

struct Validator {
  void operator()(const FirstKind& p) const {
    require(p.m >= 1, "first kind needs m >= 1");
    require(p.r < p.m, "first kind needs 0 <= r < m");
    require(std::gcd(p.r, p.m) == 1, "first kind needs gcd(r, m) = 1");
    require(!p.p.is_zero(), "first kind needs p nonzero");
    require(p.r + *p.p.degree() > 0, "first kind needs r + deg p > 0");
    require(!is_zero(p.a), "first kind needs a nonzero");
  }
  void operator()(const SecondKind& p) const {
    require(!is_zero(p.a) && !is_zero(p.b), "second kind needs a, b nonzero");
    require(!p.p.is_zero(), "second kind needs p nonzero");
  }
  void operator()(const ThirdKind& p) const {
    require(p.m >= 1 && p.n >= 1, "third kind needs m, n >= 1");
    require(std::gcd(p.m, p.n) == 1, "third kind needs gcd(m, n) = 1");
    require(!is_zero(p.a), "third kind needs a nonzero");
  }
  void operator()(const FourthKind& p) const {
    require(p.m >= 1 && p.n >= 1, "fourth kind needs m, n >= 1");
    require(std::gcd(p.m, p.n) == 2, "fourth kind needs gcd(m, n) = 2");
    require(!is_zero(p.a) && !is_zero(p.b), "fourth kind needs a, b nonzero");
  }
  void operator()(const FifthKind& p) const { require(!is_zero(p.a), "fifth kind needs a nonzero"); }
};

std::pair<Polynomial, Polynomial> maybe_swap(Polynomial f, Polynomial g, bool switched) {
  if (switched) return {std::move(g), std::move(f)};
  return {std::move(f), std::move(g)};
}

struct Realizer {
  std::pair<Polynomial, Polynomial> operator()(const FirstKind& p) const {
    Polynomial g = Polynomial::monomial(p.a, p.r) * pow(p.p, p.m);
    return maybe_swap(Polynomial::monomial(Rational(1), p.m), std::move(g), p.switched);
  }
  std::pair<Polynomial, Polynomial> operator()(const SecondKind& p) const {
    Polynomial g = Polynomial{p.b, Rational(0), p.a} * pow(p.p, 2);
    return maybe_swap(Polynomial::monomial(Rational(1), 2), std::move(g), p.switched);
  }
  std::pair<Polynomial, Polynomial> operator()(const ThirdKind& p) const {
    return {dickson_polynomial({p.m, pow(p.a, p.n)}), dickson_polynomial({p.n, pow(p.a, p.m)})};
  }
  std::pair<Polynomial, Polynomial> operator()(const FourthKind& p) const {
    // m and n are even here, so the half powers are integral
    Polynomial f = dickson_polynomial({p.m, p.a}) / pow(p.a, p.m / 2);
    Polynomial g = -(dickson_polynomial({p.n, p.b}) / pow(p.b, p.n / 2));
    return {std::move(f), std::move(g)};
  }
  std::pair<Polynomial, Polynomial> operator()(const FifthKind& p) const {
    Polynomial f = pow(Polynomial{Rational(-1), Rational(0), p.a}, 3);
    Polynomial g{Rational(0), Rational(0), Rational(0), Rational(-4), Rational(3)};
    return maybe_swap(std::move(f), std::move(g), p.switched);
  }
};

Rational rational_sqrt(const Rational& r) {
  Integer num;
  Integer den;
  mpz_sqrt(num.get_mpz_t(), r.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), r.get_den_mpz_t());
  return frac(num, den);
}

// 6t^2 - 6t + 1, the factor whose irrational roots rule out the first and fifth kinds.
const Polynomial& centred_quadratic() {
  static const Polynomial q{Rational(1), Rational(-6), Rational(6)};
  return q;
}

void require_power_sum(const PowerSumSpec& spec, const Rational& c1) {
  validate(spec);
  if (is_zero(c1)) throw std::invalid_argument("c1 must be nonzero");
}

std::string spec_string(const PowerSumSpec& spec) {
  return "(" + std::to_string(spec.a) + ", " + std::to_string(spec.b) + ", " + std::to_string(spec.k) + ")";
}

// Checks that the coefficient of x^(k-1) in S(c1 x + c0), as a polynomial in
// c0, is a nonzero multiple of 6c0'^2 - 6c0' + 1 and that the latter has no
// rational zero. Returns the coefficient polynomial.
Polynomial check_no_rational_offset(Report& report, const PowerSumSpec& spec, const Polynomial& s,
                                    const Rational& c1) {
  const Polynomial in_offset = shift_coefficient_in_offset(s, spec.k - 1, c1);
  const Polynomial expected = affine_substitute(centred_quadratic(), Rational(1), frac(spec.b, spec.a)) *
                              (pow(from_int(spec.a), spec.k) * pow(c1, spec.k - 1) * spec.k / 12);
  report.check("coefficient of x^(k-1) as a function of c0 equals a^k c1^(k-1) k/12 (6c0'^2 - 6c0' + 1)",
               in_offset, expected);
  const Rational disc = Rational(36) - 24;
  report.forced_values.emplace_back("discriminant(6t^2 - 6t + 1)", to_string(disc));
  report.check("discriminant 12 is not a rational square", !is_rational_square(disc));
  report.check("6t^2 - 6t + 1 has no rational root", rational_roots_low_degree(centred_quadratic()).empty());
  report.check("the x^(k-1) coefficient has no rational zero in c0", rational_roots_low_degree(in_offset).empty());
  return in_offset;
}

}  // namespace

void validate(const StandardPair& sp) { std::visit(Validator{}, sp); }

std::pair<Polynomial, Polynomial> realize(const StandardPair& sp) {
  validate(sp);
  return std::visit(Realizer{}, sp);
}

LinearForm::LinearForm(Rational scale, Rational offset) : e1(std::move(scale)), e0(std::move(offset)) {
  if (is_zero(e1)) throw std::invalid_argument("linear form: e1 must be nonzero");
}

std::vector<Rational> rational_roots_low_degree(const Polynomial& p) {
  const Degree deg = p.degree();
  if (!deg || *deg == 0 || *deg > 2) throw std::invalid_argument("rational roots: degree must be 1 or 2");
  if (*deg == 1) return {-p.coeff(0) / p.coeff(1)};
  const Rational& a = p.coeff(2);
  const Rational b = p.coeff(1);
  const Rational c = p.coeff(0);
  const Rational disc = b * b - 4 * a * c;
  if (!is_rational_square(disc)) return {};
  const Rational root = rational_sqrt(disc);
  Rational lo = (-b - root) / (2 * a);
  Rational hi = (-b + root) / (2 * a);
  if (lo > hi) std::swap(lo, hi);
  if (lo == hi) return {lo};
  return {lo, hi};
}

Report lemma1_reject(const PowerSumSpec& spec, const Rational& c1, const Rational& c0) {
  require_power_sum(spec, c1);
  if (spec.k < 2) throw std::invalid_argument("lemma1_reject: k must be at least 2 (q = k + 1 >= 3)");

  Report report;
  report.lemma = "lemma1";
  report.inputs = {{"spec", spec_string(spec)}, {"c1", to_string(c1)}, {"c0", to_string(c0)}};

  const Polynomial s = power_sum_polynomial(spec);
  const Polynomial shifted = affine_substitute(s, c1, c0);
  const ShiftedCoeffs closed = shifted_coeffs(spec, c1, c0);

  bool interior = false;
  for (unsigned i = 1; i <= spec.k; ++i) interior = interior || !is_zero(shifted.coeff(i));
  report.check("some coefficient of x^1..x^k is nonzero", interior);

  const Rational witness = shifted.coeff(spec.k - 1);
  report.forced_values.emplace_back("c0'", to_string(closed.c0prime));
  report.forced_values.emplace_back("s_{k-1}", to_string(witness));
  report.check("s_{k-1} from expansion equals closed form", witness, closed.s_km1);
  report.check("s_{k-1} != 0", !is_zero(witness));
  check_no_rational_offset(report, spec, s, c1);

  report.contradiction = "e1 x^q + e0 forces s_{k-1} = 0, i.e. 6c0'^2 - 6c0' + 1 = 0, which has no rational root";
  report.verdict = report.all_verified() ? "rejected" : "counterexample";
  return report;
}

Report lemma2_reject(const PowerSumSpec& spec, const Rational& c1, const Rational& c0, const Rational& delta) {
  require_power_sum(spec, c1);
  const unsigned m = spec.k + 1;
  if (m <= 4) {
    throw std::invalid_argument(
        "lemma2_reject needs m = k + 1 > 4; for m <= 4 genuine identities exist: "
        "S_{2,1}^2(x) = 4/3 D_3(x, 1/12) and S_{2,1}^3(x) = 2 D_4(x, 1/8) - 1/16");
  }
  if (is_zero(delta)) throw std::invalid_argument("lemma2_reject: delta must be nonzero");

  Report report;
  report.lemma = "lemma2";
  report.inputs = {{"spec", spec_string(spec)},
                   {"m", std::to_string(m)},
                   {"c1", to_string(c1)},
                   {"c0", to_string(c0)},
                   {"delta", to_string(delta)}};

  const Polynomial s = power_sum_polynomial(spec);
  const Polynomial dickson = dickson_polynomial({m, delta});
  const Rational ak = pow(from_int(spec.a), spec.k);
  const Rational ratio_ba = frac(spec.b, spec.a);

  // Direct check at the given (c1, c0): the top and constant coefficients
  // force e1 and e0, and the remainder must not vanish.
  const Polynomial shifted = affine_substitute(s, c1, c0);
  const LinearForm forced(shifted.lead(), shifted.coeff(0) - shifted.lead() * dickson.coeff(0));
  const Polynomial residual = shifted - forced.apply(dickson);
  report.forced_values.emplace_back("e1", to_string(forced.e1));
  report.forced_values.emplace_back("e0", to_string(forced.e0));
  report.check("S(c1 x + c0) - e1 D_m(x, delta) - e0 is a nonzero polynomial", !residual.is_zero());

  // s_k = 0: the x^k coefficient is linear in c0 with a single root.
  const Polynomial sk_in_offset = shift_coefficient_in_offset(s, spec.k, c1);
  const auto sk_roots = rational_roots_low_degree(sk_in_offset);
  const Rational c0_forced = sk_roots.at(0);
  const Rational c0prime = c0_forced + ratio_ba;
  report.forced_values.emplace_back("c0'", to_string(c0prime));
  report.check("s_k = 0 forces c0' = 1/2", c0prime, frac(1, 2));

  // e1 = s_{k+1}
  const Rational e1_closed = ak * pow(c1, m) / m;
  report.check("e1 = a^(m-1) c1^m / m", forced.e1, e1_closed);

  // With c0' = 1/2, each s_j scales as c1^j times the coefficient sigma_j at c1 = 1.
  const Polynomial centred = affine_substitute(s, Rational(1), c0_forced);
  const Rational eps = centred.coeff(m);
  const Rational sigma_km1 = centred.coeff(spec.k - 1);
  const Rational sigma_km3 = centred.coeff(spec.k - 3);

  // D_m(x, delta) = x^m - m delta x^(m-2) + m(m-3)/2 delta^2 x^(m-4) - ...
  report.check("D_m coefficient of x^(m-2) is -m delta", dickson.coeff(m - 2), -Rational(m) * delta);
  report.check("D_m coefficient of x^(m-4) is m(m-3)/2 delta^2", dickson.coeff(m - 4),
               Rational(m * (m - 3)) * delta * delta / 2);

  // s_{k-1} = -e1 m delta  =>  c1^2 = -sigma_{k-1} / (eps m delta)
  const Rational c1_sq = -sigma_km1 / (eps * m * delta);
  // s_{k-3} = e1 (m-3) m delta^2 / 2  =>  c1^4 = 2 sigma_{k-3} / (eps (m-3) m delta^2)
  const Rational c1_4th = 2 * sigma_km3 / (eps * (m - 3) * m * delta * delta);
  report.forced_values.emplace_back("c1^2", to_string(c1_sq));
  report.forced_values.emplace_back("c1^4", to_string(c1_4th));
  report.check("c1^2 = (m-1) / (24 delta)", c1_sq, Rational(m - 1) / (24 * delta));
  report.check("c1^4 = 7(m-1)(m-2) / (2880 delta^2)", c1_4th, Rational(7 * (m - 1) * (m - 2)) / (2880 * delta * delta));

  const Rational mismatch = c1_sq * c1_sq - c1_4th;
  report.forced_values.emplace_back("(c1^2)^2 - c1^4", to_string(mismatch));
  report.check("(c1^2)^2 != c1^4", !is_zero(mismatch));

  // (m-1)^2/576 = 7(m-1)(m-2)/2880  <=>  5(m-1) = 7(m-2)
  const Polynomial in_m{Rational(-5 + 14), Rational(5 - 7)};
  const Rational m_root = rational_roots_low_degree(in_m).at(0);
  report.forced_values.emplace_back("m", to_string(m_root));
  report.check("5(m-1) = 7(m-2) forces m = 9/2", m_root, frac(9, 2));
  report.check("9/2 is not an integer degree", !is_integer(m_root));

  report.contradiction = "comparing c1^2 and c1^4 forces 7(m-2) = 5(m-1), so m = 9/2";
  report.verdict = report.all_verified() ? "rejected" : "counterexample";
  return report;
}

Report fifth_kind_reject(std::int64_t a, std::int64_t b) {
  const PowerSumSpec spec{a, b, 3};
  validate(spec);

  Report report;
  report.lemma = "fifth-kind";
  report.inputs = {{"a", std::to_string(a)}, {"b", std::to_string(b)}};

  // e1 (3x^4 - 4x^3) + e0 has no x^2 term, so s_2 must vanish for some
  // rational c0; its dependence on c1 is the factor c1^2.
  const Polynomial s = power_sum_polynomial(spec);
  const Polynomial target{Rational(0), Rational(0), Rational(0), Rational(-4), Rational(3)};
  report.check("target 3x^4 - 4x^3 has zero x^2 coefficient", is_zero(target.coeff(2)));
  const Polynomial s2 = check_no_rational_offset(report, spec, s, Rational(1));
  report.forced_values.emplace_back("s_2(c0)", to_json(s2).dump());

  report.contradiction = "matching 3x^4 - 4x^3 forces 6c0'^2 - 6c0' + 1 = 0, which has no rational root";
  report.verdict = report.all_verified() ? "rejected" : "counterexample";
  return report;
}

}  // namespace psd
