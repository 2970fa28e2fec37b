#include "psd/decomposition.hpp"

#include <stdexcept>

namespace psd {

std::optional<Polynomial> expand_in_powers_of(const Polynomial& f, const Polynomial& inner) {
  if (inner.is_constant()) throw std::invalid_argument("expansion base must be non-constant");
  std::vector<Rational> digits;
  Polynomial rest = f;
  while (!rest.is_zero()) {
    auto [q, r] = divmod(rest, inner);
    if (!r.is_constant()) return std::nullopt;
    digits.push_back(r.coeff(0));
    rest = std::move(q);
  }
  return Polynomial(std::move(digits));
}

namespace {

// The monic, zero-constant inner of degree d is pinned down by the top d
// coefficients of monic(F): below x^n, inner^r and F agree down to x^(n-d+1),
// and the coefficient of x^(n-j) is r * h_(d-j) plus terms in h's already fixed.
Polynomial candidate_inner(const Polynomial& monic_f, std::size_t n, std::size_t d) {
  const auto r = static_cast<unsigned>(n / d);
  Polynomial inner = Polynomial::monomial(Rational(1), d);
  for (std::size_t j = 1; j < d; ++j) {
    const Rational current = pow(inner, r).coeff(n - j);
    const Rational h = (monic_f.coeff(n - j) - current) / r;
    inner += Polynomial::monomial(h, d - j);
  }
  return inner;
}

}  // namespace

std::vector<Decomposition> decompose_all(const Polynomial& f) {
  const Degree deg = f.degree();
  if (!deg || *deg < 2) throw std::invalid_argument("decompose_all: degree must be at least 2");
  const std::size_t n = *deg;
  const Polynomial monic_f = monic(f);
  std::vector<Decomposition> out;
  for (std::size_t d = 2; d < n; ++d) {
    if (n % d != 0) continue;
    Polynomial inner = candidate_inner(monic_f, n, d);
    auto outer = expand_in_powers_of(f, inner);
    if (!outer || compose(*outer, inner) != f) continue;
    out.push_back({std::move(*outer), std::move(inner)});
  }
  return out;
}

Decomposition normalize(const Decomposition& d) {
  const Degree inner_deg = d.inner.degree();
  const Degree outer_deg = d.outer.degree();
  if (!inner_deg || *inner_deg < 2 || !outer_deg || *outer_deg < 2) {
    throw std::invalid_argument("normalize: decomposition must be nontrivial (both degrees >= 2)");
  }
  const Rational scale = d.inner.lead();
  const Rational offset = d.inner.coeff(0);
  Polynomial inner = (d.inner - Polynomial::constant(offset)) / scale;
  Polynomial outer = affine_substitute(d.outer, scale, offset);
  return {std::move(outer), std::move(inner)};
}

bool is_equivalent(const Decomposition& d1, const Decomposition& d2) {
  if (compose(d1.outer, d1.inner) != compose(d2.outer, d2.inner)) {
    throw std::invalid_argument("is_equivalent: decompositions of different polynomials");
  }
  return normalize(d1) == normalize(d2);
}

Theorem1Report theorem1_verify(const PowerSumSpec& spec) {
  Theorem1Report report;
  report.spec = spec;
  report.input = power_sum_polynomial(spec);
  report.classes = decompose_all(report.input);

  for (const auto& c : report.classes) {
    if (compose(c.outer, c.inner) != report.input) report.counterexamples.push_back("class does not recompose");
  }

  // k = 1 gives a quadratic, which has no nontrivial decomposition at all.
  if (spec.k % 2 == 0 || spec.k == 1) {
    report.verdict = "indecomposable";
    if (!report.classes.empty()) {
      report.counterexamples.push_back("k = " + std::to_string(spec.k) + " has " + std::to_string(report.classes.size()) +
                                       " nontrivial decomposition class(es)");
    }
  } else {
    report.verdict = "unique-class";
    const unsigned v = (spec.k + 1) / 2;
    const Rational shift = frac(spec.b, spec.a) - frac(1, 2);
    report.expected_outer = hat_power_sum(v, spec.a, spec.b);
    report.expected_inner = pow(Polynomial{shift, Rational(1)}, 2);
    if (report.classes.size() != 1) {
      report.counterexamples.push_back("odd k has " + std::to_string(report.classes.size()) +
                                       " decomposition classes, expected 1");
    } else {
      const Decomposition expected = normalize({*report.expected_outer, *report.expected_inner});
      if (report.classes.front().inner != expected.inner) {
        report.counterexamples.push_back("inner is not equivalent to (x + b/a - 1/2)^2");
      } else if (report.classes.front().outer != expected.outer) {
        report.counterexamples.push_back("outer does not match the hat power sum");
      }
    }
    if (v >= 2 && !decompose_all(*report.expected_outer).empty()) {
      report.counterexamples.push_back("hat power sum of degree " + std::to_string(v) + " is decomposable");
    }
  }
  if (!report.ok()) report.verdict = "counterexample";
  return report;
}

Json to_json(const Decomposition& d) {
  Json out;
  out["outer"] = to_json(d.outer);
  out["inner"] = to_json(d.inner);
  return out;
}

Json to_json(const Theorem1Report& report) {
  Json out;
  Json input;
  input["a"] = report.spec.a;
  input["b"] = report.spec.b;
  input["k"] = report.spec.k;
  input["poly"] = to_json(report.input);
  out["input"] = std::move(input);
  Json classes = Json::array();
  for (const auto& c : report.classes) classes.push_back(to_json(c));
  out["classes"] = std::move(classes);
  out["verdict"] = report.verdict;
  if (report.expected_outer) out["expected_outer"] = to_json(*report.expected_outer);
  if (report.expected_inner) out["expected_inner"] = to_json(*report.expected_inner);
  if (!report.counterexamples.empty()) out["counterexamples"] = report.counterexamples;
  return out;
}

}  // namespace psd
