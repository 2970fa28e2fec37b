#include "psd/squarefree.hpp"

#include <stdexcept>

namespace psd {

Polynomial SquarefreeDecomposition::reconstruct() const {
  Polynomial out = Polynomial::constant(unit);
  for (const auto& f : factors) out *= pow(f.factor, f.multiplicity);
  return out;
}

SquarefreeDecomposition squarefree_decomposition(const Polynomial& p) {
  if (p.is_constant()) throw std::invalid_argument("squarefree decomposition of a constant polynomial");

  SquarefreeDecomposition out;
  out.unit = p.lead();

  const Polynomial f = monic(p);
  const Polynomial df = derivative(f);
  const Polynomial a0 = gcd(f, df);
  Polynomial b = exact_quotient(f, a0);
  Polynomial c = exact_quotient(df, a0);
  Polynomial d = c - derivative(b);
  unsigned multiplicity = 1;
  while (!b.is_constant()) {
    Polynomial a = gcd(b, d);
    if (!a.is_constant()) out.factors.push_back({a, multiplicity});
    b = exact_quotient(b, a);
    c = exact_quotient(d, a);
    d = c - derivative(b);
    ++multiplicity;
  }
  return out;
}

std::size_t odd_multiplicity_zero_count(const Polynomial& p) {
  std::size_t count = 0;
  for (const auto& f : squarefree_decomposition(p).factors) {
    if (f.multiplicity % 2 == 1) count += *f.factor.degree();
  }
  return count;
}

}  // namespace psd
