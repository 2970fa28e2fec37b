#ifndef PSD_SQUAREFREE_HPP
#define PSD_SQUAREFREE_HPP

#include <cstddef>
#include <vector>

#include "psd/polynomial.hpp"

namespace psd {

struct SquarefreeFactor {
  Polynomial factor;  // monic, squarefree, non-constant
  unsigned multiplicity;
  friend bool operator==(const SquarefreeFactor&, const SquarefreeFactor&) = default;
};

/// p = unit * prod factor^multiplicity, factors pairwise coprime and ordered by
/// increasing multiplicity.
struct SquarefreeDecomposition {
  Rational unit;
  std::vector<SquarefreeFactor> factors;

  Polynomial reconstruct() const;
};

/// Yun's algorithm. Throws std::invalid_argument for constant input.
SquarefreeDecomposition squarefree_decomposition(const Polynomial& p);

/// Number of distinct complex zeros of odd multiplicity.
std::size_t odd_multiplicity_zero_count(const Polynomial& p);

}  // namespace psd

#endif  // PSD_SQUAREFREE_HPP
