#ifndef PSD_DIOPH_SEARCH_HPP
#define PSD_DIOPH_SEARCH_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "psd/json_io.hpp"
#include "psd/special_polys.hpp"

namespace psd {

/// S_lhs(x) = S_rhs(y) over the box [x_min, x_max] x [y_min, y_max].
struct EquationSpec {
  PowerSumSpec lhs;
  PowerSumSpec rhs;
  std::int64_t x_min = 0;
  std::int64_t x_max = 0;
  std::int64_t y_min = 0;
  std::int64_t y_max = 0;
};

struct SolutionRecord {
  std::int64_t x = 0;
  std::int64_t y = 0;
  Rational value;

  friend bool operator==(const SolutionRecord&, const SolutionRecord&) = default;
};

/// u^2 - 6 s^2 = 3, tracking the fifth-power family.
struct PellState {
  Integer u{3};
  Integer s{1};

  PellState next() const;
  bool holds() const { return u * u - 6 * s * s == 3; }
};

/// Raised when two independent evaluations of the same side disagree.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Every integer pair in the box with equal sides, sorted by (x, y). Builds an
/// index from right-side values to y and streams the left side through it.
/// Throws std::invalid_argument on an inverted box or an invalid spec.
std::vector<SolutionRecord> solve_bounded(const EquationSpec& eq);

/// The cubes family of S_{2,1}^1(x) = S_{1,0}^3(y): y = 0, 1, ..., x = y(y-1)/2.
std::vector<SolutionRecord> family_l3(std::size_t count);

/// The fifth-power family of S_{2,1}^1(x) = S_{1,0}^5(y), generated from the
/// Pell recurrence (u, s) -> (5u + 12s, 2u + 5s) from (3, 1), with
/// n = (u - 1)/2, y = n + 1 and x = s n(n+1)/2.
std::vector<SolutionRecord> family_l5(std::size_t count);

/// Recomputes both sides by polynomial evaluation and, for nonnegative
/// arguments, by direct summation (degree-one sides beyond 10^7 terms use the
/// arithmetic series formula instead). Returns whether both sides equal
/// rec.value; throws ConsistencyError if the two routes disagree.
bool verify_solution(const SolutionRecord& rec, const EquationSpec& eq);

/// The equation the families solve, with the box unset.
EquationSpec cubes_equation();
EquationSpec fifth_powers_equation();

Json to_json(const SolutionRecord& rec);

}  // namespace psd

#endif  // PSD_DIOPH_SEARCH_HPP
