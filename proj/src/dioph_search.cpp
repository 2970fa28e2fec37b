#include "psd/dioph_search.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace psd {

PellState PellState::next() const { return PellState{Integer(5 * u + 12 * s), Integer(2 * u + 5 * s)}; }

namespace {

void check_box(const EquationSpec& eq) {
  if (eq.x_min > eq.x_max) throw std::invalid_argument("solve_bounded: x range is inverted");
  if (eq.y_min > eq.y_max) throw std::invalid_argument("solve_bounded: y range is inverted");
}

Rational side_value(const Polynomial& p, std::int64_t arg) { return evaluate(p, from_int(arg)); }

}  // namespace

std::vector<SolutionRecord> solve_bounded(const EquationSpec& eq) {
  check_box(eq);
  const Polynomial lhs = power_sum_polynomial(eq.lhs);
  const Polynomial rhs = power_sum_polynomial(eq.rhs);

  std::map<Rational, std::vector<std::int64_t>> index;
  for (std::int64_t y = eq.y_min;; ++y) {
    index[side_value(rhs, y)].push_back(y);
    if (y == eq.y_max) break;
  }

  std::vector<SolutionRecord> out;
  for (std::int64_t x = eq.x_min;; ++x) {
    Rational value = side_value(lhs, x);
    if (auto it = index.find(value); it != index.end()) {
      for (std::int64_t y : it->second) out.push_back({x, y, value});
    }
    if (x == eq.x_max) break;
  }
  std::sort(out.begin(), out.end(), [](const SolutionRecord& l, const SolutionRecord& r) {
    return l.x != r.x ? l.x < r.x : l.y < r.y;
  });
  return out;
}

EquationSpec cubes_equation() { return {{2, 1, 1}, {1, 0, 3}, 0, 0, 0, 0}; }

EquationSpec fifth_powers_equation() { return {{2, 1, 1}, {1, 0, 5}, 0, 0, 0, 0}; }

std::vector<SolutionRecord> family_l3(std::size_t count) {
  if (count < 1) throw std::invalid_argument("family_l3: count must be positive");
  const EquationSpec eq = cubes_equation();
  std::vector<SolutionRecord> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto y = static_cast<std::int64_t>(i);
    const std::int64_t x = y * (y - 1) / 2;
    SolutionRecord rec{x, y, from_int(x) * from_int(x)};
    if (!verify_solution(rec, eq)) throw ConsistencyError("family_l3 member fails: y = " + std::to_string(y));
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<SolutionRecord> family_l5(std::size_t count) {
  if (count < 1) throw std::invalid_argument("family_l5: count must be positive");
  const EquationSpec eq = fifth_powers_equation();
  std::vector<SolutionRecord> out;
  out.reserve(count);
  PellState state;
  for (std::size_t i = 0; i < count; ++i) {
    if (!state.holds()) throw ConsistencyError("Pell invariant u^2 - 6s^2 = 3 broken");
    const Integer n = (state.u - 1) / 2;
    const Integer x = state.s * n * (n + 1) / 2;
    const Integer y = n + 1;
    if (!x.fits_slong_p() || !y.fits_slong_p()) throw std::overflow_error("family_l5: member exceeds 64-bit range");
    SolutionRecord rec{x.get_si(), y.get_si(), Rational(x * x)};
    if (!verify_solution(rec, eq)) throw ConsistencyError("family_l5 member fails: n = " + n.get_str());
    out.push_back(std::move(rec));
    state = state.next();
  }
  return out;
}

namespace {

// Past this many terms a k = 1 side is checked with n b + a n(n-1)/2 instead
// of a loop; higher k sides are always summed term by term.
constexpr std::int64_t kDirectSumLimit = 10'000'000;

std::optional<Integer> independent_value(const PowerSumSpec& spec, std::int64_t n) {
  if (n < 0) return std::nullopt;
  if (n <= kDirectSumLimit) return power_sum_direct(spec, static_cast<std::uint64_t>(n));
  if (spec.k != 1) return std::nullopt;
  const Integer nn(static_cast<long>(n));
  return nn * spec.b + Integer(static_cast<long>(spec.a)) * nn * (nn - 1) / 2;
}

}  // namespace

bool verify_solution(const SolutionRecord& rec, const EquationSpec& eq) {
  const Rational lhs = side_value(power_sum_polynomial(eq.lhs), rec.x);
  const Rational rhs = side_value(power_sum_polynomial(eq.rhs), rec.y);
  if (const auto v = independent_value(eq.lhs, rec.x); v && Rational(*v) != lhs) {
    throw ConsistencyError("closed form and direct sum disagree on the left side at x = " + std::to_string(rec.x));
  }
  if (const auto v = independent_value(eq.rhs, rec.y); v && Rational(*v) != rhs) {
    throw ConsistencyError("closed form and direct sum disagree on the right side at y = " + std::to_string(rec.y));
  }
  return lhs == rec.value && rhs == rec.value;
}

Json to_json(const SolutionRecord& rec) {
  Json out;
  out["x"] = rec.x;
  out["y"] = rec.y;
  out["value"] = to_string(rec.value);
  return out;
}

}  // namespace psd
