#ifndef PSD_DECOMPOSITION_HPP
#define PSD_DECOMPOSITION_HPP

#include <optional>
#include <string>
#include <vector>

#include "psd/json_io.hpp"
#include "psd/polynomial.hpp"
#include "psd/special_polys.hpp"

namespace psd {

/// F = outer(inner). Decompositions returned by this module are nontrivial
/// (both degrees >= 2) and canonical: inner is monic with zero constant term.
struct Decomposition {
  Polynomial outer;
  Polynomial inner;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Writes f in powers of inner: returns g with f = g(inner) when every
/// inner-adic digit is a constant, std::nullopt otherwise. inner must be
/// non-constant.
std::optional<Polynomial> expand_in_powers_of(const Polynomial& f, const Polynomial& inner);

/// One canonical representative per equivalence class of nontrivial
/// decompositions, ordered by inner degree. Throws std::invalid_argument when
/// deg F < 2.
std::vector<Decomposition> decompose_all(const Polynomial& f);

/// Equivalent decomposition with monic, zero-constant inner. Throws
/// std::invalid_argument when deg inner < 2.
Decomposition normalize(const Decomposition& d);

/// Throws std::invalid_argument if d1 and d2 do not compose to the same
/// polynomial.
bool is_equivalent(const Decomposition& d1, const Decomposition& d2);

struct Theorem1Report {
  PowerSumSpec spec;
  Polynomial input;
  std::vector<Decomposition> classes;
  std::string verdict;  // "indecomposable", "unique-class" or "counterexample"
  std::vector<std::string> counterexamples;
  std::optional<Polynomial> expected_outer;  // hat power sum, odd k only
  std::optional<Polynomial> expected_inner;  // (x + b/a - 1/2)^2, odd k only

  bool ok() const { return counterexamples.empty(); }
};

/// Checks the decomposition dichotomy for S_{a,b}^k: no nontrivial
/// decomposition for even k, a single class equivalent to
/// (hat_power_sum, (x + b/a - 1/2)^2) for odd k.
Theorem1Report theorem1_verify(const PowerSumSpec& spec);

Json to_json(const Decomposition& d);
Json to_json(const Theorem1Report& report);

}  // namespace psd

#endif  // PSD_DECOMPOSITION_HPP
