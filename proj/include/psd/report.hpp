#ifndef PSD_REPORT_HPP
#define PSD_REPORT_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "psd/json_io.hpp"
#include "psd/polynomial.hpp"
#include "psd/rational.hpp"

namespace psd {

/// One checked claim of a derivation. lhs and rhs are the two sides as
/// computed, serialized exactly.
struct ProofStep {
  std::string claim;
  std::string lhs;
  std::string rhs;
  bool verified = false;
};

using Fields = std::vector<std::pair<std::string, std::string>>;

/// Structured trace of a rejection lemma or reduction: the inputs, the values
/// the argument forces, every checked step, and the final verdict.
struct Report {
  std::string lemma;
  Fields inputs;
  Fields forced_values;
  std::vector<ProofStep> steps;
  std::string contradiction;
  std::string verdict;

  bool all_verified() const {
    return std::all_of(steps.begin(), steps.end(), [](const ProofStep& s) { return s.verified; });
  }

  /// Records the step and returns whether it held.
  bool check(std::string claim, const Rational& lhs, const Rational& rhs) {
    const bool ok = lhs == rhs;
    steps.push_back({std::move(claim), to_string(lhs), to_string(rhs), ok});
    return ok;
  }
  bool check(std::string claim, const Polynomial& lhs, const Polynomial& rhs) {
    const bool ok = lhs == rhs;
    steps.push_back({std::move(claim), to_json(lhs).dump(), to_json(rhs).dump(), ok});
    return ok;
  }
  bool check(std::string claim, bool holds) {
    steps.push_back({std::move(claim), holds ? "true" : "false", "true", holds});
    return holds;
  }
};

Json to_json(const ProofStep& step);
Json to_json(const Report& report);
std::string to_text(const Report& report);

}  // namespace psd

#endif  // PSD_REPORT_HPP
