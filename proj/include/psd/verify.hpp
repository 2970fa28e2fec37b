#ifndef PSD_VERIFY_HPP
#define PSD_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "psd/polynomial.hpp"
#include "psd/sampling.hpp"

namespace psd {

struct VerifyOptions {
  std::uint64_t seed = kDefaultSeed;
  /// Restricts the run to one group (see verify_groups()).
  std::optional<std::string> only;
  /// Source of B_k(x) for the Bernoulli identity group; replaceable so a
  /// deliberately broken construction can be shown to fail.
  std::function<Polynomial(unsigned)> bernoulli = bernoulli_polynomial;
};

struct VerifyStep {
  std::string group;
  std::string name;
  bool passed = false;
  std::string detail;  // failure reason, empty on success
};

struct VerifyResult {
  std::vector<VerifyStep> steps;

  std::size_t passed() const;
  bool ok() const { return passed() == steps.size(); }
};

/// Group names in execution order.
const std::vector<std::string>& verify_groups();

/// Re-derives every identity and proof step. All selected steps run even
/// after a failure. Throws std::invalid_argument for an unknown group.
VerifyResult verify_paper(const VerifyOptions& options = {});

}  // namespace psd

#endif  // PSD_VERIFY_HPP
