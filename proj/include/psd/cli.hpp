#ifndef PSD_CLI_HPP
#define PSD_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace psd::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Results go to out,
/// diagnostics and usage text to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace psd::cli

#endif  // PSD_CLI_HPP
