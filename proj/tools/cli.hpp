#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kagome::cli {

/// Exit codes: 0 all checks passed, 1 a check failed, 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). The summary
/// JSON object goes to `out`, diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "pi8" -> pi/8, otherwise a decimal number. Throws std::invalid_argument.
double parse_omega(const std::string& text);

}  // namespace kagome::cli
