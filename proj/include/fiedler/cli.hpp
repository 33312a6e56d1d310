#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fiedler::cli {

/// Exit codes, stable for scripts.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitNumerical = 3;

/// Runs one command (args exclude the program name) and returns the exit
/// code. All report output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fiedler::cli
