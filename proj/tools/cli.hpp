#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sgcc::cli {

/// Exit codes: 0 success, 1 a verification did not pass, 2 bad input or usage.
enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2 };

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sgcc::cli
