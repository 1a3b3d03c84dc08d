#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grassorbit::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { kOk = 0, kUsage = 2, kAlgebra = 3 };

/// Runs the tool on `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grassorbit::cli
