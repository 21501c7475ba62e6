#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lieaid::cli {

enum ExitCode : int { ok = 0, input_error = 1, inconclusive = 2 };

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lieaid::cli
