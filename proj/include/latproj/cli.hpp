#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latproj::cli {

enum ExitCode : int { kOk = 0, kConfigError = 2, kMathError = 3 };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics and warnings to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latproj::cli
