#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twistor4::cli {

enum ExitCode : int {
  kSuccess = 0,
  kParseError = 2,
  kHypothesisError = 3,
  kNumericError = 4,
};

/// Runs the command line `args` (without the program name), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twistor4::cli
