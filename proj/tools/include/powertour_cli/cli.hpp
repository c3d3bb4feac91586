#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace powertour::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kBoundViolation = 2,
  kInternal = 3,
};

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace powertour::cli
