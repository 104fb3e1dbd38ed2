#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permcover::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitResource = 3,
  kExitViolation = 4,
};

/// Runs the command line `args` (without the program name), writing the
/// report to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permcover::cli
