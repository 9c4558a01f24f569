#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hbt::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kConfigError = 2,
  kInputError = 3,
  kNonConvergence = 4,
  kCertificationFailed = 5,
  kNotSolvable = 6,
};

/// Runs the command line `args` (without the program name). Reports go to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hbt::cli
