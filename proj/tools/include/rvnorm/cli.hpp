#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rvnorm::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kSuiteFailure = 1,
  kParseError = 2,
  kPrecondition = 3,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rvnorm::cli
