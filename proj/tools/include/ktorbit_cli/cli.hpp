#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ktorbit::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,          // verify found a failing check
  kExitInputError = 2,       // usage, parse or field error
  kExitNotCharacteristic = 3 // web requested for a tensor without a web
};

/// Runs the tool on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ktorbit::cli
