#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace acq::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kValidation = 3,
  kGuard = 4,
  kInvariance = 5,
};

// Runs the tool with args[0] as the program name. Reports go to out,
// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace acq::cli
