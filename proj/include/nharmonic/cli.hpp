#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nharm::cli {

/// Exit codes of the command-line driver.
enum ExitCode : int {
  kOk = 0,
  kArgumentError = 2,
  kDomainError = 3,
  kNumericalError = 4,
};

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// error objects to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nharm::cli
