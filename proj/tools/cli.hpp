#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bikei::cli {

enum ExitCode : int {
  kSuccess = 0,
  kAxiomFailure = 1,
  kInputError = 2,
  kSemanticError = 3,
  kResourceError = 4,
};

// Runs the command line (args excludes the program name) writing results to
// out and diagnostics to err; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bikei::cli
