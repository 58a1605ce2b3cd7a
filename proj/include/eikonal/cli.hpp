#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eikonal {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 1,
  kExitIncompatible = 2,
  kExitVerification = 3,
  kExitHamiltonian = 4,
};

/// Runs the tool on `args` (without the program name). Diagnostics go to
/// `err`, short results to `out`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eikonal
