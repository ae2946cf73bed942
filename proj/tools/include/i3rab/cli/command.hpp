#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace i3rab::cli {

// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitValidationErrors = 1,
  kExitUsage = 2,
  kExitIo = 3,
  kExitInternal = 4,
};

// Runs one subcommand. `args` excludes the program name, e.g.
// {"eval", "gold.conll", "pred.conll"}.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace i3rab::cli
