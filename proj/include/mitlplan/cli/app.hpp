#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mitlplan::cli {

// Process exit codes.
enum ExitCode : int {
  exit_ok = 0,
  exit_unsatisfiable = 1, // also: some checked verdict is false
  exit_limit = 2,
  exit_input = 3,         // parse or validation error
  exit_unsupported = 4,   // formula outside the translatable fragment
  exit_internal = 5,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mitlplan::cli
