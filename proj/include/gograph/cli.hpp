#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gograph {

// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitUsage = 2,       // parse, config and I/O errors
  kExitGuard = 3,       // size guard or cyclic input
  kExitNotConverged = 4,
};

// Runs one command line (without the program name). Results go to files
// named by flags or to `out`; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gograph
