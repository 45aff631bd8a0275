#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace moire::cli {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // unreadable input, bad data, dimension mismatch
  kExitUsage = 2,    // bad or conflicting flags
};

/// Entry point of the `moire` tool. `args` excludes the program name.
/// Machine output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace moire::cli
