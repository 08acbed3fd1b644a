#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ringlab {

/// Exit statuses of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2 };

/// Runs `ringlab <args...>` (args exclude the program name) and returns the
/// exit status. Reports go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ringlab
