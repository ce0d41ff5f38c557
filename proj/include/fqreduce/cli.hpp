#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fqr {

/// Exit statuses of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitPrecondition = 2, kExitOracle = 3 };

/// Runs the tool on args (args[0] is the program name). Results go to out,
/// diagnostics to err only.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace fqr
