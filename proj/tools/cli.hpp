#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tourn::cli {

/// Exit statuses shared by every subcommand.
enum ExitCode : int { kSuccess = 0, kViolation = 1, kUsage = 2 };

/// Runs the command line `args` (without the program name). Machine-readable
/// JSON lines go to `out`, human-readable summaries and errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tourn::cli
