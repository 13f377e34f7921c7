#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tamp1d {

/// Exit statuses of run_command.
inline constexpr int exit_ok = 0;
inline constexpr int exit_violation = 1;  // property violation, route disagreement, I/O failure
inline constexpr int exit_usage = 2;      // bad flags or unreadable / malformed input

/// Runs the command line `args` (without the program name).
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tamp1d
