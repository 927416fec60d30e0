#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace contact_index {

/// Exit codes of the command-line tool.
enum ExitCode : int { kOk = 0, kConfigError = 2, kUnsupported = 3, kMismatch = 4, kCalibrationFailure = 5 };

/// Runs the tool on argv-style arguments (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace contact_index
