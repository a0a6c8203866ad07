#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tricircle::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2, io_error = 3 };

/// Runs the tool. args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tricircle::cli
