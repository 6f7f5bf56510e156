// app.hpp: entry point of the cvsteer command-line tool

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cvsteer::cli {

/// Exit codes: 0 success, 1 verification failure or numerical error, 2 invalid invocation.
enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

/// Runs one invocation; `args` excludes the program name. Data goes to `out` (or --out),
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cvsteer::cli
