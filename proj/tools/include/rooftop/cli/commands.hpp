#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rooftop::cli {

enum ExitCode : int { exit_pass = 0, exit_fail = 1, exit_usage = 2 };

/// Runs one invocation; `args` excludes the program name. The report goes to
/// `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rooftop::cli
