#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gradpade::cli {

enum ExitCode : int { ok = 0, usage = 2, data = 3, numerical = 4 };

/// Runs the command line `args` (without the program name). Tables go to
/// `out`, diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gradpade::cli
