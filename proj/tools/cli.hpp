#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pnspace::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kConfigError = 2 };

/// Parses `args` (without the program name) and runs the subcommand.
/// Primary output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pnspace::cli
