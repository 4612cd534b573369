#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hodgecalc::cli {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitInconsistent = 2 };

/// Full command-line entry point. args excludes the program name. The report
/// goes to `out` (or to --out FILE), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hodgecalc::cli
