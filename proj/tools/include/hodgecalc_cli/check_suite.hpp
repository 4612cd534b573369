#pragma once

#include "hodgecalc_cli/commands.hpp"

#include <string_view>
#include <vector>

namespace hodgecalc::cli {

std::vector<std::string_view> check_suite_names();

/// Runs a named suite of route-agreement checks. Output lists every check
/// with a pass flag; routes_agree is false if any check failed.
CommandResult run_check_suite(std::string_view suite, const ExecOptions& options);

}  // namespace hodgecalc::cli
