#pragma once

#include "hodgecalc_cli/request.hpp"

#include <vector>

namespace hodgecalc::cli {

struct ExecOptions {
  bool compare_published = false;
};

/// Output of one request. `routes_agree` is false when some multi-route
/// comparison in the output disagrees; the caller maps that to exit code 2.
struct CommandResult {
  json output = json::object();
  std::vector<json> warnings;
  bool routes_agree = true;
};

/// Runs one request. Library errors propagate: InvalidArgument and
/// UsageError for bad input, ConsistencyError for internal failures,
/// BudgetExceeded when a computation is too large.
CommandResult execute(const Request& request, const ExecOptions& options);

/// Structured warning record {"kind", "message", "detail"}.
json make_warning(std::string kind, std::string message, json detail = json::object());

}  // namespace hodgecalc::cli
