#pragma once
// Requests accepted by the hodgecalc CLI, either from flags or from an
// NDJSON batch file. Parameters are kept as a flat JSON object whose keys are
// the long flag names with dashes turned into underscores.

#include <nlohmann/json.hpp>

#include <filesystem>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hodgecalc::cli {

using nlohmann::json;

enum class Command { Ci, Cover, Wps, Fano, Classify, Check };

std::string_view command_name(Command c);
std::optional<Command> parse_command(std::string_view name);

/// Malformed request: unknown command or key, missing or mistyped parameter.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Request {
  Command command = Command::Ci;
  json params = json::object();
};

/// Checks params against the command's schema and fills defaults.
/// Throws UsageError on any problem.
Request make_request(Command command, json params);

/// Parses one batch line: an object with a "command" key plus parameters.
Request parse_request_line(std::string_view line);

/// {"command": ..., "params": ...}
json request_to_json(const Request& r);

struct BatchDiagnostic {
  std::size_t line = 0;  // 1-based
  std::string message;
};

struct BatchEntry {
  std::size_t line = 0;
  Request request;
};

struct BatchInput {
  std::vector<BatchEntry> entries;
  std::vector<BatchDiagnostic> diagnostics;
};

/// Order-preserving parse of newline-delimited JSON requests. Blank lines are
/// ignored; every malformed line yields a diagnostic naming its line number.
BatchInput ingest_batch(std::istream& in);
BatchInput ingest_batch(const std::filesystem::path& path);

}  // namespace hodgecalc::cli
