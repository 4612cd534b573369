#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace hodgecalc::cli {

using nlohmann::json;

inline constexpr int kReportSchemaVersion = 1;

enum class Format { Json, Table };

/// Top-level report object: version, request, results, warnings, elapsed_ms.
json make_report(json request, json results, json warnings,
                 std::optional<std::int64_t> elapsed_ms);

/// JSON: sorted keys, two-space indent, trailing newline.
/// Table: a human-readable rendering with no stability promise.
std::string render(const json& report, Format format);

std::string tool_version();

}  // namespace hodgecalc::cli
