#include "hodgecalc_cli/report.hpp"

#include "hodgecalc/published_claims.hpp"

#include <sstream>

namespace hodgecalc::cli {

std::string tool_version() { return HODGECALC_VERSION; }

json make_report(json request, json results, json warnings, std::optional<std::int64_t> elapsed_ms) {
  return {{"version",
           {{"tool", tool_version()},
            {"schema", kReportSchemaVersion},
            {"published_claims", std::string(kPublishedClaimsVersion)}}},
          {"request", std::move(request)},
          {"results", std::move(results)},
          {"warnings", std::move(warnings)},
          {"elapsed_ms", elapsed_ms ? json(*elapsed_ms) : json(nullptr)}};
}

namespace {

bool is_flat_array(const json& v) {
  if (!v.is_array()) return false;
  for (const auto& e : v)
    if (e.is_structured()) return false;
  return true;
}

std::string scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (is_flat_array(v)) {
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : " ") + scalar(e);
    return "[" + s + "]";
  }
  return v.dump();
}

void render_value(std::ostringstream& os, const json& v, int indent);

void render_object(std::ostringstream& os, const json& obj, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : obj.items()) {
    if (value.is_structured() && !is_flat_array(value)) {
      os << pad << key << ":\n";
      render_value(os, value, indent + 2);
    } else {
      os << pad << key << ": " << scalar(value) << "\n";
    }
  }
}

void render_value(std::ostringstream& os, const json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    render_object(os, v, indent);
  } else if (v.is_array()) {
    for (const auto& e : v) {
      if (e.is_object()) {
        os << pad << "-\n";
        render_object(os, e, indent + 2);
      } else {
        os << pad << "- " << scalar(e) << "\n";
      }
    }
  } else {
    os << pad << scalar(v) << "\n";
  }
}

}  // namespace

std::string render(const json& report, Format format) {
  if (format == Format::Json) return report.dump(2) + "\n";
  std::ostringstream os;
  os << "hodgecalc " << report["version"]["tool"].get<std::string>() << "\n";
  const auto& results = report["results"];
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    os << "== result " << (i + 1);
    if (!r["line"].is_null()) os << " (line " << r["line"].dump() << ")";
    os << ": " << scalar(r["command"]) << " [" << scalar(r["status"]) << "]\n";
    if (r["status"] == "ok") {
      render_value(os, r["output"], 2);
    } else {
      os << "  error: " << scalar(r["error"]) << "\n";
    }
  }
  if (!report["warnings"].empty()) {
    os << "== warnings\n";
    for (const auto& w : report["warnings"]) os << "  " << scalar(w["kind"]) << ": " << scalar(w["message"]) << "\n";
  }
  if (!report["elapsed_ms"].is_null()) os << "elapsed_ms: " << report["elapsed_ms"].dump() << "\n";
  return os.str();
}

}  // namespace hodgecalc::cli
