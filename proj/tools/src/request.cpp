#include "hodgecalc_cli/request.hpp"

#include <array>
#include <fstream>
#include <limits>
#include <set>

namespace hodgecalc::cli {

namespace {

enum class Kind { Int, IntList, Bool, String, OptionalInt };

struct Field {
  std::string_view name;
  Kind kind;
  bool required;
  json fallback;  // used when absent and not required
};

struct Schema {
  Command command;
  std::string_view name;
  std::vector<Field> fields;
};

const std::vector<Schema>& schemas() {
  static const std::vector<Schema> all = {
      {Command::Ci, "ci",
       {{"dim", Kind::Int, true, {}},
        {"degrees", Kind::IntList, false, json::array()},
        {"jacobian", Kind::Bool, false, false},
        {"hodge", Kind::Bool, false, false},
        {"betti", Kind::Bool, false, false},
        {"euler", Kind::Bool, false, false}}},
      {Command::Cover, "cover",
       {{"n", Kind::Int, true, {}}, {"m", Kind::Int, false, 2}, {"b", Kind::Int, true, {}}}},
      {Command::Wps, "wps", {{"weights", Kind::IntList, true, {}}, {"degree", Kind::Int, true, {}}}},
      {Command::Fano, "fano",
       {{"n", Kind::Int, true, {}},
        {"d", Kind::Int, true, {}},
        {"r", Kind::Int, true, {}},
        {"m", Kind::Int, false, 2},
        {"class", Kind::Bool, false, false},
        {"truncate_at", Kind::OptionalInt, false, nullptr},
        {"budget", Kind::Int, false, 70}}},
      {Command::Classify, "classify",
       {{"max_dim", Kind::Int, true, {}},
        {"max_degree_sum", Kind::Int, true, {}},
        {"include_even", Kind::Bool, false, false}}},
      {Command::Check, "check", {{"suite", Kind::String, false, "default"}}},
  };
  return all;
}

const Schema& schema_for(Command c) {
  for (const auto& s : schemas())
    if (s.command == c) return s;
  throw UsageError("unknown command");
}

bool is_int(const json& v) {
  if (!v.is_number_integer()) return false;
  if (v.is_number_unsigned()) return v.get<std::uint64_t>() <= std::numeric_limits<int>::max();
  const auto x = v.get<std::int64_t>();
  return x >= std::numeric_limits<int>::min() && x <= std::numeric_limits<int>::max();
}

void check_kind(const Field& f, const json& v) {
  const std::string where = "parameter '" + std::string(f.name) + "'";
  switch (f.kind) {
    case Kind::Int:
      if (!is_int(v)) throw UsageError(where + " must be an integer");
      return;
    case Kind::OptionalInt:
      if (!v.is_null() && !is_int(v)) throw UsageError(where + " must be an integer or null");
      return;
    case Kind::Bool:
      if (!v.is_boolean()) throw UsageError(where + " must be a boolean");
      return;
    case Kind::String:
      if (!v.is_string()) throw UsageError(where + " must be a string");
      return;
    case Kind::IntList:
      if (!v.is_array()) throw UsageError(where + " must be a list of integers");
      for (const auto& e : v)
        if (!is_int(e)) throw UsageError(where + " must be a list of integers");
      return;
  }
}

}  // namespace

std::string_view command_name(Command c) { return schema_for(c).name; }

std::optional<Command> parse_command(std::string_view name) {
  for (const auto& s : schemas())
    if (s.name == name) return s.command;
  return std::nullopt;
}

Request make_request(Command command, json params) {
  if (!params.is_object()) throw UsageError("request parameters must be a JSON object");
  const Schema& schema = schema_for(command);
  std::set<std::string_view> known;
  json out = json::object();
  for (const auto& f : schema.fields) {
    known.insert(f.name);
    const std::string key(f.name);
    if (auto it = params.find(key); it != params.end()) {
      check_kind(f, *it);
      out[key] = *it;
    } else if (f.required) {
      throw UsageError("command '" + std::string(schema.name) + "' requires parameter '" + key + "'");
    } else {
      out[key] = f.fallback;
    }
  }
  for (const auto& [key, value] : params.items()) {
    if (!known.contains(key))
      throw UsageError("unknown parameter '" + key + "' for command '" + std::string(schema.name) + "'");
  }
  return Request{command, std::move(out)};
}

Request parse_request_line(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw UsageError("request must be a JSON object");
  auto it = j.find("command");
  if (it == j.end() || !it->is_string()) throw UsageError("request needs a string 'command'");
  const std::string name = it->get<std::string>();
  const auto command = parse_command(name);
  if (!command) throw UsageError("unknown command '" + name + "'");
  j.erase("command");
  return make_request(*command, std::move(j));
}

json request_to_json(const Request& r) {
  return json{{"command", std::string(command_name(r.command))}, {"params", r.params}};
}

BatchInput ingest_batch(std::istream& in) {
  BatchInput out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      out.entries.push_back({number, parse_request_line(line)});
    } catch (const UsageError& e) {
      out.diagnostics.push_back({number, e.what()});
    }
  }
  return out;
}

BatchInput ingest_batch(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open batch file " + path.string());
  return ingest_batch(in);
}

}  // namespace hodgecalc::cli
