#include "hodgecalc_cli/app.hpp"

#include "hodgecalc/errors.hpp"
#include "hodgecalc/parallel.hpp"
#include "hodgecalc_cli/check_suite.hpp"
#include "hodgecalc_cli/commands.hpp"
#include "hodgecalc_cli/report.hpp"
#include "hodgecalc_cli/request.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>

namespace hodgecalc::cli {

namespace {

struct GlobalOptions {
  std::string format = "json";
  std::string batch;
  std::string out;
  bool strict = false;
  bool compare_paper = false;
  bool timing = false;
};

// Outcome of one request inside a run.
struct Executed {
  json record;
  std::vector<json> warnings;
  int exit_code = kExitOk;
};

Executed execute_one(const Request& req, std::optional<std::size_t> line, const ExecOptions& opt) {
  Executed e;
  e.record = {{"command", std::string(command_name(req.command))},
              {"params", req.params},
              {"line", line ? json(*line) : json(nullptr)},
              {"status", "ok"},
              {"output", nullptr},
              {"error", nullptr},
              {"routes_agree", true}};
  auto fail = [&](const std::exception& ex, int code) {
    e.record["status"] = "error";
    e.record["error"] = ex.what();
    e.exit_code = code;
  };
  try {
    CommandResult r = execute(req, opt);
    e.record["output"] = std::move(r.output);
    e.record["routes_agree"] = r.routes_agree;
    e.warnings = std::move(r.warnings);
    if (!r.routes_agree) e.exit_code = kExitInconsistent;
  } catch (const ConsistencyError& ex) {
    fail(ex, kExitInconsistent);
  } catch (const UsageError& ex) {
    fail(ex, kExitUsage);
  } catch (const InvalidArgument& ex) {
    fail(ex, kExitUsage);
  } catch (const BudgetExceeded& ex) {
    fail(ex, kExitUsage);
  }
  if (line) {
    for (auto& w : e.warnings) w["detail"]["line"] = *line;
  }
  return e;
}

json options_json(const GlobalOptions& g) {
  return {{"format", g.format}, {"compare_paper", g.compare_paper}, {"strict", g.strict}, {"timing", g.timing}};
}

int emit(const json& report, const GlobalOptions& g, std::ostream& out, std::ostream& err) {
  const std::string text = render(report, g.format == "table" ? Format::Table : Format::Json);
  if (g.out.empty()) {
    out << text;
    out.flush();
    return kExitOk;
  }
  std::ofstream file(g.out, std::ios::binary | std::ios::trunc);
  if (!(file << text)) {
    err << "error: cannot write " << g.out << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

using Clock = std::chrono::steady_clock;

std::optional<std::int64_t> elapsed_since(Clock::time_point start, bool enabled) {
  if (!enabled) return std::nullopt;
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

int run_single(const Request& req, const GlobalOptions& g, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  Executed e = execute_one(req, std::nullopt, ExecOptions{g.compare_paper});
  if (e.record["status"] == "error") {
    err << "error: " << e.record["error"].get<std::string>() << "\n";
    return e.exit_code;
  }
  json request = request_to_json(req);
  request["batch"] = nullptr;
  request["options"] = options_json(g);
  const json report = make_report(std::move(request), json::array({e.record}), json(e.warnings),
                                  elapsed_since(start, g.timing));
  const int written = emit(report, g, out, err);
  return written != kExitOk ? written : e.exit_code;
}

int run_batch(const GlobalOptions& g, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  BatchInput input = ingest_batch(std::filesystem::path(g.batch));
  for (const auto& d : input.diagnostics) err << g.batch << ":" << d.line << ": " << d.message << "\n";
  if (g.strict && !input.diagnostics.empty()) {
    err << "error: malformed batch input (strict mode)\n";
    return kExitUsage;
  }

  const ExecOptions opt{g.compare_paper};
  auto executed = parallel_map(input.entries.size(), [&](std::size_t i) {
    return execute_one(input.entries[i].request, input.entries[i].line, opt);
  });

  json results = json::array();
  json warnings = json::array();
  for (const auto& d : input.diagnostics)
    warnings.push_back(make_warning("batch_line", "line " + std::to_string(d.line) + ": " + d.message,
                                    {{"line", d.line}}));
  int code = kExitOk;
  for (auto& e : executed) {
    if (e.record["status"] == "error") {
      const std::size_t line = e.record["line"].get<std::size_t>();
      err << g.batch << ":" << line << ": " << e.record["error"].get<std::string>() << "\n";
      if (g.strict && e.exit_code == kExitUsage) {
        err << "error: request failed (strict mode)\n";
        return kExitUsage;
      }
      warnings.push_back(make_warning("request_error",
                                      "line " + std::to_string(line) + ": " + e.record["error"].get<std::string>(),
                                      {{"line", line}}));
    }
    if (e.exit_code == kExitInconsistent) code = kExitInconsistent;
    for (auto& w : e.warnings) warnings.push_back(std::move(w));
    results.push_back(std::move(e.record));
  }

  json request = {{"command", nullptr}, {"params", nullptr}, {"batch", g.batch}, {"options", options_json(g)}};
  const json report = make_report(std::move(request), std::move(results), std::move(warnings),
                                  elapsed_since(start, g.timing));
  const int written = emit(report, g, out, err);
  return written != kExitOk ? written : code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Hodge numbers, Chern classes and Fano-scheme classes", "hodgecalc"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(0, 1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--batch", g.batch, "NDJSON file with one request object per line");
  app.add_option("--out", g.out, "Write the report to FILE instead of stdout");
  app.add_flag("--strict", g.strict, "Abort a batch on the first malformed line or failed request");
  app.add_flag("--compare-paper", g.compare_paper, "Compare against published values and emit warnings");
  app.add_flag("--timing", g.timing, "Fill elapsed_ms (makes the report non-reproducible)");

  json params = json::object();
  std::optional<Command> chosen;
  auto bind_int = [&](CLI::App* sub, const std::string& flag, const std::string& key, bool required) {
    auto* opt = sub->add_option_function<int>(flag, [&params, key](const int& v) { params[key] = v; });
    if (required) opt->required();
    return opt;
  };
  auto bind_list = [&](CLI::App* sub, const std::string& flag, const std::string& key, bool required) {
    auto* opt = sub->add_option_function<std::vector<int>>(
        flag, [&params, key](const std::vector<int>& v) { params[key] = v; });
    opt->delimiter(',');
    if (required) opt->required();
    return opt;
  };
  auto bind_flag = [&](CLI::App* sub, const std::string& flag, const std::string& key) {
    sub->add_flag_callback(flag, [&params, key] { params[key] = true; });
  };

  auto* ci = app.add_subcommand("ci", "Invariants of a complete intersection");
  bind_int(ci, "--dim", "dim", true);
  bind_list(ci, "--degrees", "degrees", false);
  for (const char* f : {"jacobian", "hodge", "betti", "euler"}) bind_flag(ci, std::string("--") + f, f);
  ci->callback([&] { chosen = Command::Ci; });

  auto* cover = app.add_subcommand("cover", "Cyclic cover of P^n branched along a hypersurface");
  bind_int(cover, "--n", "n", true);
  bind_int(cover, "--m", "m", false);
  bind_int(cover, "--b", "b", true);
  cover->callback([&] { chosen = Command::Cover; });

  auto* wps = app.add_subcommand("wps", "Hypersurface in weighted projective space");
  bind_list(wps, "--weights", "weights", true);
  bind_int(wps, "--degree", "degree", true);
  wps->callback([&] { chosen = Command::Wps; });

  auto* fano = app.add_subcommand("fano", "Fano scheme of r-planes on a cyclic cover");
  for (const char* f : {"n", "d", "r"}) bind_int(fano, std::string("--") + f, f, true);
  bind_int(fano, "--m", "m", false);
  bind_flag(fano, "--class", "class");
  bind_int(fano, "--truncate-at", "truncate_at", false);
  bind_int(fano, "--budget", "budget", false);
  fano->callback([&] { chosen = Command::Fano; });

  auto* classify = app.add_subcommand("classify", "Level-one complete intersections in a window");
  bind_int(classify, "--max-dim", "max_dim", true);
  bind_int(classify, "--max-degree-sum", "max_degree_sum", true);
  bind_flag(classify, "--include-even", "include_even");
  classify->callback([&] { chosen = Command::Classify; });

  auto* check = app.add_subcommand("check", "Route-agreement suite");
  check->add_option_function<std::string>("--suite", [&params](const std::string& s) { params["suite"] = s; })
      ->check(CLI::IsMember(std::vector<std::string>{"default"}));
  check->callback([&] { chosen = Command::Check; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!g.batch.empty()) {
      if (chosen) throw UsageError("--batch cannot be combined with an inline command");
      return run_batch(g, out, err);
    }
    if (!chosen) {
      err << app.help();
      return kExitUsage;
    }
    return run_single(make_request(*chosen, std::move(params)), g, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace hodgecalc::cli
