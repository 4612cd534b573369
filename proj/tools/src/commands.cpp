#include "hodgecalc_cli/commands.hpp"

#include "hodgecalc/ci_invariants.hpp"
#include "hodgecalc/cover_hodge.hpp"
#include "hodgecalc/errors.hpp"
#include "hodgecalc/fano_planes.hpp"
#include "hodgecalc/published_claims.hpp"
#include "hodgecalc_cli/check_suite.hpp"
#include "hodgecalc_cli/json_util.hpp"

namespace hodgecalc::cli {

namespace {

constexpr CoverQuantity kAllQuantities[] = {CoverQuantity::MiddleBetti,
                                            CoverQuantity::JacobianDimension,
                                            CoverQuantity::MiddleLevel};

std::vector<int> int_list(const json& v) { return v.get<std::vector<int>>(); }

json route_value(const ConsistencyReport& r, const BigInt& v) {
  // The level of an empty Hodge structure is carried as -1 internally.
  if (r.quantity == "middle_level" && v < 0) return nullptr;
  return to_json(v);
}

json report_to_json(const ConsistencyReport& r, bool with_published) {
  json routes = json::object();
  for (const auto& [label, v] : r.route_values) routes[label] = route_value(r, v);
  json out = {{"quantity", r.quantity}, {"routes", routes}, {"agree", r.agree}};
  if (with_published) {
    if (r.published) {
      out["published"] = {{"value", to_json(r.published->value)}, {"source", r.published->source}};
      out["matches_published"] = *r.matches_published;
    } else {
      out["published"] = nullptr;
      out["matches_published"] = nullptr;
    }
  }
  return out;
}

json published_warning(const std::string& subject, const std::string& quantity,
                       const PublishedClaim& claim, const json& computed) {
  return make_warning("published_mismatch",
                      subject + " " + quantity + ": computed " + computed.dump() + ", published " +
                          to_string(claim.value),
                      {{"subject", subject},
                       {"quantity", quantity},
                       {"computed", computed},
                       {"published", to_json(claim.value)},
                       {"source", claim.source}});
}

// Consistency block shared by cover and ordinary wps requests.
template <class Subject>
void add_consistency(CommandResult& res, const Subject& subject, const ExecOptions& opt) {
  json reports = json::array();
  for (CoverQuantity q : kAllQuantities) {
    const ConsistencyReport r = compare_routes(subject, q);
    if (!r.agree) res.routes_agree = false;
    reports.push_back(report_to_json(r, opt.compare_published));
    if (opt.compare_published && r.published && !*r.matches_published) {
      res.warnings.push_back(published_warning(r.subject, r.quantity, *r.published,
                                               route_value(r, r.route_values.begin()->second)));
    }
  }
  res.output["consistency"] = std::move(reports);
}

void add_diamond(json& out, const HodgeDiamond& d) {
  const int n = d.dim();
  out["hodge"] = hodge_to_json(d);
  out["middle_row"] = to_json(d.middle_row());
  out["middle_betti"] = to_json(d.betti(n));
  out["level"] = to_json(hodge_level(d, n));
  out["dim_J"] = to_json(n % 2 != 0 ? jacobian_dimension(d, (n + 1) / 2) : BigInt(0));
}

CommandResult run_ci(const json& p, const ExecOptions& opt) {
  const CompleteIntersection x(p.at("dim").get<int>(), int_list(p.at("degrees")));
  const bool any = p["jacobian"].get<bool>() || p["hodge"].get<bool>() || p["betti"].get<bool>() ||
                   p["euler"].get<bool>();
  auto want = [&](const char* key) { return !any || p[key].get<bool>(); };

  CommandResult res;
  json& out = res.output;
  out["label"] = x.to_string();
  out["dim"] = x.dim();
  out["degrees"] = x.degrees();
  out["ambient_dim"] = x.ambient_dim();

  if (want("euler")) {
    const BigInt by_formula = euler_characteristic(x);
    const BigInt by_series = euler_from_chern_series(x);
    if (by_formula != by_series) res.routes_agree = false;
    json series = json::array();
    const TruncSeries chern = chern_series(x);
    for (const auto& c : chern.coefficients()) series.push_back(to_json(c));
    out["chern_series"] = std::move(series);
    out["euler"] = to_json(by_formula);
    out["euler_routes"] = {{"formula", to_json(by_formula)}, {"chern_series", to_json(by_series)}};
  }
  if (want("betti")) {
    out["betti"] = to_json(betti_table(x).b);
    out["middle_betti"] = to_json(middle_betti(x));
  }
  if (want("hodge") || want("jacobian")) {
    const HodgeDiamond d = hodge_diamond(x);
    const int n = x.dim();
    if (want("hodge")) {
      out["hodge"] = hodge_to_json(d);
      out["middle_row"] = to_json(d.middle_row());
    }
    out["level"] = to_json(hodge_level(d, n));
    if (want("jacobian")) {
      const BigInt dim_j = n % 2 != 0 ? jacobian_dimension(d, (n + 1) / 2) : BigInt(0);
      out["dim_J"] = to_json(dim_j);
      if (opt.compare_published) {
        const std::string subject = subject_key_ci(x.dim(), x.degrees());
        if (auto claim = find_published_claim(subject, "jacobian_dim")) {
          const bool match = claim->value == dim_j;
          out["published"] = {{"quantity", "jacobian_dim"},
                              {"value", to_json(claim->value)},
                              {"source", claim->source},
                              {"matches_published", match}};
          if (!match) res.warnings.push_back(published_warning(subject, "jacobian_dim", *claim, to_json(dim_j)));
        }
      }
    }
  }
  return res;
}

CommandResult run_cover(const json& p, const ExecOptions& opt) {
  const CyclicCover c(p.at("n").get<int>(), p.at("m").get<int>(), p.at("b").get<int>());
  const WeightedHypersurface w = c.to_weighted();
  CommandResult res;
  json& out = res.output;
  out["label"] = c.to_string();
  out["base_dim"] = c.base_dim();
  out["order"] = c.order();
  out["branch_degree"] = c.branch_degree();
  out["weights"] = w.weights();
  out["degree"] = w.degree();
  out["euler"] = to_json(euler_via_cover(c));
  // Diamond from the Jacobian ring alone; agreement is reported below rather
  // than thrown, so a disagreement still yields a full report.
  add_diamond(out, hodge_diamond_wps(w));
  add_consistency(res, c, opt);
  return res;
}

CommandResult run_wps(const json& p, const ExecOptions& opt) {
  std::vector<long> weights;
  for (int v : int_list(p.at("weights"))) weights.push_back(v);
  const WeightedHypersurface w(std::move(weights), p.at("degree").get<int>());
  CommandResult res;
  json& out = res.output;
  out["label"] = w.to_string();
  out["weights"] = w.weights();
  out["degree"] = w.degree();
  out["dim"] = w.dim();
  out["weight_sum"] = w.weight_sum();
  const long top = milnor_top_degree(w);
  json poincare = json::array();
  if (top >= 0) {
    const TruncSeries series = milnor_poincare(w, static_cast<int>(top));
    for (const auto& c : series.coefficients()) poincare.push_back(to_json(c));
  }
  out["poincare"] = std::move(poincare);
  json prim = json::array();
  for (int q = 0; q <= w.dim(); ++q) prim.push_back(to_json(primitive_hodge(w, q)));
  out["primitive_hodge"] = std::move(prim);
  add_diamond(out, hodge_diamond_wps(w));
  if (w.all_weights_one()) add_consistency(res, w, opt);
  return res;
}

json closed_form_entry(const BigRat& published, const BigInt& computed) {
  return {{"published", to_json(published)}, {"computed", to_json(computed)},
          {"matches", published == BigRat(computed)}};
}

CommandResult run_fano(const json& p, const ExecOptions& opt) {
  fano::CoverTarget t{p.at("n").get<int>(), p.at("d").get<int>(), p.at("r").get<int>(),
                      p.at("m").get<int>()};
  const fano::FanoSchemeProfile prof = fano::profile(t);
  CommandResult res;
  json& out = res.output;
  out["label"] = t.to_string();
  out["n"] = t.n;
  out["d"] = t.d;
  out["r"] = t.r;
  out["m"] = t.m;
  out["branch_degree"] = t.branch_degree();
  out["gp_dim"] = to_json(prof.gp_dim);
  out["codim"] = to_json(prof.codim);
  out["delta"] = to_json(prof.delta);
  out["normal_chi"] = to_json(prof.normal_chi);
  out["verdict"] = fano::to_string(prof.verdict);
  const auto& c = prof.canonical;
  out["canonical"] = {{"a", to_json(c.a)},
                      {"b", to_json(c.b)},
                      {"grassmann_coeff", to_json(c.grassmann_coeff)},
                      {"fiber_coeff", to_json(c.fiber_coeff)},
                      {"positivity", fano::to_string(c.positivity)},
                      {"extrapolated", c.extrapolated}};
  if (prof.delta != prof.normal_chi) res.routes_agree = false;

  if (p["class"].get<bool>()) {
    std::optional<int> truncate;
    if (!p["truncate_at"].is_null()) truncate = p["truncate_at"].get<int>();
    const int budget = p["budget"].get<int>();
    if (budget < 1) throw InvalidArgument("budget must be positive");
    const fano::FanoClass fc = fano::fano_class(t, truncate, static_cast<std::size_t>(budget));
    json levels = json::array();
    for (const auto& l : fc.zeta_levels) levels.push_back(class_to_json(l));
    out["class"] = {{"grassmannian", fc.grassmannian->to_string()},
                    {"zeta_levels", std::move(levels)},
                    {"pushforward", class_to_json(fc.pushforward)},
                    {"expected_count", fc.expected_count ? to_json(*fc.expected_count) : json(nullptr)},
                    {"vanishes_by_dimension", fc.vanishes_by_dimension},
                    {"extrapolated", fc.extrapolated}};
  }

  if (opt.compare_published && t.m == 2) {
    out["closed_forms"] = {
        {"a", closed_form_entry(published_closed_form_a(t.r, t.d), c.a)},
        {"b", closed_form_entry(published_closed_form_b(t.r, t.d), c.b)},
        {"source", std::string(kClosedFormSource)}};
    for (const auto& w : fano::closed_form_discrepancies(t)) {
      res.warnings.push_back(make_warning(
          "closed_form_mismatch",
          t.to_string() + " " + w.quantity + ": computed " + to_string(w.computed) + ", published closed form " +
              to_string(w.published),
          {{"target", t.to_string()},
           {"quantity", w.quantity},
           {"computed", to_json(w.computed)},
           {"published", to_json(w.published)},
           {"source", w.source}}));
    }
  }
  return res;
}

CommandResult run_classify(const json& p) {
  const int max_dim = p.at("max_dim").get<int>();
  const int max_sum = p.at("max_degree_sum").get<int>();
  if (max_dim < 1 || max_sum < 0) throw InvalidArgument("classify needs max_dim >= 1 and max_degree_sum >= 0");
  const auto found = classify_level_one(max_dim, max_sum, p["include_even"].get<bool>());
  CommandResult res;
  json families = json::array();
  for (const auto& x : found) {
    const HodgeDiamond d = hodge_diamond(x);
    const int n = x.dim();
    families.push_back({{"dim", n},
                        {"degrees", x.degrees()},
                        {"ambient_dim", x.ambient_dim()},
                        {"label", x.to_string()},
                        {"middle_betti", to_json(d.betti(n))},
                        {"dim_J", to_json(n % 2 != 0 ? jacobian_dimension(d, (n + 1) / 2) : BigInt(0))}});
  }
  res.output["count"] = families.size();
  res.output["families"] = std::move(families);
  return res;
}

}  // namespace

json make_warning(std::string kind, std::string message, json detail) {
  return {{"kind", std::move(kind)}, {"message", std::move(message)}, {"detail", std::move(detail)}};
}

CommandResult execute(const Request& request, const ExecOptions& options) {
  const json& p = request.params;
  switch (request.command) {
    case Command::Ci: return run_ci(p, options);
    case Command::Cover: return run_cover(p, options);
    case Command::Wps: return run_wps(p, options);
    case Command::Fano: return run_fano(p, options);
    case Command::Classify: return run_classify(p);
    case Command::Check: return run_check_suite(p.at("suite").get<std::string>(), options);
  }
  throw UsageError("unknown command");
}

}  // namespace hodgecalc::cli
