#include "hodgecalc_cli/check_suite.hpp"

#include "hodgecalc/ci_invariants.hpp"
#include "hodgecalc/cover_hodge.hpp"
#include "hodgecalc/errors.hpp"
#include "hodgecalc/fano_planes.hpp"
#include "hodgecalc/parallel.hpp"
#include "hodgecalc/proj_bundle.hpp"
#include "hodgecalc/published_claims.hpp"
#include "hodgecalc_cli/json_util.hpp"

#include <functional>
#include <set>

namespace hodgecalc::cli {

namespace {

using namespace hodgecalc::schubert;

struct Check {
  std::string group;
  std::string name;
  std::function<json(bool&)> body;  // sets the flag, returns detail
};

json record(const Check& c) {
  bool passed = false;
  json detail;
  try {
    detail = c.body(passed);
  } catch (const std::exception& e) {
    passed = false;
    detail = {{"error", e.what()}};
  }
  return {{"group", c.group}, {"name", c.name}, {"passed", passed}, {"detail", std::move(detail)}};
}

json routes_json(const ConsistencyReport& r) {
  json out = json::object();
  for (const auto& [label, v] : r.route_values) out[label] = to_json(v);
  return out;
}

void add_ci_cover_checks(std::vector<Check>& out) {
  for (int n = 1; n <= 7; ++n) {
    for (int deg = 2; deg <= 6; ++deg) {
      out.push_back({"ci_cover_agreement", "X_(" + std::to_string(deg) + ") n=" + std::to_string(n),
                     [n, deg](bool& ok) {
                       const auto w = WeightedHypersurface::ordinary(n, deg);
                       json routes = json::object();
                       ok = true;
                       for (auto q : {CoverQuantity::MiddleBetti, CoverQuantity::JacobianDimension,
                                      CoverQuantity::MiddleLevel}) {
                         const auto r = compare_routes(w, q);
                         ok = ok && r.agree;
                         routes[r.quantity] = routes_json(r);
                       }
                       const bool same = hodge_diamond(CompleteIntersection(n, {deg})) == hodge_diamond_wps(w);
                       ok = ok && same;
                       return json{{"routes", routes}, {"diamonds_equal", same}};
                     }});
    }
  }
}

void add_ci_euler_check(std::vector<Check>& out) {
  out.push_back({"ci_euler_routes", "formula vs chern series, n<=9, sum(d)<=12", [](bool& ok) {
                   std::vector<std::vector<int>> multidegrees{{}};
                   // Multidegrees with entries >= 2, nondecreasing, sum <= 12.
                   for (std::size_t i = 0; i < multidegrees.size(); ++i) {
                     const auto base = multidegrees[i];
                     int sum = 0;
                     for (int d : base) sum += d;
                     for (int d = base.empty() ? 2 : base.back(); sum + d <= 12; ++d) {
                       auto next = base;
                       next.push_back(d);
                       multidegrees.push_back(std::move(next));
                     }
                   }
                   json failures = json::array();
                   std::size_t count = 0;
                   for (int n = 1; n <= 9; ++n) {
                     for (const auto& degs : multidegrees) {
                       const CompleteIntersection x(n, degs);
                       ++count;
                       const BigInt a = euler_characteristic(x);
                       const BigInt b = euler_from_chern_series(x);
                       if (a != b || betti_table(x).euler() != a) failures.push_back(x.to_string());
                     }
                   }
                   ok = failures.empty();
                   return json{{"instances", count}, {"failures", failures}};
                 }});
}

void add_cover_sweep(std::vector<Check>& out) {
  for (int n = 1; n <= 5; ++n) {
    for (int b : {2, 4, 6, 8}) {
      out.push_back({"cover_euler_jacobian",
                     "n=" + std::to_string(n) + " m=2 b=" + std::to_string(b), [n, b](bool& ok) {
                       const auto r = compare_routes(CyclicCover(n, 2, b), CoverQuantity::MiddleBetti);
                       ok = r.agree;
                       return json{{"quantity", r.quantity}, {"routes", routes_json(r)}};
                     }});
    }
  }
}

void add_fano_sweep(std::vector<Check>& out) {
  out.push_back({"fano_delta", "delta = gp_dim - codim = chi(N), n<=8 d<=4 r<=3 m in {2,3}",
                 [](bool& ok) {
                   json failures = json::array();
                   std::size_t count = 0;
                   for (int n = 2; n <= 8; ++n)
                     for (int d = 1; d <= 4; ++d)
                       for (int r = 1; r <= 3 && r < n; ++r)
                         for (int m : {2, 3}) {
                           const fano::CoverTarget t{n, d, r, m};
                           ++count;
                           const BigInt delta = fano::expected_dimension(t);
                           bool good = delta == fano::gp_dimension(t) - fano::incidence_codimension(t);
                           try {
                             good = good && fano::normal_bundle_euler(t) == delta;
                           } catch (const ConsistencyError&) {
                             good = false;
                           }
                           if (!good) failures.push_back(t.to_string());
                         }
                   ok = failures.empty();
                   return json{{"instances", count}, {"failures", failures}};
                 }});
}

void add_schubert_checks(std::vector<Check>& out) {
  const std::string g = "schubert";
  out.push_back({g, "pushforward normalization on P(O + Sym^2 S^dual) over G(1,3)", [](bool& ok) {
                   auto ring = GrassmannRing::create(1, 3);
                   const BundleData e =
                       direct_sum(trivial_bundle(ring, 1), sym_power_chern(dual_subbundle(ring), 2));
                   auto p = ProjBundleRing::create(e);
                   const int rank = e.rank;
                   auto zeta_pow = [&](int k) {
                     std::vector<GrassmannClass> levels(static_cast<std::size_t>(k) + 1,
                                                        GrassmannClass::zero(ring));
                     levels.back() = GrassmannClass::one(ring);
                     return p->reduce(p->raw(std::move(levels)));
                   };
                   const bool top = proj_pushforward(zeta_pow(rank - 1)) == GrassmannClass::one(ring);
                   const bool below = proj_pushforward(zeta_pow(rank - 2)).is_zero();
                   const bool first = proj_pushforward(zeta_pow(rank)) == -e.c(1);
                   ok = top && below && first;
                   return json{{"push_zeta_e_minus_1_is_1", top},
                               {"push_zeta_e_minus_2_is_0", below},
                               {"push_zeta_e_is_minus_c1", first}};
                 }});
  out.push_back({g, "Whitney c(S)c(Q) = 1 for n <= 6", [](bool& ok) {
                   json failures = json::array();
                   std::size_t count = 0;
                   for (int n = 1; n <= 6; ++n)
                     for (int r = 0; r < n; ++r) {
                       auto ring = GrassmannRing::create(r, n);
                       const auto [s, q] = tautological_bundles(ring);
                       ++count;
                       if (s.total() * q.total() != GrassmannClass::one(ring)) failures.push_back(ring->to_string());
                     }
                   ok = failures.empty();
                   return json{{"rings", count}, {"failures", failures}};
                 }});
  out.push_back({g, "segre inverse c(E)s(E) = 1 on G(1,4)", [](bool& ok) {
                   auto ring = GrassmannRing::create(1, 4);
                   const auto [s, q] = tautological_bundles(ring);
                   const std::vector<BundleData> bundles{s, q, dual_subbundle(ring),
                                                         sym_power_chern(dual_subbundle(ring), 2)};
                   ok = true;
                   for (const auto& e : bundles) {
                     GrassmannClass total_s = GrassmannClass::zero(ring);
                     for (const auto& c : e.segre(ring->dimension())) total_s += c;
                     ok = ok && e.total() * total_s == GrassmannClass::one(ring);
                   }
                   return json{{"bundles", bundles.size()}};
                 }});
  out.push_back({g, "sigma_1^4 = 2 sigma_22 in G(1,3)", [](bool& ok) {
                   auto ring = GrassmannRing::create(1, 3);
                   const auto p = GrassmannClass::special(ring, 1).pow(4);
                   ok = p == GrassmannClass::sigma(ring, Partition{2, 2}, 2);
                   return json{{"product", class_to_json(p)}};
                 }});
  out.push_back({g, "c_4(Sym^3 S^dual) on G(1,3) = 27", [](bool& ok) {
                   auto ring = GrassmannRing::create(1, 3);
                   const BigInt v = sym_power_chern(dual_subbundle(ring), 3).c(4).integral();
                   ok = v == 27;
                   return json{{"value", to_json(v)}, {"expected", 27}};
                 }});
  out.push_back({g, "expected count at (n,d,r,m) = (2,2,1,2) is 56", [](bool& ok) {
                   const auto fc = fano::fano_class({2, 2, 1, 2});
                   ok = fc.expected_count && *fc.expected_count == 56;
                   return json{{"value", fc.expected_count ? to_json(*fc.expected_count) : json(nullptr)},
                               {"expected", 56}};
                 }});
  out.push_back({g, "Littlewood-Richardson vs Pieri on G(2,5)", [](bool& ok) {
                   auto ring = GrassmannRing::create(2, 5);
                   const std::size_t rank = ring->rank();
                   const auto mismatch = parallel_map(rank, [&](std::size_t i) {
                     std::size_t bad = 0;
                     const auto a = GrassmannClass::sigma(ring, ring->basis_element(i));
                     for (std::size_t j = 0; j < rank; ++j) {
                       const auto b = GrassmannClass::sigma(ring, ring->basis_element(j));
                       if (lr_multiply(a, b) != pieri_multiply(a, b)) ++bad;
                     }
                     return bad;
                   });
                   std::size_t bad = 0;
                   for (auto m : mismatch) bad += m;
                   ok = bad == 0;
                   return json{{"pairs", rank * rank}, {"mismatches", bad}};
                 }});
  out.push_back({g, "det Sym multipliers match r=1 closed forms, d<=6", [](bool& ok) {
                   json failures = json::array();
                   for (int d = 1; d <= 6; ++d) {
                     if (det_sym_multiplier(2, d) != d * (d + 1) / 2 ||
                         det_sym_multiplier(2, 2 * d) != d * (2 * d + 1))
                       failures.push_back(d);
                   }
                   ok = failures.empty();
                   return json{{"failures", failures}};
                 }});
}

void add_classification_check(std::vector<Check>& out) {
  out.push_back({"classification", "level one, max_dim=11, max_degree_sum=8", [](bool& ok) {
                   std::set<CompleteIntersection> expected{
                       CompleteIntersection(3, {3}), CompleteIntersection(3, {4}),
                       CompleteIntersection(3, {2, 3}), CompleteIntersection(5, {3})};
                   for (int n = 3; n <= 11; n += 2) {
                     expected.insert(CompleteIntersection(n, {2, 2}));
                     expected.insert(CompleteIntersection(n, {2, 2, 2}));
                   }
                   const auto found = classify_level_one(11, 8);
                   const std::set<CompleteIntersection> got(found.begin(), found.end());
                   ok = got == expected && got.size() == found.size();
                   json labels = json::array();
                   for (const auto& x : found) labels.push_back(x.to_string());
                   return json{{"found", labels}, {"expected_count", expected.size()}};
                 }});
}

std::vector<json> published_warnings() {
  std::vector<json> out;
  const CyclicCover c(5, 2, 4);
  for (auto q : {CoverQuantity::MiddleBetti, CoverQuantity::JacobianDimension, CoverQuantity::MiddleLevel}) {
    const auto r = compare_routes(c, q);
    if (r.published && !*r.matches_published) {
      const BigInt& v = r.route_values.begin()->second;
      out.push_back(make_warning("published_mismatch",
                                 r.subject + " " + r.quantity + ": computed " + to_string(v) + ", published " +
                                     to_string(r.published->value),
                                 {{"subject", r.subject},
                                  {"quantity", r.quantity},
                                  {"computed", to_json(v)},
                                  {"published", to_json(r.published->value)},
                                  {"source", r.published->source}}));
    }
  }
  for (int r = 2; r <= 3; ++r)
    for (int d = 1; d <= 4; ++d) {
      const fano::CoverTarget t{r + 2, d, r, 2};
      for (const auto& w : fano::closed_form_discrepancies(t)) {
        out.push_back(make_warning("closed_form_mismatch",
                                   "r=" + std::to_string(r) + " d=" + std::to_string(d) + " " + w.quantity +
                                       ": computed " + to_string(w.computed) + ", published closed form " +
                                       to_string(w.published),
                                   {{"r", r},
                                    {"d", d},
                                    {"quantity", w.quantity},
                                    {"computed", to_json(w.computed)},
                                    {"published", to_json(w.published)},
                                    {"source", w.source}}));
      }
    }
  return out;
}

}  // namespace

std::vector<std::string_view> check_suite_names() { return {"default"}; }

CommandResult run_check_suite(std::string_view suite, const ExecOptions& options) {
  if (suite != "default") throw UsageError("unknown check suite '" + std::string(suite) + "'");
  std::vector<Check> checks;
  add_ci_cover_checks(checks);
  add_ci_euler_check(checks);
  add_cover_sweep(checks);
  add_fano_sweep(checks);
  add_schubert_checks(checks);
  add_classification_check(checks);

  const auto records = parallel_map(checks.size(), [&](std::size_t i) { return record(checks[i]); });

  CommandResult res;
  std::size_t passed = 0;
  json list = json::array();
  for (const auto& r : records) {
    if (r["passed"].get<bool>()) ++passed;
    list.push_back(r);
  }
  res.routes_agree = passed == records.size();
  res.output = {{"suite", std::string(suite)},
                {"checks", std::move(list)},
                {"summary", {{"total", records.size()}, {"passed", passed}, {"failed", records.size() - passed}}}};
  if (options.compare_published) res.warnings = published_warnings();
  return res;
}

}  // namespace hodgecalc::cli
