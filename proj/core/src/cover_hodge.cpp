#include "hodgecalc/cover_hodge.hpp"

#include "hodgecalc/ci_invariants.hpp"
#include "hodgecalc/errors.hpp"

#include <numeric>

namespace hodgecalc {

WeightedHypersurface::WeightedHypersurface(std::vector<long> weights, long degree)
    : weights_(std::move(weights)), degree_(degree) {
  if (weights_.size() < 2) throw InvalidArgument("weighted hypersurface needs at least 2 weights");
  if (degree_ < 1) throw InvalidArgument("weighted hypersurface degree must be >= 1");
  for (long w : weights_) {
    if (w < 1) throw InvalidArgument("weights must be >= 1");
    if (degree_ <= w) {
      throw InvalidArgument("degree " + std::to_string(degree_) + " must exceed every weight (got " +
                            std::to_string(w) + ")");
    }
  }
}

WeightedHypersurface WeightedHypersurface::ordinary(int dim, long degree) {
  if (dim < 1) throw InvalidArgument("hypersurface dimension must be >= 1");
  return WeightedHypersurface(std::vector<long>(static_cast<std::size_t>(dim) + 2, 1), degree);
}

long WeightedHypersurface::weight_sum() const {
  return std::accumulate(weights_.begin(), weights_.end(), 0L);
}

bool WeightedHypersurface::all_weights_one() const {
  for (long w : weights_)
    if (w != 1) return false;
  return true;
}

std::string WeightedHypersurface::to_string() const {
  std::string s = "X_" + std::to_string(degree_) + " in P(";
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(weights_[i]);
  }
  return s + ")";
}

CyclicCover::CyclicCover(int base_dim, int order, long branch_degree)
    : base_dim_(base_dim), order_(order), branch_degree_(branch_degree) {
  if (base_dim_ < 1) throw InvalidArgument("cyclic cover base dimension must be >= 1");
  if (order_ < 2) throw InvalidArgument("cyclic cover order must be >= 2");
  if (branch_degree_ < order_ || branch_degree_ % order_ != 0) {
    throw InvalidArgument("branch degree must be a positive multiple of the cover order");
  }
}

WeightedHypersurface CyclicCover::to_weighted() const {
  std::vector<long> w(static_cast<std::size_t>(base_dim_) + 1, 1);
  w.push_back(twist());
  return WeightedHypersurface(std::move(w), branch_degree_);
}

std::string CyclicCover::to_string() const {
  return std::to_string(order_) + ":1 cover of P^" + std::to_string(base_dim_) +
         " branched in degree " + std::to_string(branch_degree_);
}

long milnor_top_degree(const WeightedHypersurface& w) {
  long top = 0;
  for (long wi : w.weights()) top += w.degree() - 2 * wi;
  return top;
}

TruncSeries milnor_poincare(const WeightedHypersurface& w, int order) {
  std::vector<long> num;
  std::vector<long> den;
  for (long wi : w.weights()) {
    // (1 - t^{D-w}) / (1 - t^w) is identically 1 when D = 2w.
    if (w.degree() == 2 * wi) continue;
    num.push_back(w.degree() - wi);
    den.push_back(wi);
  }
  return geometric_quotient_series(num, den, order);
}

BigInt primitive_hodge(const WeightedHypersurface& w, int q) {
  if (q < 0 || q > w.dim()) throw InvalidArgument("primitive_hodge: q outside [0, dim]");
  const long top = milnor_top_degree(w);
  const long k = (q + 1) * w.degree() - w.weight_sum();
  if (k < 0 || k > top) return 0;
  const TruncSeries s = milnor_poincare(w, static_cast<int>(k));
  return require_integer(s.coefficient(static_cast<int>(k)), "Jacobian ring dimension");
}

HodgeDiamond hodge_diamond_wps(const WeightedHypersurface& w) {
  const int n = w.dim();
  HodgeDiamond d(n);
  for (int p = 0; p <= n; ++p) d.set(p, p, 1);
  const long top = milnor_top_degree(w);
  const TruncSeries s = milnor_poincare(w, static_cast<int>(std::max(top, 0L)));
  for (int q = 0; q <= n; ++q) {
    const long k = (q + 1) * w.degree() - w.weight_sum();
    BigInt prim = 0;
    if (k >= 0 && k <= top) prim = require_integer(s.coefficient(static_cast<int>(k)), "Jacobian ring dimension");
    if (2 * q == n) prim += 1;
    d.set(n - q, q, std::move(prim));
  }
  return d;
}

BigInt euler_via_cover(const CyclicCover& c) {
  const int n = c.base_dim();
  // The branch locus of a cover of P^1 is a set of b points.
  const BigInt chi_branch = (n == 1) ? BigInt(c.branch_degree())
                                     : euler_characteristic(CompleteIntersection(
                                           n - 1, {static_cast<int>(c.branch_degree())}));
  return BigInt(c.order()) * (n + 1) - BigInt(c.order() - 1) * chi_branch;
}

BigInt middle_betti_via_euler(const CyclicCover& c) {
  const int n = c.base_dim();
  const int units = (n % 2 == 0) ? n : n + 1;
  BigInt b = euler_via_cover(c) - units;
  if (n % 2 != 0) b = -b;
  return b;
}

HodgeDiamond hodge_diamond_cover(const CyclicCover& c) {
  HodgeDiamond d = hodge_diamond_wps(c.to_weighted());
  d.check_lefschetz_shape();
  const BigInt euler_route = middle_betti_via_euler(c);
  if (d.betti(c.base_dim()) != euler_route) {
    throw ConsistencyError("Jacobian-ring and Euler routes disagree for " + c.to_string() + ": " +
                           d.betti(c.base_dim()).get_str() + " vs " + euler_route.get_str());
  }
  return d;
}

CoverLevel cover_level_and_jacobian(const CyclicCover& c) {
  const HodgeDiamond d = hodge_diamond_cover(c);
  const int n = c.base_dim();
  CoverLevel out;
  out.level = hodge_level(d, n);
  out.jacobian_dim = (n % 2 != 0) ? jacobian_dimension(d, (n + 1) / 2) : BigInt(0);
  return out;
}

std::string quantity_name(CoverQuantity q) {
  switch (q) {
    case CoverQuantity::MiddleBetti: return "middle_betti";
    case CoverQuantity::JacobianDimension: return "jacobian_dim";
    case CoverQuantity::MiddleLevel: return "middle_level";
  }
  return "unknown";
}

namespace {

BigInt jacobian_route_value(const HodgeDiamond& d, CoverQuantity q) {
  const int n = d.dim();
  switch (q) {
    case CoverQuantity::MiddleBetti: return d.betti(n);
    case CoverQuantity::JacobianDimension:
      return (n % 2 != 0) ? jacobian_dimension(d, (n + 1) / 2) : BigInt(0);
    case CoverQuantity::MiddleLevel: {
      const auto l = hodge_level(d, n);
      return l ? BigInt(*l) : BigInt(-1);
    }
  }
  return 0;
}

// Route values derived from a middle Betti number alone. The level cannot be
// read off b_n, so it only has the Jacobian-ring route.
std::optional<BigInt> betti_route_value(int n, const BigInt& b_mid, CoverQuantity q) {
  switch (q) {
    case CoverQuantity::MiddleBetti: return b_mid;
    case CoverQuantity::JacobianDimension:
      return (n % 2 != 0) ? BigInt(b_mid / 2) : BigInt(0);
    case CoverQuantity::MiddleLevel: return std::nullopt;
  }
  return std::nullopt;
}

void finish(ConsistencyReport& r) {
  r.agree = true;
  const BigInt* first = nullptr;
  for (const auto& [route, v] : r.route_values) {
    if (first && *first != v) r.agree = false;
    first = &v;
  }
  r.published = find_published_claim(r.subject, r.quantity);
  if (r.published && !r.route_values.empty()) {
    r.matches_published = r.published->value == r.route_values.begin()->second;
  }
}

}  // namespace

ConsistencyReport compare_routes(const CyclicCover& c, CoverQuantity q) {
  ConsistencyReport r;
  r.subject = subject_key_cover(c.base_dim(), c.order(), c.branch_degree());
  r.quantity = quantity_name(q);
  const HodgeDiamond d = hodge_diamond_wps(c.to_weighted());
  r.route_values["jacobian"] = jacobian_route_value(d, q);
  if (auto v = betti_route_value(c.base_dim(), middle_betti_via_euler(c), q)) r.route_values["euler"] = *v;
  finish(r);
  return r;
}

ConsistencyReport compare_routes(const WeightedHypersurface& w, CoverQuantity q) {
  if (!w.all_weights_one()) {
    throw InvalidArgument("only ordinary hypersurfaces have a second route: " + w.to_string());
  }
  const CompleteIntersection x(w.dim(), {static_cast<int>(w.degree())});
  ConsistencyReport r;
  r.subject = subject_key_ci(x.dim(), x.degrees());
  r.quantity = quantity_name(q);
  r.route_values["jacobian"] = jacobian_route_value(hodge_diamond_wps(w), q);
  if (q == CoverQuantity::MiddleLevel) {
    // chi_y route, computed without the internal Jacobian-ring cross-check.
    std::vector<BigInt> chi = chi_y_genus(x);
    HodgeDiamond d(x.dim());
    const int n = x.dim();
    for (int p = 0; p <= n; ++p) {
      const int qq = n - p;
      const BigInt sign_q = (qq % 2 == 0) ? 1 : -1;
      const BigInt sign_p = (p % 2 == 0) ? 1 : -1;
      d.set(p, qq, p == qq ? BigInt(sign_q * chi[static_cast<std::size_t>(p)])
                           : BigInt(sign_q * (chi[static_cast<std::size_t>(p)] - sign_p)));
    }
    r.route_values["chi_y"] = jacobian_route_value(d, q);
  } else if (auto v = betti_route_value(x.dim(), middle_betti(x), q)) {
    r.route_values["euler"] = *v;
  }
  finish(r);
  return r;
}

ConsistencyReport cross_validate(const CyclicCover& c, CoverQuantity q) {
  ConsistencyReport r = compare_routes(c, q);
  if (!r.agree) throw ConsistencyError("route disagreement on " + r.quantity + " for " + c.to_string());
  return r;
}

ConsistencyReport cross_validate(const WeightedHypersurface& w, CoverQuantity q) {
  ConsistencyReport r = compare_routes(w, q);
  if (!r.agree) throw ConsistencyError("route disagreement on " + r.quantity + " for " + w.to_string());
  return r;
}

}  // namespace hodgecalc
