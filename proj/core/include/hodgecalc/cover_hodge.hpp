#pragma once

// Hodge numbers of quasi-smooth hypersurfaces in weighted projective space
// via the graded Jacobian ring, and of cyclic covers of P^n modeled as such
// hypersurfaces. Quasi-smoothness of the generic member is assumed, not
// checked: the inputs carry no polynomial data.

#include "hodgecalc/exact.hpp"
#include "hodgecalc/hodge_diamond.hpp"
#include "hodgecalc/published_claims.hpp"
#include "hodgecalc/series.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hodgecalc {

/// Generic degree-D hypersurface in P(w_0, ..., w_N). Dimension N - 1.
class WeightedHypersurface {
public:
  /// Requires N >= 1 (two weights give a finite set of points), every
  /// w_i >= 1 and D > w_i for all i.
  WeightedHypersurface(std::vector<long> weights, long degree);

  /// Weights (1^{n+2}) and the given degree: an ordinary hypersurface in P^{n+1}.
  static WeightedHypersurface ordinary(int dim, long degree);

  const std::vector<long>& weights() const noexcept { return weights_; }
  long degree() const noexcept { return degree_; }
  int dim() const noexcept { return static_cast<int>(weights_.size()) - 2; }
  long weight_sum() const;
  bool all_weights_one() const;
  std::string to_string() const;

  friend bool operator==(const WeightedHypersurface&, const WeightedHypersurface&) = default;

private:
  std::vector<long> weights_;
  long degree_;
};

/// m:1 cyclic cover of P^n totally branched along a smooth hypersurface of
/// degree b = m * d. Modeled as the degree-b hypersurface y^m = f(x) in
/// P(1^{n+1}, d).
class CyclicCover {
public:
  CyclicCover(int base_dim, int order, long branch_degree);

  int base_dim() const noexcept { return base_dim_; }
  int order() const noexcept { return order_; }
  long branch_degree() const noexcept { return branch_degree_; }
  /// d = b / m, the weight of the extra coordinate.
  long twist() const noexcept { return branch_degree_ / order_; }

  WeightedHypersurface to_weighted() const;
  std::string to_string() const;

  friend bool operator==(const CyclicCover&, const CyclicCover&) = default;

private:
  int base_dim_;
  int order_;
  long branch_degree_;
};

/// Degree of the top nonzero term of the Jacobian-ring Poincare series,
/// sum_i (D - 2 w_i).
long milnor_top_degree(const WeightedHypersurface& w);

/// prod_i (1 - t^{D - w_i}) / (1 - t^{w_i}) to the given order.
TruncSeries milnor_poincare(const WeightedHypersurface& w, int order);

/// h^{n-q,q}_prim = coefficient of t^{(q+1)D - sum w_i} in the Poincare series
/// (0 when that degree falls outside [0, top]). Requires 0 <= q <= n.
BigInt primitive_hodge(const WeightedHypersurface& w, int q);

/// Diamond from the Jacobian-ring route alone: h^{p,p} = 1 off the middle,
/// middle row from primitive_hodge, plus one for the hyperplane class when
/// the dimension is even.
HodgeDiamond hodge_diamond_wps(const WeightedHypersurface& w);

/// chi(X) = m * chi(P^n) - (m - 1) * chi(B) with B the branch hypersurface.
BigInt euler_via_cover(const CyclicCover& c);

/// b_n obtained from euler_via_cover and the unit off-middle Betti numbers.
BigInt middle_betti_via_euler(const CyclicCover& c);

/// Jacobian-ring diamond, checked against the Euler route; throws
/// ConsistencyError on disagreement.
HodgeDiamond hodge_diamond_cover(const CyclicCover& c);

struct CoverLevel {
  std::optional<int> level;  // level of the middle Hodge structure; nullopt if empty
  BigInt jacobian_dim;       // dim of the middle intermediate Jacobian (0 for even n)
};

CoverLevel cover_level_and_jacobian(const CyclicCover& c);

enum class CoverQuantity { MiddleBetti, JacobianDimension, MiddleLevel };

std::string quantity_name(CoverQuantity q);

/// Multi-route record for one quantity. `agree` is true when every route
/// produced the same value. `matches_published` is set only when a published
/// claim exists for the subject and quantity.
struct ConsistencyReport {
  std::string subject;
  std::string quantity;
  std::map<std::string, BigInt> route_values;
  bool agree = false;
  std::optional<PublishedClaim> published;
  std::optional<bool> matches_published;
};

/// Computes every available route for the quantity without throwing on
/// disagreement.
ConsistencyReport compare_routes(const CyclicCover& c, CoverQuantity q);

/// Routes for an ordinary hypersurface (all weights 1): Jacobian ring versus
/// the complete-intersection route. Throws InvalidArgument for other weights.
ConsistencyReport compare_routes(const WeightedHypersurface& w, CoverQuantity q);

/// compare_routes, then ConsistencyError if the routes disagree. A mismatch
/// against a published value is reported in the result, never thrown.
ConsistencyReport cross_validate(const CyclicCover& c,
                                 CoverQuantity q = CoverQuantity::MiddleBetti);
ConsistencyReport cross_validate(const WeightedHypersurface& w,
                                 CoverQuantity q = CoverQuantity::MiddleBetti);

}  // namespace hodgecalc
