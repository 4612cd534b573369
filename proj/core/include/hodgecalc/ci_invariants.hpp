#pragma once

// Topological and Hodge invariants of smooth complete intersections
// X_{(d_1,...,d_r)} of dimension n in P^{n+r}.

#include "hodgecalc/exact.hpp"
#include "hodgecalc/hodge_diamond.hpp"
#include "hodgecalc/series.hpp"

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace hodgecalc {

/// A smooth complete intersection given by its dimension and multidegree.
///
/// Degree-1 equations are removed on construction together with one ambient
/// dimension, so X_{(1,3)} in P^5 and X_{(3)} in P^4 are the same value.
/// Degrees are kept sorted ascending. An empty multidegree is P^n itself.
class CompleteIntersection {
public:
  CompleteIntersection(int dim, std::vector<int> degrees);

  int dim() const noexcept { return dim_; }
  const std::vector<int>& degrees() const noexcept { return degrees_; }
  int codim() const noexcept { return static_cast<int>(degrees_.size()); }
  int ambient_dim() const noexcept { return dim_ + codim(); }
  /// Product of the degrees: the degree of X in its ambient space.
  BigInt degree() const;
  int degree_sum() const;

  std::string to_string() const;

  friend bool operator==(const CompleteIntersection&, const CompleteIntersection&) = default;
  friend std::strong_ordering operator<=>(const CompleteIntersection& a,
                                          const CompleteIntersection& b) {
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    return a.degrees_ <=> b.degrees_;
  }

private:
  int dim_;
  std::vector<int> degrees_;
};

/// (-1)^k times the complete homogeneous symmetric polynomial of degree k
/// in the given degrees. p_0 = 1.
BigInt signed_power_sum(int k, std::span<const int> degrees);

/// (1+h)^{n+r+1} / prod (1 + d_i h), truncated at order n: the total Chern
/// class of T_X in powers of the hyperplane class.
TruncSeries chern_series(const CompleteIntersection& x);

/// chi(X) = (prod d_i) * sum_{i=0}^{n} C(n+r+1, i) p_{n-i}(d).
BigInt euler_characteristic(const CompleteIntersection& x);

/// chi(X) as (prod d_i) times the top coefficient of chern_series(X).
BigInt euler_from_chern_series(const CompleteIntersection& x);

/// b_n(X). The off-middle Betti numbers are 1 in even degree and 0 in odd
/// degree, so b_n is fixed by requiring the alternating sum to be chi(X).
/// Throws ConsistencyError if the result would be negative.
BigInt middle_betti(const CompleteIntersection& x);

BettiTable betti_table(const CompleteIntersection& x);

/// Coefficients chi^p = sum_q (-1)^q h^{p,q}, p = 0..n, of the Hirzebruch
/// chi_y genus. Computed from the normalized characteristic power series
/// Q_y(x) = x(1+y)/(1 - e^{-x(1+y)}) - xy evaluated at y = 0..n and
/// interpolated back to a polynomial in y.
std::vector<BigInt> chi_y_genus(const CompleteIntersection& x);

/// Full Hodge diamond. Cross-checked against the Betti route, the Lefschetz
/// shape and, for hypersurfaces, the Jacobian-ring route; any disagreement
/// throws ConsistencyError.
HodgeDiamond hodge_diamond(const CompleteIntersection& x);

/// Exhaustive search over odd n in [3, max_dim] and multidegrees with entries
/// >= 2 summing to at most max_degree_sum. Keeps X when H^n(X) != 0 and its
/// level is at most 1. With include_even, even n are searched as well
/// (informational only). Output is sorted.
std::vector<CompleteIntersection> classify_level_one(int max_dim, int max_degree_sum,
                                                     bool include_even = false);

}  // namespace hodgecalc
