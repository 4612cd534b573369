#pragma once

// Splitting-principle engine. A symmetric polynomial in formal Chern roots
// x_1..x_e is rewritten as a polynomial in the elementary symmetric
// functions c_1..c_e, truncated at a weighted degree bound.

#include "hodgecalc/exact.hpp"

#include <map>
#include <vector>

namespace hodgecalc::schubert {

/// Polynomial in c_1..c_e. A key holds the exponents (k_1, ..., k_e) of
/// c_1^{k_1} ... c_e^{k_e}; its weighted degree is sum i * k_i.
struct ChernPolynomial {
  int rank = 0;
  std::map<std::vector<int>, BigInt> terms;

  int weighted_degree(const std::vector<int>& exps) const;
};

/// Universal expressions for c_0, c_1, ..., c_N of the bundle whose Chern
/// roots are the linear forms roots[j] . x (x = the e roots of E). Classes
/// with degree above max_degree are not computed; the result has
/// min(N, max_degree) + 1 entries.
std::vector<ChernPolynomial> chern_of_linear_roots(int rank,
                                                   const std::vector<std::vector<int>>& roots,
                                                   int max_degree);

/// All exponent vectors a in N^rank with |a| = k, in lexicographically
/// decreasing order. These index the Chern roots of Sym^k.
std::vector<std::vector<int>> sym_power_exponents(int rank, int k);

}  // namespace hodgecalc::schubert
