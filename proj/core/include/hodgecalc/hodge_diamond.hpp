#pragma once

#include "hodgecalc/exact.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hodgecalc {

/// Betti numbers b_0 .. b_{2n}.
struct BettiTable {
  std::vector<BigInt> b;

  int top_degree() const noexcept { return static_cast<int>(b.size()) - 1; }
  /// Alternating sum of the Betti numbers.
  BigInt euler() const;
  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// Table of Hodge numbers h^{p,q}, 0 <= p,q <= dim, of a smooth projective
/// variety.
class HodgeDiamond {
public:
  explicit HodgeDiamond(int dim);

  int dim() const noexcept { return dim_; }
  const BigInt& h(int p, int q) const;
  void set(int p, int q, BigInt value);

  /// b_k = sum_{p+q=k} h^{p,q}.
  BigInt betti(int k) const;
  BettiTable betti_table() const;
  BigInt euler() const;

  /// (h^{n,0}, h^{n-1,1}, ..., h^{0,n}).
  std::vector<BigInt> middle_row() const;

  /// Throws ConsistencyError unless h^{p,q} = h^{q,p}, h^{p,q} = h^{n-p,n-q}
  /// and all entries are non-negative.
  void check_symmetries() const;
  /// Additionally requires h^{p,q} = [p == q] off the middle row, the shape
  /// forced by weak Lefschetz for hypersurfaces and complete intersections.
  void check_lefschetz_shape() const;

  std::string to_string() const;

  friend bool operator==(const HodgeDiamond&, const HodgeDiamond&) = default;

private:
  std::size_t index(int p, int q) const;

  int dim_;
  std::vector<BigInt> h_;
};

/// Level of the weight-k Hodge structure: max |p - q| over nonzero h^{p,q}
/// with p + q = k. std::nullopt stands for an empty Hodge structure (H^k = 0).
std::optional<int> hodge_level(const HodgeDiamond& d, int k);

/// Maximum level over all non-empty degrees.
std::optional<int> variety_level(const HodgeDiamond& d);

/// Dimension of the intermediate Jacobian J^{2i-1}: sum over p >= i of
/// h^{p, 2i-1-p}, i.e. b_{2i-1} / 2. Requires 1 <= i <= dim.
BigInt jacobian_dimension(const HodgeDiamond& d, int i);

}  // namespace hodgecalc
