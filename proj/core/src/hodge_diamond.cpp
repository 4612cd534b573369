#include "hodgecalc/hodge_diamond.hpp"

#include "hodgecalc/errors.hpp"

#include <cstdlib>
#include <sstream>

namespace hodgecalc {

BigInt BettiTable::euler() const {
  BigInt chi = 0;
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (k % 2 == 0)
      chi += b[k];
    else
      chi -= b[k];
  }
  return chi;
}

HodgeDiamond::HodgeDiamond(int dim) : dim_(dim) {
  if (dim < 0) throw InvalidArgument("Hodge diamond dimension must be >= 0");
  h_.assign(static_cast<std::size_t>((dim + 1) * (dim + 1)), BigInt(0));
}

std::size_t HodgeDiamond::index(int p, int q) const {
  if (p < 0 || q < 0 || p > dim_ || q > dim_) {
    throw InvalidArgument("Hodge index (" + std::to_string(p) + "," + std::to_string(q) +
                          ") outside dimension " + std::to_string(dim_));
  }
  return static_cast<std::size_t>(p * (dim_ + 1) + q);
}

const BigInt& HodgeDiamond::h(int p, int q) const { return h_[index(p, q)]; }

void HodgeDiamond::set(int p, int q, BigInt value) { h_[index(p, q)] = std::move(value); }

BigInt HodgeDiamond::betti(int k) const {
  if (k < 0 || k > 2 * dim_) throw InvalidArgument("Betti degree out of range");
  BigInt b = 0;
  for (int p = 0; p <= dim_; ++p) {
    const int q = k - p;
    if (q >= 0 && q <= dim_) b += h(p, q);
  }
  return b;
}

BettiTable HodgeDiamond::betti_table() const {
  BettiTable t;
  for (int k = 0; k <= 2 * dim_; ++k) t.b.push_back(betti(k));
  return t;
}

BigInt HodgeDiamond::euler() const { return betti_table().euler(); }

std::vector<BigInt> HodgeDiamond::middle_row() const {
  std::vector<BigInt> row;
  for (int q = 0; q <= dim_; ++q) row.push_back(h(dim_ - q, q));
  return row;
}

void HodgeDiamond::check_symmetries() const {
  for (int p = 0; p <= dim_; ++p) {
    for (int q = 0; q <= dim_; ++q) {
      const auto where = "h^{" + std::to_string(p) + "," + std::to_string(q) + "}";
      if (h(p, q) < 0) throw ConsistencyError("negative Hodge number " + where);
      if (h(p, q) != h(q, p)) throw ConsistencyError("Hodge symmetry fails at " + where);
      if (h(p, q) != h(dim_ - p, dim_ - q)) throw ConsistencyError("Serre symmetry fails at " + where);
    }
  }
}

void HodgeDiamond::check_lefschetz_shape() const {
  check_symmetries();
  for (int p = 0; p <= dim_; ++p) {
    for (int q = 0; q <= dim_; ++q) {
      if (p + q == dim_) continue;
      if (h(p, q) != (p == q ? 1 : 0)) {
        throw ConsistencyError("off-middle Hodge number h^{" + std::to_string(p) + "," +
                               std::to_string(q) + "} = " + h(p, q).get_str());
      }
    }
  }
}

std::string HodgeDiamond::to_string() const {
  std::ostringstream os;
  for (int k = 0; k <= 2 * dim_; ++k) {
    os << "  H^" << k << ":";
    for (int p = std::min(k, dim_); p >= 0 && k - p <= dim_; --p) os << " " << h(p, k - p).get_str();
    os << "\n";
  }
  return os.str();
}

std::optional<int> hodge_level(const HodgeDiamond& d, int k) {
  if (k < 0 || k > 2 * d.dim()) throw InvalidArgument("hodge_level: degree out of range");
  std::optional<int> level;
  for (int p = 0; p <= d.dim(); ++p) {
    const int q = k - p;
    if (q < 0 || q > d.dim() || d.h(p, q) == 0) continue;
    const int l = std::abs(p - q);
    if (!level || l > *level) level = l;
  }
  return level;
}

std::optional<int> variety_level(const HodgeDiamond& d) {
  std::optional<int> level;
  for (int k = 0; k <= 2 * d.dim(); ++k) {
    const auto l = hodge_level(d, k);
    if (l && (!level || *l > *level)) level = l;
  }
  return level;
}

BigInt jacobian_dimension(const HodgeDiamond& d, int i) {
  if (i < 1 || i > d.dim()) throw InvalidArgument("jacobian_dimension: index out of range");
  const int k = 2 * i - 1;
  BigInt dim = 0;
  for (int p = i; p <= d.dim(); ++p) {
    const int q = k - p;
    if (q >= 0 && q <= d.dim()) dim += d.h(p, q);
  }
  return dim;
}

}  // namespace hodgecalc
