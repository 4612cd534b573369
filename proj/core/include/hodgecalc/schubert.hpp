#pragma once

// Intersection theory on the Grassmannian G(r, n) of r-planes in P^n.
//
// Conventions. S is the rank r+1 tautological subbundle, Q = V/S the rank
// n-r quotient. Schubert classes sigma_lambda are indexed by partitions in the
// (r+1) x (n-r) box: at most r+1 rows, each of length at most n-r. The special
// classes are c_i(Q) = sigma_i and c_i(S^dual) = sigma_{1^i}, so sigma_lambda
// is the Schur polynomial s_lambda in the Chern roots of S^dual.

#include "hodgecalc/exact.hpp"
#include "hodgecalc/partition.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hodgecalc::schubert {

/// Littlewood-Richardson expansion of s_lambda * s_mu. When a box is given,
/// shapes that do not fit are dropped.
std::map<Partition, BigInt> lr_coefficients(const Partition& lambda, const Partition& mu,
                                            std::optional<Box> box = std::nullopt);

class GrassmannRing;
using RingPtr = std::shared_ptr<const GrassmannRing>;

/// Basis and multiplication table of H^*(G(r, n), Z).
///
/// Structure constants are computed on first use and cached; the cache is
/// guarded, so a ring may be shared across threads.
class GrassmannRing {
public:
  static RingPtr create(int r, int n);

  int plane_dim() const noexcept { return r_; }
  int ambient_dim() const noexcept { return n_; }
  Box box() const noexcept { return {r_ + 1, n_ - r_}; }
  /// Complex dimension (r+1)(n-r).
  int dimension() const noexcept { return (r_ + 1) * (n_ - r_); }
  std::size_t rank() const noexcept { return basis_.size(); }

  const std::vector<Partition>& basis() const noexcept { return basis_; }
  const Partition& basis_element(std::size_t i) const { return basis_.at(i); }
  std::optional<std::size_t> index_of(const Partition& p) const;
  std::size_t top_index() const noexcept { return basis_.size() - 1; }

  using Terms = std::vector<std::pair<std::size_t, BigInt>>;
  /// sigma_i * sigma_j in the basis.
  const Terms& product_terms(std::size_t i, std::size_t j) const;

  std::string to_string() const;

private:
  GrassmannRing(int r, int n);

  int r_;
  int n_;
  std::vector<Partition> basis_;
  std::map<Partition, std::size_t> index_;
  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<std::size_t, Terms> cache_;
};

/// Integral combination of Schubert classes on one ring.
class GrassmannClass {
public:
  explicit GrassmannClass(RingPtr ring);

  static GrassmannClass zero(RingPtr ring) { return GrassmannClass(std::move(ring)); }
  static GrassmannClass one(RingPtr ring);
  /// coeff * sigma_lambda; zero if lambda does not fit the box.
  static GrassmannClass sigma(RingPtr ring, const Partition& lambda, const BigInt& coeff = 1);
  /// Special class sigma_k = c_k(Q).
  static GrassmannClass special(RingPtr ring, int k);
  /// sigma_{1^k} = c_k(S^dual).
  static GrassmannClass special_column(RingPtr ring, int k);

  const RingPtr& ring() const noexcept { return ring_; }
  /// Nonzero coefficients keyed by basis index.
  const std::map<std::size_t, BigInt>& by_index() const noexcept { return terms_; }
  std::vector<std::pair<Partition, BigInt>> terms() const;
  BigInt coefficient(const Partition& lambda) const;
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Degree-k component.
  GrassmannClass part(int degree) const;
  /// Coefficient of the point class sigma_box.
  BigInt integral() const;

  GrassmannClass operator-() const;
  GrassmannClass& operator+=(const GrassmannClass& o);
  GrassmannClass& operator-=(const GrassmannClass& o);
  GrassmannClass& operator*=(const BigInt& c);
  GrassmannClass& operator*=(const GrassmannClass& o);

  friend GrassmannClass operator+(GrassmannClass a, const GrassmannClass& b) { return a += b; }
  friend GrassmannClass operator-(GrassmannClass a, const GrassmannClass& b) { return a -= b; }
  friend GrassmannClass operator*(GrassmannClass a, const BigInt& c) { return a *= c; }
  friend GrassmannClass operator*(const BigInt& c, GrassmannClass a) { return a *= c; }
  friend GrassmannClass operator*(const GrassmannClass& a, const GrassmannClass& b);
  friend bool operator==(const GrassmannClass& a, const GrassmannClass& b);

  GrassmannClass pow(unsigned e) const;
  std::string to_string() const;

private:
  void add_term(std::size_t idx, const BigInt& c);
  void require_same_ring(const GrassmannClass& o) const;

  RingPtr ring_;
  std::map<std::size_t, BigInt> terms_;
};

/// Product through the cached Littlewood-Richardson table.
GrassmannClass lr_multiply(const GrassmannClass& a, const GrassmannClass& b);

/// a * sigma_k by the Pieri rule (horizontal strips).
GrassmannClass pieri_row(const GrassmannClass& a, int k);
/// a * sigma_{1^k} by the dual Pieri rule (vertical strips).
GrassmannClass pieri_column(const GrassmannClass& a, int k);
/// a * b computed without the LR table: each sigma_mu in b is expanded by
/// Jacobi-Trudi into products of special classes, applied with Pieri.
GrassmannClass pieri_multiply(const GrassmannClass& a, const GrassmannClass& b);

/// Chern data of a vector bundle on a Grassmannian: c_1 .. c_rank.
struct BundleData {
  int rank = 0;
  std::vector<GrassmannClass> chern;  // chern[i-1] = c_i

  BundleData(int rank, std::vector<GrassmannClass> chern);

  const RingPtr& ring() const { return chern.front().ring(); }
  /// c_i with c_0 = 1 and c_i = 0 outside [0, rank].
  GrassmannClass c(int i) const;
  /// 1 + c_1 + ... + c_rank.
  GrassmannClass total() const;
  /// Segre classes s_0 .. s_max with c(E) s(E) = 1.
  std::vector<GrassmannClass> segre(int max_degree) const;
};

/// Chern classes of the dual: c_i(E^dual) = (-1)^i c_i(E).
BundleData dual(const BundleData& e);

/// The trivial bundle O^rank on the ring.
BundleData trivial_bundle(RingPtr ring, int rank);

struct TautologicalBundles {
  BundleData sub;       // S, rank r+1
  BundleData quotient;  // Q, rank n-r
};

TautologicalBundles tautological_bundles(RingPtr ring);

/// S^dual, rank r+1, with c_1 = sigma_1.
BundleData dual_subbundle(RingPtr ring);

/// E plus F (direct sum): c(E + F) = c(E) c(F).
BundleData direct_sum(const BundleData& e, const BundleData& f);

inline constexpr std::size_t kDefaultSymBudget = 70;

/// Chern classes of Sym^k E (optionally tensored with a line bundle whose
/// first Chern class is `twist`), by the splitting principle: the Chern roots
/// of Sym^k E are a . x over exponent vectors |a| = k, the product of
/// (1 + a . x) is reduced to a polynomial in c_i(E) and evaluated on the ring.
/// Throws BudgetExceeded when rank(Sym^k E) exceeds `budget`.
BundleData sym_power_chern(const BundleData& e, int k,
                           const std::optional<GrassmannClass>& twist = std::nullopt,
                           std::size_t budget = kDefaultSymBudget);

/// c(F tensor L) from c(F), rank(F) and c_1(L):
/// c_j = sum_{i<=j} C(rank - i, j - i) c_i(F) l^{j-i}. Works over any
/// commutative ring element type with +, * and integer scaling.
template <class Class>
std::vector<Class> twist_chern(const std::vector<Class>& total_chern, int rank, const Class& line,
                               const Class& one) {
  std::vector<Class> line_pow{one};
  for (int i = 1; i <= rank; ++i) line_pow.push_back(line_pow.back() * line);
  std::vector<Class> out;
  for (int j = 0; j <= rank; ++j) {
    Class cj = one * BigInt(0);
    for (int i = 0; i <= j && i < static_cast<int>(total_chern.size()); ++i) {
      cj += total_chern[static_cast<std::size_t>(i)] * line_pow[static_cast<std::size_t>(j - i)] *
            binomial(rank - i, j - i);
    }
    out.push_back(std::move(cj));
  }
  return out;
}

/// det(Sym^k E) = c_1(E) times this multiplier for E of the given rank:
/// k * C(rank - 1 + k, k) / rank, always an integer.
BigInt det_sym_multiplier(int rank, int k);

}  // namespace hodgecalc::schubert
