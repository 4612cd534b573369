#pragma once

// Chow ring of a projective bundle P(E) -> G(r, n), where P(E) parametrizes
// lines in the fibers of E. zeta = c_1(O_{P(E)}(1)) satisfies
//   zeta^e + c_1(E) zeta^{e-1} + ... + c_e(E) = 0,
// and the pushforward sends zeta^{e-1+i} to the Segre class s_i(E), with
// c(E) s(E) = 1. In particular push(zeta^{e-1}) = 1 and push(zeta^e) = -c_1(E).

#include "hodgecalc/schubert.hpp"

#include <memory>
#include <string>
#include <vector>

namespace hodgecalc::schubert {

class ProjBundleRing;
using ProjRingPtr = std::shared_ptr<const ProjBundleRing>;

/// sum_j levels[j] * zeta^j with coefficients pulled back from the base.
/// Reduced when fewer than e levels are present.
class ProjClass {
public:
  ProjClass(ProjRingPtr ring, std::vector<GrassmannClass> levels);

  const ProjRingPtr& ring() const noexcept { return ring_; }
  const std::vector<GrassmannClass>& levels() const noexcept { return levels_; }
  bool is_reduced() const noexcept;
  bool is_zero() const noexcept;

  ProjClass& operator+=(const ProjClass& o);
  ProjClass& operator-=(const ProjClass& o);
  ProjClass& operator*=(const BigInt& c);

  friend ProjClass operator+(ProjClass a, const ProjClass& b) { return a += b; }
  friend ProjClass operator-(ProjClass a, const ProjClass& b) { return a -= b; }
  friend ProjClass operator*(ProjClass a, const BigInt& c) { return a *= c; }
  friend ProjClass operator*(const ProjClass& a, const ProjClass& b);
  friend ProjClass operator*(const GrassmannClass& base, const ProjClass& a);
  friend bool operator==(const ProjClass& a, const ProjClass& b);

  std::string to_string() const;

private:
  ProjRingPtr ring_;
  std::vector<GrassmannClass> levels_;
};

class ProjBundleRing : public std::enable_shared_from_this<ProjBundleRing> {
public:
  static ProjRingPtr create(BundleData bundle);

  const RingPtr& base() const noexcept { return bundle_.ring(); }
  const BundleData& bundle() const noexcept { return bundle_; }
  int fiber_rank() const noexcept { return bundle_.rank; }
  /// dim G + e - 1.
  int dimension() const noexcept { return base()->dimension() + bundle_.rank - 1; }

  ProjClass zero() const;
  ProjClass one() const;
  ProjClass zeta() const;
  ProjClass pullback(const GrassmannClass& c) const;

  /// Unreduced polynomial in zeta, kept as given.
  ProjClass raw(std::vector<GrassmannClass> levels) const;
  /// Rewrites zeta^j for j >= e with the Grothendieck relation.
  ProjClass reduce(const ProjClass& x) const;

  ProjClass multiply(const ProjClass& a, const ProjClass& b) const;

private:
  explicit ProjBundleRing(BundleData bundle);
  BundleData bundle_;
};

/// Pushforward to the base. Requires a reduced class: only the zeta^{e-1}
/// level survives. Throws InvalidArgument otherwise.
GrassmannClass proj_pushforward(const ProjClass& x);

/// Pushforward of a possibly unreduced class through Segre classes:
/// zeta^j * b maps to s_{j-e+1}(E) * b.
GrassmannClass segre_pushforward(const ProjClass& x);

/// Degree of a class on P(E): the point-class coefficient of its pushforward.
BigInt proj_integral(const ProjClass& x);

}  // namespace hodgecalc::schubert
