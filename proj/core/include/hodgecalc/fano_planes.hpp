#pragma once

// Fano schemes F_r(X) of r-planes on an m:1 cyclic cover X -> P^n branched
// along a hypersurface of degree m*d.
//
// X sits in P = P(O + O(d)) over P^n as the zero locus of a section of
// O_P(m). An r-plane of X is cut out in P by sections of
// O_P(1) + O(1)^{n-r}; the r-planes of P form G_P(r) = P(O + Sym^d S^dual)
// over G(r, n), of dimension (r+1)(n-r) + C(d+r, d). Containment in X is
// the vanishing of a section of O_{G_P}(m) tensor Sym^{md} S^dual, a bundle of
// rank C(md+r, r).

#include "hodgecalc/exact.hpp"
#include "hodgecalc/proj_bundle.hpp"
#include "hodgecalc/schubert.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hodgecalc::fano {

struct CoverTarget {
  int n = 0;  // base projective dimension
  int d = 1;  // twist; branch degree is m * d
  int r = 1;  // plane dimension, 1 <= r <= n - 1
  int m = 2;  // cover order

  /// Throws InvalidArgument unless n >= 2, d >= 1, m >= 2 and 1 <= r < n.
  void validate() const;
  int branch_degree() const { return m * d; }
  std::string to_string() const;
};

enum class EmptinessVerdict { ExpectEmpty, Boundary, Nonempty };
std::string to_string(EmptinessVerdict v);

enum class Positivity { GeneralType, Fano, CalabiYauLike, Indeterminate };
std::string to_string(Positivity p);

/// omega_{F_r(X)} = gamma^* O_G(grassmann_coeff) tensor O_{G_P}(fiber_coeff),
/// restricted to F_r(X) (F_r(X) assumed smooth of expected dimension).
struct CanonicalDescriptor {
  BigInt a;                // det Sym^d S^dual = O_G(a)
  BigInt b;                // det Sym^{md} S^dual = O_G(b)
  BigInt grassmann_coeff;  // a + b - n - 1
  BigInt fiber_coeff;      // m C(md+r, md) - C(d+r, d) - 1
  Positivity positivity = Positivity::Indeterminate;
  bool extrapolated = false;  // m > 2
};

struct FanoSchemeProfile {
  CoverTarget target;
  BigInt gp_dim;
  BigInt codim;
  BigInt delta;
  BigInt normal_chi;
  CanonicalDescriptor canonical;
  EmptinessVerdict verdict = EmptinessVerdict::Nonempty;
};

/// dim G_P(r) = (r+1)(n-r) + C(d+r, d).
BigInt gp_dimension(const CoverTarget& t);

/// Codimension of the incidence condition: C(md+r, md).
BigInt incidence_codimension(const CoverTarget& t);

/// delta = gp_dimension - incidence_codimension.
BigInt expected_dimension(const CoverTarget& t);

/// ExpectEmpty iff delta < 0, Boundary iff delta == 0, Nonempty iff delta > 0.
/// Nonempty and Boundary are predictions for a general X, not certificates.
EmptinessVerdict emptiness_prediction(const CoverTarget& t);

/// chi(N_{h/X}) from 0 -> N -> O(d) + O(1)^{n-r} -> O(md) -> 0 on P^r, with
/// chi(O_{P^r}(k)) counted as the number of degree-k monomials in r+1
/// variables. Throws ConsistencyError if it differs from expected_dimension.
BigInt normal_bundle_euler(const CoverTarget& t);

/// a and b from the splitting principle (schubert::det_sym_multiplier).
CanonicalDescriptor canonical_descriptor(const CoverTarget& t);

FanoSchemeProfile profile(const CoverTarget& t);

struct FanoClass {
  CoverTarget target;
  schubert::RingPtr grassmannian;
  /// [F_r(X)] in CH^*(G_P(r)), reduced: levels[j] is the coefficient of zeta^j.
  std::vector<schubert::GrassmannClass> zeta_levels;
  /// gamma_*[F_r(X)] on G(r, n).
  schubert::GrassmannClass pushforward;
  /// Degree of the class; reported only when delta == 0.
  std::optional<BigInt> expected_count;
  /// The rank exceeds dim G_P(r), so the class vanishes without computation.
  bool vanishes_by_dimension = false;
  bool extrapolated = false;
};

/// Top Chern class of O_{G_P}(m) tensor Sym^{md} S^dual on G_P(r) and its
/// pushforward. `truncate_at`, when set, drops base classes of codimension
/// above that value from the reported zeta levels. Throws BudgetExceeded when
/// the symmetric power exceeds `budget`.
FanoClass fano_class(const CoverTarget& t, std::optional<int> truncate_at = std::nullopt,
                     std::size_t budget = schubert::kDefaultSymBudget);

/// A published closed form that differs from the computed value.
struct ClosedFormWarning {
  std::string quantity;  // "a" or "b"
  BigRat published;
  BigInt computed;
  std::string source;
};

/// Side-by-side comparison of the determinant multipliers with the published
/// closed forms. Only defined for double covers (m == 2).
std::vector<ClosedFormWarning> closed_form_discrepancies(const CoverTarget& t);

}  // namespace hodgecalc::fano
