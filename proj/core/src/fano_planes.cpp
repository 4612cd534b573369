#include "hodgecalc/fano_planes.hpp"

#include "hodgecalc/errors.hpp"
#include "hodgecalc/published_claims.hpp"

#include <functional>

namespace hodgecalc::fano {

using schubert::BundleData;
using schubert::GrassmannClass;
using schubert::GrassmannRing;
using schubert::ProjBundleRing;
using schubert::ProjClass;

void CoverTarget::validate() const {
  if (n < 2) throw InvalidArgument("cover target needs n >= 2");
  if (d < 1) throw InvalidArgument("cover target needs d >= 1");
  if (m < 2) throw InvalidArgument("cover target needs m >= 2");
  if (r < 1 || r >= n) throw InvalidArgument("cover target needs 1 <= r <= n-1");
}

std::string CoverTarget::to_string() const {
  return "(n=" + std::to_string(n) + ", d=" + std::to_string(d) + ", r=" + std::to_string(r) +
         ", m=" + std::to_string(m) + ")";
}

std::string to_string(EmptinessVerdict v) {
  switch (v) {
    case EmptinessVerdict::ExpectEmpty: return "EXPECT_EMPTY";
    case EmptinessVerdict::Boundary: return "BOUNDARY";
    case EmptinessVerdict::Nonempty: return "NONEMPTY";
  }
  return "?";
}

std::string to_string(Positivity p) {
  switch (p) {
    case Positivity::GeneralType: return "GENERAL_TYPE";
    case Positivity::Fano: return "FANO";
    case Positivity::CalabiYauLike: return "CALABI_YAU_LIKE";
    case Positivity::Indeterminate: return "INDETERMINATE";
  }
  return "?";
}

BigInt gp_dimension(const CoverTarget& t) {
  t.validate();
  return BigInt(t.r + 1) * (t.n - t.r) + binomial(t.d + t.r, t.d);
}

BigInt incidence_codimension(const CoverTarget& t) {
  t.validate();
  return binomial(t.m * t.d + t.r, t.m * t.d);
}

BigInt expected_dimension(const CoverTarget& t) { return gp_dimension(t) - incidence_codimension(t); }

EmptinessVerdict emptiness_prediction(const CoverTarget& t) {
  const BigInt delta = expected_dimension(t);
  if (delta < 0) return EmptinessVerdict::ExpectEmpty;
  if (delta == 0) return EmptinessVerdict::Boundary;
  return EmptinessVerdict::Nonempty;
}

namespace {

// h^0(O_{P^r}(k)) for k >= 0, by counting monomials of degree k in r+1 variables.
BigInt sections_of_twist(int r, int k) {
  std::function<BigInt(int, int)> count = [&](int vars, int deg) -> BigInt {
    if (vars == 1) return 1;
    BigInt total = 0;
    for (int a = 0; a <= deg; ++a) total += count(vars - 1, deg - a);
    return total;
  };
  return count(r + 1, k);
}

}  // namespace

BigInt normal_bundle_euler(const CoverTarget& t) {
  t.validate();
  const BigInt chi = sections_of_twist(t.r, t.d) + BigInt(t.n - t.r) * sections_of_twist(t.r, 1) -
                     sections_of_twist(t.r, t.m * t.d);
  if (chi != expected_dimension(t)) {
    throw ConsistencyError("normal bundle Euler characteristic " + chi.get_str() +
                           " differs from the expected dimension for " + t.to_string());
  }
  return chi;
}

CanonicalDescriptor canonical_descriptor(const CoverTarget& t) {
  t.validate();
  CanonicalDescriptor c;
  c.a = schubert::det_sym_multiplier(t.r + 1, t.d);
  c.b = schubert::det_sym_multiplier(t.r + 1, t.m * t.d);
  c.grassmann_coeff = c.a + c.b - t.n - 1;
  c.fiber_coeff = BigInt(t.m) * binomial(t.m * t.d + t.r, t.m * t.d) - binomial(t.d + t.r, t.d) - 1;
  const int g = sgn(c.grassmann_coeff);
  const int f = sgn(c.fiber_coeff);
  if (g > 0 && f > 0)
    c.positivity = Positivity::GeneralType;
  else if (g < 0 && f < 0)
    c.positivity = Positivity::Fano;
  else if (g == 0 && f == 0)
    c.positivity = Positivity::CalabiYauLike;
  else
    c.positivity = Positivity::Indeterminate;
  c.extrapolated = t.m != 2;
  return c;
}

FanoSchemeProfile profile(const CoverTarget& t) {
  FanoSchemeProfile p;
  p.target = t;
  p.gp_dim = gp_dimension(t);
  p.codim = incidence_codimension(t);
  p.delta = p.gp_dim - p.codim;
  p.normal_chi = normal_bundle_euler(t);
  p.canonical = canonical_descriptor(t);
  p.verdict = emptiness_prediction(t);
  return p;
}

FanoClass fano_class(const CoverTarget& t, std::optional<int> truncate_at, std::size_t budget) {
  t.validate();
  const auto ring = GrassmannRing::create(t.r, t.n);
  FanoClass out{t, ring, {}, GrassmannClass::zero(ring), std::nullopt, false, t.m != 2};

  const BigInt rank = incidence_codimension(t);
  const BigInt delta = expected_dimension(t);
  if (rank > gp_dimension(t)) {
    out.vanishes_by_dimension = true;
    // Still computed when cheap, as an engine self-check.
    if (rank > static_cast<unsigned long>(budget) ||
        binomial(t.d + t.r, t.r) > static_cast<unsigned long>(budget)) {
      return out;
    }
  }

  const BundleData s_dual = schubert::dual_subbundle(ring);
  // E = O + Sym^d S^dual has the Chern classes of Sym^d S^dual.
  const BundleData sym_d = schubert::sym_power_chern(s_dual, t.d, std::nullopt, budget);
  const BundleData e = schubert::direct_sum(schubert::trivial_bundle(ring, 1), sym_d);
  const auto gp = ProjBundleRing::create(e);

  const BundleData sym_md = schubert::sym_power_chern(s_dual, t.m * t.d, std::nullopt, budget);
  const int top = sym_md.rank;
  // c_top(F tensor O(m)) = sum_i c_i(F) (m zeta)^{top - i}.
  const ProjClass m_zeta = gp->zeta() * BigInt(t.m);
  std::vector<ProjClass> zeta_pow{gp->one()};
  for (int i = 1; i <= top; ++i) zeta_pow.push_back(zeta_pow.back() * m_zeta);
  ProjClass cls = gp->zero();
  for (int i = 0; i <= top; ++i) {
    const GrassmannClass ci = sym_md.c(i);
    if (ci.is_zero()) continue;
    cls += ci * zeta_pow[static_cast<std::size_t>(top - i)];
  }

  for (const auto& level : cls.levels()) {
    GrassmannClass kept = GrassmannClass::zero(ring);
    for (const auto& [lambda, c] : level.terms()) {
      if (!truncate_at || lambda.size() <= *truncate_at) kept += GrassmannClass::sigma(ring, lambda, c);
    }
    out.zeta_levels.push_back(std::move(kept));
  }
  if (out.vanishes_by_dimension && !cls.is_zero()) {
    throw ConsistencyError("class above the dimension of G_P(r) did not vanish for " + t.to_string());
  }
  out.pushforward = schubert::proj_pushforward(cls);
  if (delta == 0) out.expected_count = out.pushforward.integral();
  return out;
}

std::vector<ClosedFormWarning> closed_form_discrepancies(const CoverTarget& t) {
  t.validate();
  std::vector<ClosedFormWarning> out;
  if (t.m != 2) return out;
  const CanonicalDescriptor c = canonical_descriptor(t);
  const BigRat pa = published_closed_form_a(t.r, t.d);
  const BigRat pb = published_closed_form_b(t.r, t.d);
  const std::string src(kClosedFormSource);
  if (pa != BigRat(c.a)) out.push_back({"a", pa, c.a, src});
  if (pb != BigRat(c.b)) out.push_back({"b", pb, c.b, src});
  return out;
}

}  // namespace hodgecalc::fano
