#include "hodgecalc/ci_invariants.hpp"
#include "hodgecalc/cover_hodge.hpp"
#include "hodgecalc/errors.hpp"
#include "hodgecalc/published_claims.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace hodgecalc;

namespace {

using WH = WeightedHypersurface;

// prod_i (1 + t^{w_i} + ... + t^{D - 2 w_i}) when w_i divides D, factor by factor.
oracle::Poly poincare_oracle(const std::vector<long>& weights, long degree) {
  oracle::Poly p{1};
  for (long w : weights) {
    REQUIRE(degree % w == 0);
    oracle::Poly f(static_cast<std::size_t>(degree - 2 * w + 1), 0);
    for (long e = 0; e <= degree - 2 * w; e += w) f[static_cast<std::size_t>(e)] = 1;
    if (degree == 2 * w) f = {1};
    p = oracle::multiply(p, f);
  }
  return p;
}

void check_poincare(const std::vector<long>& weights, long degree) {
  const auto expect = poincare_oracle(weights, degree);
  const WH w(weights, degree);
  const long top = milnor_top_degree(w);
  CHECK(static_cast<std::size_t>(top + 1) == expect.size());
  const TruncSeries s = milnor_poincare(w, static_cast<int>(top) + 3);
  for (int k = 0; k <= top + 3; ++k) CHECK(s.coefficient(k) == BigRat(oracle::coeff(expect, k)));
}

}  // namespace

TEST_CASE("WeightedHypersurface preconditions") {
  CHECK_THROWS_AS(WH({1}, 3), InvalidArgument);
  CHECK_THROWS_AS(WH({1, 0, 1}, 3), InvalidArgument);
  CHECK_THROWS_AS(WH({1, 1, 3}, 3), InvalidArgument);
  CHECK_THROWS_AS(WH({1, 1, 1}, 0), InvalidArgument);
  CHECK(WH({1, 1, 1, 1, 2}, 4).dim() == 3);
  CHECK(WH::ordinary(3, 3).weights() == std::vector<long>(5, 1));
}

TEST_CASE("CyclicCover preconditions and weighted model") {
  CHECK_THROWS_AS(CyclicCover(0, 2, 4), InvalidArgument);
  CHECK_THROWS_AS(CyclicCover(3, 1, 4), InvalidArgument);
  CHECK_THROWS_AS(CyclicCover(3, 2, 5), InvalidArgument);
  CHECK_THROWS_AS(CyclicCover(3, 3, 0), InvalidArgument);
  const CyclicCover c(3, 2, 4);
  CHECK(c.twist() == 2);
  CHECK(c.to_weighted() == WH({1, 1, 1, 1, 2}, 4));
  CHECK(CyclicCover(2, 3, 6).to_weighted() == WH({1, 1, 1, 2}, 6));
}

TEST_CASE("milnor_poincare examples") {
  // Weight-2 factor is (1 - t^2)/(1 - t^2) = 1.
  const auto quartic_solid = oracle::power(oracle::ones(3), 4);
  CHECK(poincare_oracle({1, 1, 1, 1, 2}, 4) == quartic_solid);
  check_poincare({1, 1, 1, 1, 2}, 4);

  const TruncSeries pts = milnor_poincare(WH({1, 1}, 2), 3);
  CHECK(pts == TruncSeries::one(3));
  CHECK(milnor_poincare(WH({1, 1, 1}, 2), 3) == TruncSeries::one(3));

  CHECK(poincare_oracle({1, 1, 1, 3}, 6) == oracle::power(oracle::ones(5), 3));
  check_poincare({1, 1, 1, 3}, 6);
}

TEST_CASE("milnor_poincare against factor expansion on a sweep") {
  for (int n = 1; n <= 5; ++n)
    for (long d = 1; d <= 4; ++d) {
      std::vector<long> w(static_cast<std::size_t>(n) + 1, 1);
      w.push_back(d);
      check_poincare(w, 2 * d);
      if (d >= 2) check_poincare(w, 3 * d);
    }
  check_poincare({2, 2, 2, 3, 3}, 12);
}

TEST_CASE("milnor_poincare is palindromic") {
  for (const auto& [w, deg] : std::vector<std::pair<std::vector<long>, long>>{
           {{1, 1, 1, 1, 2}, 4}, {{1, 1, 1, 1, 1, 1, 2}, 4}, {{1, 1, 2, 3}, 6}, {{1, 1, 1, 1, 4}, 8}}) {
    const WH h(w, deg);
    const long top = milnor_top_degree(h);
    const TruncSeries s = milnor_poincare(h, static_cast<int>(top));
    for (long k = 0; k <= top; ++k) CHECK(s.coefficient(static_cast<int>(k)) == s.coefficient(static_cast<int>(top - k)));
  }
}

TEST_CASE("primitive_hodge examples") {
  const WH quartic_solid({1, 1, 1, 1, 2}, 4);
  CHECK(oracle::coeff(oracle::power(oracle::ones(3), 4), 2) == 10);
  CHECK(primitive_hodge(quartic_solid, 1) == 10);

  const WH k3({1, 1, 1, 3}, 6);
  CHECK(oracle::coeff(oracle::power(oracle::ones(5), 3), 6) == 19);
  CHECK(primitive_hodge(k3, 1) == 19);

  // Riemann-Hurwitz: a double cover of P^1 branched in 4 points has genus 1.
  // 2g - 2 = 2 (-2) + b with b = 4.
  const int genus = (4 - 2) / 2;
  CHECK(genus == 1);
  CHECK(primitive_hodge(WH({1, 1, 2}, 4), 0) == genus);

  CHECK_THROWS_AS(primitive_hodge(quartic_solid, 4), InvalidArgument);
  CHECK_THROWS_AS(primitive_hodge(quartic_solid, -1), InvalidArgument);
}

TEST_CASE("double covers of P^1 follow Riemann-Hurwitz") {
  for (long b = 2; b <= 16; b += 2) {
    const long genus = (b - 2) / 2;  // 2g - 2 = -4 + b
    const HodgeDiamond d = hodge_diamond_cover(CyclicCover(1, 2, b));
    CHECK(d.h(1, 0) == genus);
    CHECK(euler_via_cover(CyclicCover(1, 2, b)) == 2 - 2 * genus);
  }
}

TEST_CASE("two points in P^1") {
  const HodgeDiamond d = hodge_diamond_wps(WH({1, 1}, 2));
  CHECK(d.dim() == 0);
  CHECK(d.h(0, 0) == 2);
}

TEST_CASE("hodge_diamond_cover examples") {
  const HodgeDiamond five = hodge_diamond_cover(CyclicCover(5, 2, 4));
  std::vector<BigInt> row{0, 1, 90, 90, 1, 0};
  CHECK(five.middle_row() == row);
  // Jacobian-ring coefficients of (1 + t + t^2)^6 at degrees 0, 4, 8.
  const auto p = oracle::power(oracle::ones(3), 6);
  CHECK(oracle::coeff(p, 0) == 1);
  CHECK(oracle::coeff(p, 4) == 90);
  CHECK(oracle::coeff(p, 8) == 90);
  CHECK(five.betti(5) == 182);

  CHECK(hodge_diamond_cover(CyclicCover(3, 2, 4)).h(2, 1) == 10);
  const HodgeDiamond dp = hodge_diamond_cover(CyclicCover(2, 2, 4));
  CHECK(dp.h(1, 1) == 8);
  CHECK(dp.h(2, 0) == 0);
}

TEST_CASE("euler_via_cover examples") {
  CHECK(euler_via_cover(CyclicCover(5, 2, 4)) == 2 * 6 - 188);
  CHECK(euler_via_cover(CyclicCover(5, 2, 4)) == -176);
  CHECK(euler_via_cover(CyclicCover(3, 2, 4)) == 8 - 24);
  CHECK(euler_via_cover(CyclicCover(2, 2, 4)) == 6 - (-4));
  CHECK(middle_betti_via_euler(CyclicCover(5, 2, 4)) == 6 - (-176));
}

TEST_CASE("K3 double plane and the Calabi-Yau boundary") {
  const HodgeDiamond k3 = hodge_diamond_cover(CyclicCover(2, 2, 6));
  CHECK(k3.betti(2) == 22);
  CHECK(k3.h(2, 0) == 1);
  CHECK(k3.h(1, 1) == 20);

  const WH octic({1, 1, 1, 1, 4}, 8);
  CHECK(octic.degree() == octic.weight_sum());
  CHECK(hodge_diamond_wps(octic).h(3, 0) == 1);
  CHECK(hodge_diamond_cover(CyclicCover(3, 2, 8)).h(3, 0) == 1);
  CHECK(hodge_diamond_cover(CyclicCover(3, 2, 8)).h(2, 1) == 149);

  const WH quintic = WH::ordinary(3, 5);
  CHECK(hodge_diamond_wps(quintic).h(3, 0) == 1);
  CHECK(hodge_diamond_wps(quintic).h(2, 1) == 101);
}

TEST_CASE("cross_validate reports") {
  const ConsistencyReport a = cross_validate(CyclicCover(5, 2, 4), CoverQuantity::MiddleBetti);
  CHECK(a.agree);
  CHECK(a.route_values.at("jacobian") == 182);
  CHECK(a.route_values.at("euler") == 182);
  REQUIRE(a.published.has_value());
  CHECK(a.published->value == 284);
  CHECK(a.matches_published == false);

  const ConsistencyReport b = cross_validate(CyclicCover(3, 2, 4));
  CHECK(b.agree);
  CHECK(b.route_values.at("jacobian") == 20);
  CHECK(b.route_values.at("euler") == 20);
  CHECK_FALSE(b.published.has_value());
  CHECK_FALSE(b.matches_published.has_value());

  const ConsistencyReport c = cross_validate(WH::ordinary(5, 3), CoverQuantity::JacobianDimension);
  CHECK(c.agree);
  CHECK(c.route_values.begin()->second == 21);
  REQUIRE(c.published.has_value());
  CHECK(c.matches_published == true);

  CHECK_THROWS_AS(compare_routes(WH({1, 1, 1, 2}, 4), CoverQuantity::MiddleBetti), InvalidArgument);
}

TEST_CASE("published claims for the quartic double fivefold are recorded but not matched") {
  const auto j = compare_routes(CyclicCover(5, 2, 4), CoverQuantity::JacobianDimension);
  CHECK(j.agree);
  CHECK(j.route_values.at("jacobian") == 91);
  CHECK(j.published->value == 142);
  CHECK(j.matches_published == false);

  const auto l = compare_routes(CyclicCover(5, 2, 4), CoverQuantity::MiddleLevel);
  CHECK(l.route_values.at("jacobian") == 3);
  CHECK(l.published->value == 1);
}
