#include "hodgecalc/ci_invariants.hpp"
#include "hodgecalc/cover_hodge.hpp"
#include "hodgecalc/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace hodgecalc;

namespace {

using CI = CompleteIntersection;

// Multidegrees with entries >= 2, nondecreasing, summing to at most max_sum.
std::vector<std::vector<int>> multidegrees(int max_sum) {
  std::vector<std::vector<int>> out{{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto base = out[i];
    int sum = 0;
    for (int d : base) sum += d;
    for (int d = base.empty() ? 2 : base.back(); sum + d <= max_sum; ++d) {
      auto next = base;
      next.push_back(d);
      out.push_back(next);
    }
  }
  return out;
}

// (-1)^k h_k(d) by enumerating nondecreasing index sequences.
long power_sum_oracle(int k, const std::vector<int>& d) {
  long total = 0;
  std::function<void(int, int, long)> rec = [&](int left, int from, long prod) {
    if (left == 0) {
      total += prod;
      return;
    }
    for (int i = from; i < static_cast<int>(d.size()); ++i) rec(left - 1, i, prod * d[static_cast<std::size_t>(i)]);
  };
  rec(k, 0, 1);
  return (k % 2 == 0) ? total : -total;
}

// chi = (prod d) [h^n] (1+h)^{n+r+1} prod_i (sum_j (-d_i h)^j), in machine integers.
long euler_oracle(int n, const std::vector<int>& d) {
  oracle::Poly p = oracle::power({1, 1}, n + static_cast<int>(d.size()) + 1);
  long deg = 1;
  for (int di : d) {
    deg *= di;
    oracle::Poly inv{1};
    for (int j = 1; j <= n; ++j) inv.push_back(inv.back() * -di);
    p = oracle::multiply(p, inv);
  }
  return deg * oracle::coeff(p, n);
}

}  // namespace

TEST_CASE("CompleteIntersection normalization") {
  const CI a(3, {1, 3});
  CHECK(a == CI(3, {3}));
  CHECK(a.ambient_dim() == 4);
  CHECK(CI(3, {3, 2}).degrees() == std::vector<int>{2, 3});
  CHECK(CI(2, {}).codim() == 0);
  CHECK(CI(3, {2, 3}).degree() == 6);
  CHECK(CI(3, {2, 3}).degree_sum() == 5);
  CHECK_THROWS_AS(CI(0, {3}), InvalidArgument);
  CHECK_THROWS_AS(CI(3, {0}), InvalidArgument);
  CHECK_THROWS_AS(CI(3, {-2}), InvalidArgument);
}

TEST_CASE("signed_power_sum examples and multiset enumeration") {
  const std::vector<int> cubic{3}, d23{2, 3};
  CHECK(signed_power_sum(0, d23) == 1);
  CHECK(signed_power_sum(3, cubic) == -27);
  CHECK(signed_power_sum(2, d23) == 19);
  CHECK(power_sum_oracle(2, d23) == 19);
  for (const auto& d : multidegrees(9))
    for (int k = 0; k <= 6; ++k) CHECK(signed_power_sum(k, d) == BigInt(static_cast<long>(power_sum_oracle(k, d))));
}

TEST_CASE("chern_series examples") {
  // Hand expansion: (1+h)^5 (1 - 3h + 9h^2 - 27h^3), coefficient of h^3.
  const auto hand = oracle::multiply(oracle::power({1, 1}, 5), {1, -3, 9, -27});
  CHECK(oracle::coeff(hand, 3) == -2);
  CHECK(chern_series(CI(3, {3})).coefficient(3) == -2);

  CHECK(chern_series(CI(3, {})) == TruncSeries(3, {1, 4, 6, 4}));

  const auto quartic = oracle::multiply(oracle::power({1, 1}, 6), {1, -4, 16, -64, 256});
  CHECK(oracle::coeff(quartic, 4) == 47);
  const TruncSeries s = chern_series(CI(4, {4}));
  CHECK(s.order() == 4);
  CHECK(s.coefficient(4) == 47);
}

TEST_CASE("euler_characteristic examples") {
  CHECK(euler_characteristic(CI(3, {3})) == -6);
  CHECK(euler_characteristic(CI(3, {2, 2})) == 0);
  CHECK(euler_characteristic(CI(4, {4})) == 188);
  CHECK(euler_characteristic(CI(2, {4})) == 24);
  CHECK(euler_characteristic(CI(1, {3})) == 0);
  CHECK(euler_characteristic(CI(4, {})) == 5);
}

TEST_CASE("euler routes agree with each other and with the oracle, n <= 9, sum d <= 12") {
  for (int n = 1; n <= 9; ++n)
    for (const auto& d : multidegrees(12)) {
      const CI x(n, d);
      const BigInt chi = euler_characteristic(x);
      CHECK(chi == euler_from_chern_series(x));
      // Machine-integer oracle only while it cannot overflow.
      if (n <= 6 && d.size() <= 4) CHECK(chi == BigInt(static_cast<long>(euler_oracle(n, d))));
      const BettiTable b = betti_table(x);
      CHECK(b.euler() == chi);
      CHECK(b.top_degree() == 2 * n);
      for (int k = 0; k <= 2 * n; ++k) CHECK(b.b[k] == b.b[2 * n - k]);
    }
}

TEST_CASE("middle_betti examples") {
  CHECK(euler_characteristic(CI(3, {4})) == -56);
  CHECK(middle_betti(CI(3, {4})) == 60);
  CHECK(middle_betti(CI(5, {3})) == 42);
  CHECK(euler_characteristic(CI(5, {2, 2, 2})) == -48);
  CHECK(middle_betti(CI(5, {2, 2, 2})) == 54);
  // Even dimension: the middle Betti number includes the hyperplane power.
  CHECK(middle_betti(CI(4, {4})) == 184);
  CHECK(middle_betti(CI(2, {})) == 1);
  CHECK(middle_betti(CI(3, {2})) == 0);
}

TEST_CASE("betti_table examples") {
  auto ints = [](std::initializer_list<long> v) {
    std::vector<BigInt> out;
    for (long x : v) out.emplace_back(x);
    return out;
  };
  CHECK(betti_table(CI(3, {3})).b == ints({1, 0, 1, 10, 1, 0, 1}));
  CHECK(betti_table(CI(2, {})).b == ints({1, 0, 1, 0, 1}));
  CHECK(betti_table(CI(3, {2, 2})).b == ints({1, 0, 1, 4, 1, 0, 1}));
}

TEST_CASE("odd middle Betti numbers are even") {
  for (int n = 1; n <= 9; n += 2)
    for (const auto& d : multidegrees(10)) {
      const BigInt b = middle_betti(CI(n, d));
      CHECK(b % 2 == 0);
    }
}

TEST_CASE("hodge_diamond: published level-one examples") {
  CHECK(hodge_diamond(CI(3, {3})).h(2, 1) == 5);
  CHECK(hodge_diamond(CI(3, {2, 3})).h(2, 1) == 20);
  CHECK(hodge_diamond(CI(3, {4})).h(2, 1) == 30);
  const HodgeDiamond q4 = hodge_diamond(CI(4, {4}));
  CHECK(q4.h(3, 1) == 21);
  CHECK(q4.h(2, 2) == 142);
  CHECK(q4.h(4, 0) == 0);
  CHECK(q4.euler() == 188);
  const HodgeDiamond c5 = hodge_diamond(CI(5, {3}));
  CHECK(c5.h(3, 2) == 21);
  CHECK(c5.h(4, 1) == 0);
}

TEST_CASE("hodge_diamond of projective space and surfaces") {
  const HodgeDiamond p3 = hodge_diamond(CI(3, {}));
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q) CHECK(p3.h(p, q) == (p == q ? 1 : 0));
  const HodgeDiamond k3 = hodge_diamond(CI(2, {4}));
  CHECK(k3.h(2, 0) == 1);
  CHECK(k3.h(1, 1) == 20);
  const HodgeDiamond curve = hodge_diamond(CI(1, {2, 3}));
  CHECK(curve.h(1, 0) == 4);  // canonical genus-4 curve
}

TEST_CASE("hypersurface Hodge numbers match Fermat Jacobian-ring monomial counts") {
  for (int n = 1; n <= 5; ++n)
    for (int d = 2; d <= 6; ++d) {
      const HodgeDiamond h = hodge_diamond(CI(n, {d}));
      const int vars = n + 2;
      for (int q = 0; q <= n; ++q) {
        long prim = oracle::fermat_jacobian_dim(vars, d, static_cast<long>(q + 1) * d - vars);
        if (2 * q == n) prim += 1;
        CHECK(h.h(n - q, q) == BigInt(static_cast<long>(prim)));
      }
    }
}

TEST_CASE("diamond invariants across a sweep") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& d : multidegrees(8)) {
      const CI x(n, d);
      const HodgeDiamond h = hodge_diamond(x);
      CHECK_NOTHROW(h.check_symmetries());
      CHECK_NOTHROW(h.check_lefschetz_shape());
      CHECK(h.betti(n) == middle_betti(x));
      CHECK(h.euler() == euler_characteristic(x));
      if (n % 2 == 1) CHECK(jacobian_dimension(h, (n + 1) / 2) * 2 == middle_betti(x));
    }
}

TEST_CASE("hypersurface diamonds equal the Jacobian-ring route") {
  for (int n = 1; n <= 6; ++n)
    for (int d = 2; d <= 7; ++d)
      CHECK(hodge_diamond(CI(n, {d})) == hodge_diamond_wps(WeightedHypersurface::ordinary(n, d)));
}

TEST_CASE("degree-1 normalization invariance") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& d : multidegrees(7)) {
      auto with_one = d;
      with_one.push_back(1);
      const CI a(n, d), b(n, with_one);
      CHECK(a == b);
      CHECK(euler_characteristic(a) == euler_characteristic(b));
      CHECK(hodge_diamond(a) == hodge_diamond(b));
    }
}

TEST_CASE("chi_y genus is consistent with the diamond") {
  const CI x(3, {2, 3});
  const auto chi = chi_y_genus(x);
  const HodgeDiamond h = hodge_diamond(x);
  for (int p = 0; p <= 3; ++p) {
    BigInt s = 0;
    for (int q = 0; q <= 3; ++q) s += (q % 2 == 0 ? 1 : -1) * h.h(p, q);
    CHECK(chi[p] == s);
  }
}

TEST_CASE("hodge_level examples") {
  CHECK(hodge_level(hodge_diamond(CI(3, {3})), 3) == 1);
  CHECK_FALSE(hodge_level(hodge_diamond(CI(3, {2})), 3).has_value());
  CHECK(hodge_level(hodge_diamond(CI(4, {3})), 4) == 2);
  CHECK(hodge_diamond(CI(4, {3})).h(3, 1) == 1);
  CHECK(hodge_level(hodge_diamond(CI(3, {3})), 2) == 0);
  CHECK(variety_level(hodge_diamond(CI(3, {5}))) == 3);
}

TEST_CASE("jacobian_dimension examples") {
  CHECK(jacobian_dimension(hodge_diamond(CI(5, {3})), 3) == 21);
  for (int m = 1; m <= 5; ++m) CHECK(jacobian_dimension(hodge_diamond(CI(2 * m + 1, {2, 2})), m + 1) == m + 1);
  CHECK(jacobian_dimension(hodge_diamond(CI(5, {2, 2, 2})), 3) == 27);
  CHECK(jacobian_dimension(hodge_diamond(CI(3, {3})), 1) == 0);
  CHECK_THROWS_AS(jacobian_dimension(hodge_diamond(CI(3, {3})), 0), InvalidArgument);
  CHECK_THROWS_AS(jacobian_dimension(hodge_diamond(CI(3, {3})), 4), InvalidArgument);
}

TEST_CASE("hodge_level rejects degrees outside [0, 2n]") {
  CHECK_THROWS_AS(hodge_level(hodge_diamond(CI(2, {3})), 5), InvalidArgument);
  CHECK_THROWS_AS(hodge_level(hodge_diamond(CI(2, {3})), -1), InvalidArgument);
}

TEST_CASE("classify_level_one examples") {
  const auto small = classify_level_one(5, 6);
  const std::vector<CI> expected{CI(3, {2, 2}), CI(3, {2, 2, 2}), CI(3, {2, 3}), CI(3, {3}),
                                 CI(3, {4}),    CI(5, {2, 2}),    CI(5, {2, 2, 2}), CI(5, {3})};
  CHECK(small == expected);
  CHECK(classify_level_one(3, 3) == std::vector<CI>{CI(3, {3})});
  CHECK(classify_level_one(3, 2).empty());
  CHECK(classify_level_one(1, 10).empty());
}

TEST_CASE("classify_level_one window (11, 8)") {
  std::set<CI> expected{CI(3, {3}), CI(3, {4}), CI(3, {2, 3}), CI(5, {3})};
  for (int n = 3; n <= 11; n += 2) {
    expected.insert(CI(n, {2, 2}));
    expected.insert(CI(n, {2, 2, 2}));
  }
  const auto got = classify_level_one(11, 8);
  CHECK(std::set<CI>(got.begin(), got.end()) == expected);
  CHECK(got.size() == expected.size());
  CHECK(std::is_sorted(got.begin(), got.end()));
  CHECK(classify_level_one(11, 8) == got);
}

TEST_CASE("classify_level_one with even dimensions is informational") {
  const auto with_even = classify_level_one(4, 6, true);
  for (const auto& x : with_even) {
    const HodgeDiamond h = hodge_diamond(x);
    CHECK(h.betti(x.dim()) != 0);
    CHECK(hodge_level(h, x.dim()).value() <= 1);
  }
  // Even-dimensional quadric intersections have level 0 and appear only here.
  CHECK(std::find(with_even.begin(), with_even.end(), CI(4, {2, 2})) != with_even.end());
  const auto odd_only = classify_level_one(4, 6);
  for (const auto& x : odd_only) CHECK(x.dim() % 2 == 1);
}
