#include "hodgecalc/ci_invariants.hpp"

#include "hodgecalc/cover_hodge.hpp"
#include "hodgecalc/errors.hpp"
#include "hodgecalc/parallel.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace hodgecalc {

CompleteIntersection::CompleteIntersection(int dim, std::vector<int> degrees)
    : dim_(dim), degrees_(std::move(degrees)) {
  if (dim_ < 1) throw InvalidArgument("complete intersection dimension must be >= 1");
  for (int d : degrees_)
    if (d < 1) throw InvalidArgument("complete intersection degrees must be >= 1");
  std::erase(degrees_, 1);
  std::sort(degrees_.begin(), degrees_.end());
}

BigInt CompleteIntersection::degree() const {
  BigInt p = 1;
  for (int d : degrees_) p *= d;
  return p;
}

int CompleteIntersection::degree_sum() const {
  return std::accumulate(degrees_.begin(), degrees_.end(), 0);
}

std::string CompleteIntersection::to_string() const {
  std::string s = "X_(";
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(degrees_[i]);
  }
  return s + ") in P^" + std::to_string(ambient_dim());
}

BigInt signed_power_sum(int k, std::span<const int> degrees) {
  if (k < 0) throw InvalidArgument("signed_power_sum: k must be >= 0");
  // h[j] holds the complete homogeneous sum of degree j in the degrees seen so far.
  std::vector<BigInt> h(static_cast<std::size_t>(k) + 1, BigInt(0));
  h[0] = 1;
  for (int d : degrees) {
    for (int j = 1; j <= k; ++j) h[static_cast<std::size_t>(j)] += d * h[static_cast<std::size_t>(j - 1)];
  }
  return (k % 2 == 0) ? h.back() : BigInt(-h.back());
}

TruncSeries chern_series(const CompleteIntersection& x) {
  const int n = x.dim();
  const long ambient_factors = x.ambient_dim() + 1;
  std::vector<long> one_plus_h{1, 1};
  TruncSeries s = TruncSeries::from_integers(n, one_plus_h).pow(static_cast<unsigned>(ambient_factors));
  for (int d : x.degrees()) {
    std::vector<long> lin{1, d};
    s *= TruncSeries::from_integers(n, lin).inverse();
  }
  return s;
}

BigInt euler_characteristic(const CompleteIntersection& x) {
  const int n = x.dim();
  BigInt sum = 0;
  for (int i = 0; i <= n; ++i) {
    sum += binomial(x.ambient_dim() + 1, i) * signed_power_sum(n - i, x.degrees());
  }
  return x.degree() * sum;
}

BigInt euler_from_chern_series(const CompleteIntersection& x) {
  const BigRat top = chern_series(x).coefficient(x.dim());
  return require_integer(BigRat(x.degree()) * top, "Euler characteristic");
}

namespace {

// Number of degrees k in [0, 2n], k != n, carrying a unit Betti number.
int off_middle_units(int n) { return (n % 2 == 0) ? n : n + 1; }

}  // namespace

BigInt middle_betti(const CompleteIntersection& x) {
  const int n = x.dim();
  const BigInt chi = euler_characteristic(x);
  BigInt b = chi - off_middle_units(n);
  if (n % 2 != 0) b = -b;
  if (b < 0) {
    throw ConsistencyError("negative middle Betti number for " + x.to_string() + ": " + b.get_str());
  }
  return b;
}

BettiTable betti_table(const CompleteIntersection& x) {
  const int n = x.dim();
  BettiTable t;
  t.b.assign(static_cast<std::size_t>(2 * n + 1), BigInt(0));
  for (int k = 0; k <= 2 * n; k += 2) t.b[static_cast<std::size_t>(k)] = 1;
  t.b[static_cast<std::size_t>(n)] = middle_betti(x);
  return t;
}

namespace {

// Q_y(x) = x(1+y)/(1 - e^{-x(1+y)}) - x y at a fixed rational y.
TruncSeries hirzebruch_q(int order, const BigRat& y) {
  const BigRat c = 1 + y;
  // (1 - e^{-c x}) / (c x) = sum_k (-c x)^k / (k+1)!
  std::vector<BigRat> coeffs(static_cast<std::size_t>(order) + 1);
  BigRat term = 1;
  for (int k = 0; k <= order; ++k) {
    coeffs[static_cast<std::size_t>(k)] = term;
    term *= -c / (k + 2);
  }
  TruncSeries q = TruncSeries(order, std::move(coeffs)).inverse();
  q -= TruncSeries::monomial(order, 1, y);
  return q;
}

// Coefficients of the unique polynomial of degree <= n through (j, values[j]).
std::vector<BigRat> interpolate_at_naturals(const std::vector<BigRat>& values) {
  const std::size_t m = values.size();
  // Newton divided differences on nodes 0, 1, ..., m-1.
  std::vector<BigRat> dd = values;
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t i = m - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / static_cast<long>(level);
      if (i == level) break;
    }
  }
  // Horner expansion of sum_i dd[i] prod_{j<i} (y - j).
  std::vector<BigRat> poly(m, BigRat(0));
  for (std::size_t i = m; i-- > 0;) {
    // poly = poly * (y - i) + dd[i]
    std::vector<BigRat> next(m, BigRat(0));
    for (std::size_t k = 0; k < m; ++k) {
      if (poly[k] == 0) continue;
      if (k + 1 < m) next[k + 1] += poly[k];
      next[k] -= poly[k] * static_cast<long>(i);
    }
    next[0] += dd[i];
    poly = std::move(next);
  }
  return poly;
}

}  // namespace

std::vector<BigInt> chi_y_genus(const CompleteIntersection& x) {
  const int n = x.dim();
  std::vector<BigRat> values;
  for (int y = 0; y <= n; ++y) {
    const TruncSeries q = hirzebruch_q(n, y);
    TruncSeries s = q.pow(static_cast<unsigned>(x.ambient_dim() + 1));
    for (int d : x.degrees()) s *= q.rescaled(d).inverse();
    values.push_back(BigRat(x.degree()) * s.coefficient(n));
  }
  std::vector<BigInt> out;
  for (const auto& c : interpolate_at_naturals(values)) out.push_back(require_integer(c, "chi_y coefficient"));
  return out;
}

HodgeDiamond hodge_diamond(const CompleteIntersection& x) {
  const int n = x.dim();
  const std::vector<BigInt> chi = chi_y_genus(x);
  HodgeDiamond d(n);
  for (int p = 0; p <= n; ++p) {
    const int q = n - p;
    const BigInt sign_q = (q % 2 == 0) ? 1 : -1;
    if (p == q) {
      d.set(p, p, sign_q * chi[static_cast<std::size_t>(p)]);
      continue;
    }
    // chi^p = (-1)^p h^{p,p} + (-1)^q h^{p,q}, with h^{p,p} = 1 off the middle.
    const BigInt sign_p = (p % 2 == 0) ? 1 : -1;
    d.set(p, q, sign_q * (chi[static_cast<std::size_t>(p)] - sign_p));
    d.set(p, p, 1);
  }

  d.check_lefschetz_shape();
  if (d.betti(n) != middle_betti(x)) {
    throw ConsistencyError("Hodge/Betti route mismatch for " + x.to_string() + ": " +
                           d.betti(n).get_str() + " vs " + middle_betti(x).get_str());
  }
  if (x.codim() == 1) {
    const HodgeDiamond jac = hodge_diamond_wps(WeightedHypersurface::ordinary(n, x.degrees().front()));
    if (jac != d) {
      throw ConsistencyError("chi_y and Jacobian-ring diamonds differ for " + x.to_string());
    }
  }
  return d;
}

std::vector<CompleteIntersection> classify_level_one(int max_dim, int max_degree_sum,
                                                     bool include_even) {
  if (max_dim < 1) throw InvalidArgument("classify_level_one: max_dim must be >= 1");
  std::vector<CompleteIntersection> candidates;
  std::vector<int> cur;
  std::function<void(int, int, int)> gen = [&](int n, int min_deg, int budget) {
    if (!cur.empty()) candidates.emplace_back(n, cur);
    for (int d = min_deg; d <= budget; ++d) {
      cur.push_back(d);
      gen(n, d, budget - d);
      cur.pop_back();
    }
  };
  for (int n = 3; n <= max_dim; ++n) {
    if (n % 2 == 0 && !include_even) continue;
    gen(n, 2, max_degree_sum);
  }

  const auto keep = parallel_map(candidates.size(), [&](std::size_t i) {
    const auto& x = candidates[i];
    const auto level = hodge_level(hodge_diamond(x), x.dim());
    return static_cast<char>(level && *level <= 1);
  });
  std::vector<CompleteIntersection> out;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (keep[i]) out.push_back(candidates[i]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hodgecalc
