#pragma once
// Small brute-force helpers shared by the unit tests. Everything here uses
// plain machine integers and naive algorithms, on purpose: these are the
// independent reference implementations the library is checked against.

#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using Poly = std::vector<long>;

inline Poly multiply(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline Poly power(const Poly& a, int e) {
  Poly out{1};
  for (int i = 0; i < e; ++i) out = multiply(out, a);
  return out;
}

inline long coeff(const Poly& p, long k) {
  return (k >= 0 && static_cast<std::size_t>(k) < p.size()) ? p[static_cast<std::size_t>(k)] : 0;
}

/// 1 + t + ... + t^{len-1}
inline Poly ones(int len) { return Poly(static_cast<std::size_t>(len), 1); }

/// Pascal triangle rows 0..n.
inline std::vector<std::vector<long>> pascal(int n) {
  std::vector<std::vector<long>> rows;
  for (int i = 0; i <= n; ++i) {
    std::vector<long> row(static_cast<std::size_t>(i) + 1, 1);
    for (int j = 1; j < i; ++j)
      row[static_cast<std::size_t>(j)] =
          rows.back()[static_cast<std::size_t>(j) - 1] + rows.back()[static_cast<std::size_t>(j)];
    rows.push_back(std::move(row));
  }
  return rows;
}

inline long choose(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  return pascal(n)[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

/// Calls fn on every vector in [0, bound]^len.
inline void for_each_tuple(int len, int bound, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> v(static_cast<std::size_t>(len), 0);
  while (true) {
    fn(v);
    int i = 0;
    while (i < len && v[static_cast<std::size_t>(i)] == bound) v[static_cast<std::size_t>(i++)] = 0;
    if (i == len) return;
    ++v[static_cast<std::size_t>(i)];
  }
}

/// Number of degree-k monomials in the Fermat Jacobian ring
/// C[x_0..x_N] / (x_i^{d-1}): tuples with 0 <= e_i <= d-2 and sum k.
inline long fermat_jacobian_dim(int vars, int d, long k) {
  if (k < 0) return 0;
  long count = 0;
  for_each_tuple(vars, d - 2, [&](const std::vector<int>& e) {
    long s = 0;
    for (int x : e) s += x;
    if (s == k) ++count;
  });
  return count;
}

}  // namespace oracle
