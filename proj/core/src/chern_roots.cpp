#include "hodgecalc/chern_roots.hpp"

#include "hodgecalc/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

namespace hodgecalc::schubert {

int ChernPolynomial::weighted_degree(const std::vector<int>& exps) const {
  int d = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) d += static_cast<int>(i + 1) * exps[i];
  return d;
}

std::vector<std::vector<int>> sym_power_exponents(int rank, int k) {
  if (rank < 1 || k < 0) throw InvalidArgument("sym_power_exponents: need rank >= 1, k >= 0");
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(rank), 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == rank - 1) {
      cur[static_cast<std::size_t>(pos)] = left;
      out.push_back(cur);
      return;
    }
    for (int a = left; a >= 0; --a) {
      cur[static_cast<std::size_t>(pos)] = a;
      rec(pos + 1, left - a);
    }
  };
  rec(0, k);
  return out;
}

namespace {

// Monomials in e variables of total degree <= D, with a compact index and a
// successor table for multiplying by a single variable.
class MonomialTable {
public:
  MonomialTable(int vars, int max_degree) : vars_(vars), max_degree_(max_degree) {
    std::vector<int> cur(static_cast<std::size_t>(vars), 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
      if (pos == vars_) {
        index_[cur] = exps_.size();
        exps_.push_back(cur);
        return;
      }
      for (int a = 0; a <= left; ++a) {
        cur[static_cast<std::size_t>(pos)] = a;
        rec(pos + 1, left - a);
      }
    };
    rec(0, max_degree);
    // Process higher degrees first so in-place updates read unmodified lower terms.
    order_.resize(exps_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
    std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return degree(a) > degree(b);
    });
    shift_.assign(exps_.size() * static_cast<std::size_t>(vars), -1);
    for (std::size_t m = 0; m < exps_.size(); ++m) {
      for (int v = 0; v < vars; ++v) {
        auto e = exps_[m];
        ++e[static_cast<std::size_t>(v)];
        auto it = index_.find(e);
        if (it != index_.end()) shift_[m * static_cast<std::size_t>(vars) + static_cast<std::size_t>(v)] = static_cast<long>(it->second);
      }
    }
  }

  std::size_t size() const { return exps_.size(); }
  int vars() const { return vars_; }
  const std::vector<int>& exps(std::size_t i) const { return exps_[i]; }
  int degree(std::size_t i) const {
    int d = 0;
    for (int a : exps_[i]) d += a;
    return d;
  }
  long shift(std::size_t m, int v) const {
    return shift_[m * static_cast<std::size_t>(vars_) + static_cast<std::size_t>(v)];
  }
  std::size_t index(const std::vector<int>& e) const { return index_.at(e); }
  const std::vector<std::size_t>& descending_degree_order() const { return order_; }

private:
  int vars_;
  int max_degree_;
  std::vector<std::vector<int>> exps_;
  std::map<std::vector<int>, std::size_t> index_;
  std::vector<std::size_t> order_;
  std::vector<long> shift_;
};

bool is_partition(const std::vector<int>& e) {
  for (std::size_t i = 1; i < e.size(); ++i)
    if (e[i] > e[i - 1]) return false;
  return true;
}

std::int64_t checked_add_mul(std::int64_t acc, std::int64_t a, std::int64_t b) {
  std::int64_t prod = 0;
  if (__builtin_mul_overflow(a, b, &prod) || __builtin_add_overflow(acc, prod, &acc)) {
    throw BudgetExceeded("elementary symmetric product overflows 64-bit counters");
  }
  return acc;
}

// Products e_1^{b_1} ... e_e^{b_e} as sparse vectors over MonomialTable,
// memoized by exponent vector. Coefficients count 0-1 matrices and stay small.
class ElementaryProducts {
public:
  using Sparse = std::vector<std::pair<std::size_t, std::int64_t>>;

  explicit ElementaryProducts(const MonomialTable& table) : table_(table) {
    const int e = table.vars();
    for (unsigned mask = 1; mask < (1U << e); ++mask) {
      subsets_[static_cast<std::size_t>(__builtin_popcount(mask))].push_back(mask);
    }
  }

  const Sparse& get(const std::vector<int>& beta) {
    auto it = memo_.find(beta);
    if (it != memo_.end()) return it->second;
    Sparse result;
    int j = static_cast<int>(beta.size());
    while (j > 0 && beta[static_cast<std::size_t>(j - 1)] == 0) --j;
    if (j == 0) {
      result.emplace_back(table_.index(std::vector<int>(beta.size(), 0)), 1);
    } else {
      auto prev = beta;
      --prev[static_cast<std::size_t>(j - 1)];
      const Sparse base = get(prev);
      std::map<std::size_t, std::int64_t> acc;
      for (const auto& [m, c] : base) {
        for (unsigned mask : subsets_[static_cast<std::size_t>(j)]) {
          long idx = static_cast<long>(m);
          for (int v = 0; v < table_.vars() && idx >= 0; ++v) {
            if (mask & (1U << v)) idx = table_.shift(static_cast<std::size_t>(idx), v);
          }
          if (idx < 0) continue;
          auto& slot = acc[static_cast<std::size_t>(idx)];
          slot = checked_add_mul(slot, c, 1);
        }
      }
      for (const auto& [m, c] : acc)
        if (c != 0) result.emplace_back(m, c);
    }
    return memo_.emplace(beta, std::move(result)).first->second;
  }

private:
  const MonomialTable& table_;
  std::map<std::size_t, std::vector<unsigned>> subsets_;
  std::map<std::vector<int>, Sparse> memo_;
};

}  // namespace

std::vector<ChernPolynomial> chern_of_linear_roots(int rank,
                                                   const std::vector<std::vector<int>>& roots,
                                                   int max_degree) {
  if (rank < 1) throw InvalidArgument("chern_of_linear_roots: rank must be >= 1");
  if (max_degree < 0) throw InvalidArgument("chern_of_linear_roots: negative degree bound");
  for (const auto& r : roots)
    if (static_cast<int>(r.size()) != rank) throw InvalidArgument("root length differs from rank");

  const int top = std::min(static_cast<int>(roots.size()), max_degree);
  const MonomialTable table(rank, top);

  // Dense product of (1 + a . x) over all roots, truncated at degree `top`.
  std::vector<BigInt> f(table.size(), BigInt(0));
  f[table.index(std::vector<int>(static_cast<std::size_t>(rank), 0))] = 1;
  for (const auto& a : roots) {
    for (std::size_t m : table.descending_degree_order()) {
      if (f[m] == 0) continue;
      for (int v = 0; v < rank; ++v) {
        const int av = a[static_cast<std::size_t>(v)];
        if (av == 0) continue;
        const long up = table.shift(m, v);
        if (up >= 0) f[static_cast<std::size_t>(up)] += av * f[m];
      }
    }
  }

  // The product is symmetric, so only coefficients at partitions are needed.
  std::map<std::vector<int>, BigInt, std::greater<>> lead;
  for (std::size_t m = 0; m < table.size(); ++m) {
    if (f[m] != 0 && is_partition(table.exps(m))) lead.emplace(table.exps(m), f[m]);
  }

  std::vector<ChernPolynomial> out(static_cast<std::size_t>(top) + 1);
  for (auto& p : out) p.rank = rank;
  ElementaryProducts elementary(table);
  // Peel off the lexicographically largest partition alpha with
  // e_1^{a1-a2} e_2^{a2-a3} ... e_e^{ae}, whose leading monomial is x^alpha.
  while (!lead.empty()) {
    auto it = lead.begin();
    const std::vector<int> alpha = it->first;
    const BigInt coeff = it->second;
    std::vector<int> beta(static_cast<std::size_t>(rank));
    int degree = 0;
    for (int i = 0; i < rank; ++i) {
      const int next = (i + 1 < rank) ? alpha[static_cast<std::size_t>(i + 1)] : 0;
      beta[static_cast<std::size_t>(i)] = alpha[static_cast<std::size_t>(i)] - next;
      degree += alpha[static_cast<std::size_t>(i)];
    }
    out[static_cast<std::size_t>(degree)].terms[beta] += coeff;
    for (const auto& [m, c] : elementary.get(beta)) {
      const auto& e = table.exps(m);
      if (!is_partition(e)) continue;
      auto slot = lead.find(e);
      if (slot == lead.end()) slot = lead.emplace(e, BigInt(0)).first;
      slot->second -= coeff * BigInt(static_cast<long>(c));
      if (slot->second == 0) lead.erase(slot);
    }
  }
  for (auto& p : out) std::erase_if(p.terms, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace hodgecalc::schubert
