#include "hodgecalc/schubert.hpp"

#include "hodgecalc/chern_roots.hpp"
#include "hodgecalc/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace hodgecalc::schubert {

// ---------------------------------------------------------------------------
// Littlewood-Richardson rule
//
// Entries 1..l(mu) are added label by label; the boxes labeled i form a
// horizontal strip of size mu_i on the current shape. The reverse reading
// word is a lattice word iff for every label i > 1 and every row k,
//   #(i-1 in rows < k) >= #(i in rows <= k).

std::map<Partition, BigInt> lr_coefficients(const Partition& lambda, const Partition& mu,
                                            std::optional<Box> box) {
  std::map<Partition, BigInt> out;
  if (box && !lambda.fits(*box)) return out;
  const int max_rows = box ? box->rows : lambda.length() + mu.length();
  const int max_cols = box ? box->cols : lambda.part(0) + mu.part(0);
  if (box && lambda.size() + mu.size() > box->rows * box->cols) return out;

  std::vector<int> shape(static_cast<std::size_t>(max_rows), 0);
  for (int i = 0; i < lambda.length(); ++i) shape[static_cast<std::size_t>(i)] = lambda.part(i);
  const int labels = mu.length();
  // counts[label][row]
  std::vector<std::vector<int>> counts(static_cast<std::size_t>(labels),
                                       std::vector<int>(static_cast<std::size_t>(max_rows), 0));

  std::function<void(int)> place_label;
  std::function<void(int, int, int, int, const std::vector<int>&)> place_row;

  place_label = [&](int label) {
    if (label == labels) {
      out[Partition(std::vector<int>(shape.begin(), shape.end()))] += 1;
      return;
    }
    const std::vector<int> before = shape;
    place_row(label, 0, mu.part(label), 0, before);
  };

  // running: number of `label` entries placed in rows < row.
  place_row = [&](int label, int row, int remaining, int running, const std::vector<int>& before) {
    if (remaining == 0) {
      place_label(label + 1);
      return;
    }
    if (row >= max_rows) return;
    int cap = max_cols;
    if (row > 0) cap = std::min(cap, before[static_cast<std::size_t>(row - 1)]);
    int most = std::min(remaining, cap - before[static_cast<std::size_t>(row)]);
    if (label > 0) {
      int prev_above = 0;
      for (int j = 0; j < row; ++j) prev_above += counts[static_cast<std::size_t>(label - 1)][static_cast<std::size_t>(j)];
      most = std::min(most, prev_above - running);
    }
    for (int x = std::max(most, 0); x >= 0; --x) {
      shape[static_cast<std::size_t>(row)] = before[static_cast<std::size_t>(row)] + x;
      counts[static_cast<std::size_t>(label)][static_cast<std::size_t>(row)] = x;
      place_row(label, row + 1, remaining - x, running + x, before);
    }
    shape[static_cast<std::size_t>(row)] = before[static_cast<std::size_t>(row)];
    counts[static_cast<std::size_t>(label)][static_cast<std::size_t>(row)] = 0;
  };

  place_label(0);
  return out;
}

// ---------------------------------------------------------------------------
// GrassmannRing

RingPtr GrassmannRing::create(int r, int n) {
  if (r < 0 || n <= r) throw InvalidArgument("Grassmannian G(r,n) needs 0 <= r < n");
  return RingPtr(new GrassmannRing(r, n));
}

GrassmannRing::GrassmannRing(int r, int n) : r_(r), n_(n) {
  basis_ = partitions_in_box(r + 1, n - r);
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
}

std::optional<std::size_t> GrassmannRing::index_of(const Partition& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const GrassmannRing::Terms& GrassmannRing::product_terms(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  const std::size_t key = i * basis_.size() + j;
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  Terms terms;
  for (const auto& [nu, c] : lr_coefficients(basis_[i], basis_[j], box())) {
    terms.emplace_back(index_.at(nu), c);
  }
  std::lock_guard lock(cache_mutex_);
  return cache_.emplace(key, std::move(terms)).first->second;
}

std::string GrassmannRing::to_string() const {
  return "G(" + std::to_string(r_) + "," + std::to_string(n_) + ")";
}

// ---------------------------------------------------------------------------
// GrassmannClass

GrassmannClass::GrassmannClass(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw InvalidArgument("Grassmann class needs a ring");
}

GrassmannClass GrassmannClass::one(RingPtr ring) { return sigma(std::move(ring), Partition{}); }

GrassmannClass GrassmannClass::sigma(RingPtr ring, const Partition& lambda, const BigInt& coeff) {
  GrassmannClass c(ring);
  if (auto idx = ring->index_of(lambda)) c.add_term(*idx, coeff);
  return c;
}

GrassmannClass GrassmannClass::special(RingPtr ring, int k) {
  if (k < 0) return zero(std::move(ring));
  return sigma(std::move(ring), Partition(k == 0 ? std::vector<int>{} : std::vector<int>{k}));
}

GrassmannClass GrassmannClass::special_column(RingPtr ring, int k) {
  if (k < 0) return zero(std::move(ring));
  return sigma(std::move(ring), Partition(std::vector<int>(static_cast<std::size_t>(k), 1)));
}

void GrassmannClass::add_term(std::size_t idx, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(idx, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void GrassmannClass::require_same_ring(const GrassmannClass& o) const {
  if (ring_ != o.ring_ &&
      (ring_->plane_dim() != o.ring_->plane_dim() || ring_->ambient_dim() != o.ring_->ambient_dim())) {
    throw InvalidArgument("classes live on different Grassmannians: " + ring_->to_string() +
                          " vs " + o.ring_->to_string());
  }
}

std::vector<std::pair<Partition, BigInt>> GrassmannClass::terms() const {
  std::vector<std::pair<Partition, BigInt>> out;
  for (const auto& [i, c] : terms_) out.emplace_back(ring_->basis_element(i), c);
  return out;
}

BigInt GrassmannClass::coefficient(const Partition& lambda) const {
  auto idx = ring_->index_of(lambda);
  if (!idx) return 0;
  auto it = terms_.find(*idx);
  return it == terms_.end() ? BigInt(0) : it->second;
}

GrassmannClass GrassmannClass::part(int degree) const {
  GrassmannClass out(ring_);
  for (const auto& [i, c] : terms_)
    if (ring_->basis_element(i).size() == degree) out.add_term(i, c);
  return out;
}

BigInt GrassmannClass::integral() const {
  auto it = terms_.find(ring_->top_index());
  return it == terms_.end() ? BigInt(0) : it->second;
}

GrassmannClass GrassmannClass::operator-() const {
  GrassmannClass out(*this);
  for (auto& [i, c] : out.terms_) c = -c;
  return out;
}

GrassmannClass& GrassmannClass::operator+=(const GrassmannClass& o) {
  require_same_ring(o);
  for (const auto& [i, c] : o.terms_) add_term(i, c);
  return *this;
}

GrassmannClass& GrassmannClass::operator-=(const GrassmannClass& o) {
  require_same_ring(o);
  for (const auto& [i, c] : o.terms_) add_term(i, -c);
  return *this;
}

GrassmannClass& GrassmannClass::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [i, v] : terms_) v *= c;
  return *this;
}

GrassmannClass& GrassmannClass::operator*=(const GrassmannClass& o) { return *this = lr_multiply(*this, o); }

GrassmannClass operator*(const GrassmannClass& a, const GrassmannClass& b) { return lr_multiply(a, b); }

bool operator==(const GrassmannClass& a, const GrassmannClass& b) {
  a.require_same_ring(b);
  return a.terms_ == b.terms_;
}

GrassmannClass GrassmannClass::pow(unsigned e) const {
  GrassmannClass result = one(ring_);
  for (unsigned i = 0; i < e; ++i) result = result * *this;
  return result;
}

std::string GrassmannClass::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [i, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.get_str() + "*s" + ring_->basis_element(i).to_string();
  }
  return s;
}

GrassmannClass lr_multiply(const GrassmannClass& a, const GrassmannClass& b) {
  if (a.ring()->plane_dim() != b.ring()->plane_dim() ||
      a.ring()->ambient_dim() != b.ring()->ambient_dim()) {
    throw InvalidArgument("lr_multiply: ring mismatch");
  }
  const auto& ring = *a.ring();
  const int dim = ring.dimension();
  std::map<std::size_t, BigInt> acc;
  for (const auto& [i, ci] : a.by_index()) {
    const int di = ring.basis_element(i).size();
    for (const auto& [j, cj] : b.by_index()) {
      if (di + ring.basis_element(j).size() > dim) continue;
      const BigInt cij = ci * cj;
      for (const auto& [k, c] : ring.product_terms(i, j)) acc[k] += cij * c;
    }
  }
  GrassmannClass out(a.ring());
  for (const auto& [k, c] : acc)
    if (c != 0) out += GrassmannClass::sigma(a.ring(), ring.basis_element(k), c);
  return out;
}

// ---------------------------------------------------------------------------
// Pieri

namespace {

// All nu with nu / lambda a horizontal strip of size k inside the box.
void horizontal_strips(const Partition& lambda, int k, const Box& box,
                       const std::function<void(const Partition&)>& emit) {
  std::vector<int> nu(static_cast<std::size_t>(box.rows), 0);
  std::function<void(int, int)> rec = [&](int row, int left) {
    if (left == 0) {
      for (int i = row; i < box.rows; ++i) nu[static_cast<std::size_t>(i)] = lambda.part(i);
      emit(Partition(std::vector<int>(nu.begin(), nu.end())));
      return;
    }
    if (row >= box.rows) return;
    const int base = lambda.part(row);
    const int cap = row == 0 ? box.cols : lambda.part(row - 1);
    for (int x = std::min(left, cap - base); x >= 0; --x) {
      nu[static_cast<std::size_t>(row)] = base + x;
      rec(row + 1, left - x);
    }
  };
  if (lambda.fits(box)) rec(0, k);
}

}  // namespace

GrassmannClass pieri_row(const GrassmannClass& a, int k) {
  GrassmannClass out(a.ring());
  if (k < 0) return out;
  const Box box = a.ring()->box();
  for (const auto& [lambda, c] : a.terms()) {
    horizontal_strips(lambda, k, box, [&](const Partition& nu) {
      out += GrassmannClass::sigma(a.ring(), nu, c);
    });
  }
  return out;
}

GrassmannClass pieri_column(const GrassmannClass& a, int k) {
  GrassmannClass out(a.ring());
  if (k < 0) return out;
  const Box box = a.ring()->box();
  const Box transposed{box.cols, box.rows};
  for (const auto& [lambda, c] : a.terms()) {
    horizontal_strips(lambda.conjugate(), k, transposed, [&](const Partition& nu) {
      out += GrassmannClass::sigma(a.ring(), nu.conjugate(), c);
    });
  }
  return out;
}

GrassmannClass pieri_multiply(const GrassmannClass& a, const GrassmannClass& b) {
  GrassmannClass out(a.ring());
  for (const auto& [mu, cmu] : b.terms()) {
    const int l = mu.length();
    std::vector<int> perm(static_cast<std::size_t>(l));
    std::iota(perm.begin(), perm.end(), 0);
    // sigma_mu = det(sigma_{mu_i + j - i}); expand over permutations.
    do {
      int inversions = 0;
      for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j)
          if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
      GrassmannClass term = a;
      for (int i = 0; i < l && !term.is_zero(); ++i) {
        const int idx = mu.part(i) + perm[static_cast<std::size_t>(i)] - i;
        term = idx < 0 ? GrassmannClass(a.ring()) : pieri_row(term, idx);
      }
      term *= (inversions % 2 == 0) ? cmu : BigInt(-cmu);
      out += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bundles

BundleData::BundleData(int rank_, std::vector<GrassmannClass> chern_)
    : rank(rank_), chern(std::move(chern_)) {
  if (rank < 1) throw InvalidArgument("bundle rank must be >= 1");
  if (static_cast<int>(chern.size()) != rank) {
    throw InvalidArgument("bundle needs exactly rank Chern classes");
  }
}

GrassmannClass BundleData::c(int i) const {
  if (i == 0) return GrassmannClass::one(ring());
  if (i < 0 || i > rank) return GrassmannClass::zero(ring());
  return chern[static_cast<std::size_t>(i - 1)];
}

GrassmannClass BundleData::total() const {
  GrassmannClass t = GrassmannClass::one(ring());
  for (const auto& ci : chern) t += ci;
  return t;
}

std::vector<GrassmannClass> BundleData::segre(int max_degree) const {
  std::vector<GrassmannClass> s{GrassmannClass::one(ring())};
  for (int j = 1; j <= max_degree; ++j) {
    GrassmannClass sj = GrassmannClass::zero(ring());
    for (int i = 1; i <= std::min(j, rank); ++i) sj -= c(i) * s[static_cast<std::size_t>(j - i)];
    s.push_back(std::move(sj));
  }
  return s;
}

BundleData dual(const BundleData& e) {
  std::vector<GrassmannClass> ch;
  for (int i = 1; i <= e.rank; ++i) ch.push_back(i % 2 == 0 ? e.c(i) : -e.c(i));
  return BundleData(e.rank, std::move(ch));
}

BundleData trivial_bundle(RingPtr ring, int rank) {
  return BundleData(rank, std::vector<GrassmannClass>(static_cast<std::size_t>(rank),
                                                      GrassmannClass::zero(ring)));
}

BundleData dual_subbundle(RingPtr ring) {
  std::vector<GrassmannClass> ch;
  for (int i = 1; i <= ring->plane_dim() + 1; ++i) ch.push_back(GrassmannClass::special_column(ring, i));
  return BundleData(ring->plane_dim() + 1, std::move(ch));
}

TautologicalBundles tautological_bundles(RingPtr ring) {
  const int rank = ring->ambient_dim() - ring->plane_dim();
  std::vector<GrassmannClass> q;
  for (int i = 1; i <= rank; ++i) q.push_back(GrassmannClass::special(ring, i));
  return {dual(dual_subbundle(ring)), BundleData(rank, std::move(q))};
}

BundleData direct_sum(const BundleData& e, const BundleData& f) {
  const int rank = e.rank + f.rank;
  std::vector<GrassmannClass> ch;
  for (int j = 1; j <= rank; ++j) {
    GrassmannClass cj = GrassmannClass::zero(e.ring());
    for (int i = 0; i <= j; ++i) cj += e.c(i) * f.c(j - i);
    ch.push_back(std::move(cj));
  }
  return BundleData(rank, std::move(ch));
}

BundleData sym_power_chern(const BundleData& e, int k, const std::optional<GrassmannClass>& twist,
                           std::size_t budget) {
  if (k < 1) throw InvalidArgument("sym_power_chern: k must be >= 1");
  const BigInt sym_rank = binomial(e.rank + k - 1, k);
  if (sym_rank > static_cast<unsigned long>(budget)) {
    throw BudgetExceeded("rank of Sym^" + std::to_string(k) + " is " + sym_rank.get_str() +
                         ", above the budget of " + std::to_string(budget));
  }
  const RingPtr& ring = e.ring();
  const int rank = static_cast<int>(sym_rank.get_si());
  const auto universal = chern_of_linear_roots(e.rank, sym_power_exponents(e.rank, k), ring->dimension());

  // Powers c_i^p, memoized; products above the ring dimension vanish.
  std::map<std::pair<int, int>, GrassmannClass> powers;
  auto power = [&](int i, int p) -> const GrassmannClass& {
    auto key = std::make_pair(i, p);
    if (auto it = powers.find(key); it != powers.end()) return it->second;
    GrassmannClass v = e.c(i).pow(static_cast<unsigned>(p));
    return powers.emplace(key, std::move(v)).first->second;
  };

  std::vector<GrassmannClass> total;
  for (int j = 0; j <= rank; ++j) {
    GrassmannClass cj = GrassmannClass::zero(ring);
    if (j < static_cast<int>(universal.size())) {
      for (const auto& [exps, coeff] : universal[static_cast<std::size_t>(j)].terms) {
        GrassmannClass term = GrassmannClass::one(ring);
        for (std::size_t i = 0; i < exps.size() && !term.is_zero(); ++i) {
          if (exps[i] > 0) term = term * power(static_cast<int>(i) + 1, exps[i]);
        }
        cj += term * coeff;
      }
    }
    total.push_back(std::move(cj));
  }
  if (twist) total = twist_chern(total, rank, *twist, GrassmannClass::one(ring));
  total.erase(total.begin());
  return BundleData(rank, std::move(total));
}

BigInt det_sym_multiplier(int rank, int k) {
  if (rank < 1 || k < 1) throw InvalidArgument("det_sym_multiplier: need rank >= 1 and k >= 1");
  return exact_div(BigInt(k) * binomial(rank - 1 + k, k), rank);
}

}  // namespace hodgecalc::schubert
