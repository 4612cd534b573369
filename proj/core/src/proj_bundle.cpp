#include "hodgecalc/proj_bundle.hpp"

#include "hodgecalc/errors.hpp"

namespace hodgecalc::schubert {

ProjClass::ProjClass(ProjRingPtr ring, std::vector<GrassmannClass> levels)
    : ring_(std::move(ring)), levels_(std::move(levels)) {
  if (!ring_) throw InvalidArgument("projective bundle class needs a ring");
  while (!levels_.empty() && levels_.back().is_zero()) levels_.pop_back();
}

bool ProjClass::is_reduced() const noexcept {
  return static_cast<int>(levels_.size()) <= ring_->fiber_rank();
}

bool ProjClass::is_zero() const noexcept { return levels_.empty(); }

ProjClass& ProjClass::operator+=(const ProjClass& o) {
  if (levels_.size() < o.levels_.size()) levels_.resize(o.levels_.size(), GrassmannClass::zero(ring_->base()));
  for (std::size_t j = 0; j < o.levels_.size(); ++j) levels_[j] += o.levels_[j];
  while (!levels_.empty() && levels_.back().is_zero()) levels_.pop_back();
  return *this;
}

ProjClass& ProjClass::operator-=(const ProjClass& o) {
  ProjClass neg = o;
  neg *= BigInt(-1);
  return *this += neg;
}

ProjClass& ProjClass::operator*=(const BigInt& c) {
  for (auto& l : levels_) l *= c;
  while (!levels_.empty() && levels_.back().is_zero()) levels_.pop_back();
  return *this;
}

ProjClass operator*(const ProjClass& a, const ProjClass& b) { return a.ring_->multiply(a, b); }

ProjClass operator*(const GrassmannClass& base, const ProjClass& a) {
  std::vector<GrassmannClass> levels;
  for (const auto& l : a.levels_) levels.push_back(base * l);
  return ProjClass(a.ring_, std::move(levels));
}

bool operator==(const ProjClass& a, const ProjClass& b) {
  if (a.levels_.size() != b.levels_.size()) return false;
  for (std::size_t j = 0; j < a.levels_.size(); ++j)
    if (!(a.levels_[j] == b.levels_[j])) return false;
  return true;
}

std::string ProjClass::to_string() const {
  if (levels_.empty()) return "0";
  std::string s;
  for (std::size_t j = 0; j < levels_.size(); ++j) {
    if (levels_[j].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + levels_[j].to_string() + ")*z^" + std::to_string(j);
  }
  return s;
}

ProjRingPtr ProjBundleRing::create(BundleData bundle) {
  return ProjRingPtr(new ProjBundleRing(std::move(bundle)));
}

ProjBundleRing::ProjBundleRing(BundleData bundle) : bundle_(std::move(bundle)) {}

ProjClass ProjBundleRing::zero() const { return ProjClass(shared_from_this(), {}); }

ProjClass ProjBundleRing::one() const { return pullback(GrassmannClass::one(base())); }

ProjClass ProjBundleRing::zeta() const {
  return reduce(raw({GrassmannClass::zero(base()), GrassmannClass::one(base())}));
}

ProjClass ProjBundleRing::pullback(const GrassmannClass& c) const {
  return ProjClass(shared_from_this(), {c});
}

ProjClass ProjBundleRing::raw(std::vector<GrassmannClass> levels) const {
  return ProjClass(shared_from_this(), std::move(levels));
}

ProjClass ProjBundleRing::reduce(const ProjClass& x) const {
  const int e = fiber_rank();
  std::vector<GrassmannClass> levels = x.levels();
  // zeta^j = -sum_{i=1}^{e} c_i zeta^{j-i} for j >= e, eliminated top-down.
  for (int j = static_cast<int>(levels.size()) - 1; j >= e; --j) {
    const GrassmannClass top = levels[static_cast<std::size_t>(j)];
    if (top.is_zero()) continue;
    for (int i = 1; i <= e; ++i) {
      levels[static_cast<std::size_t>(j - i)] -= bundle_.c(i) * top;
    }
    levels[static_cast<std::size_t>(j)] = GrassmannClass::zero(base());
  }
  return ProjClass(shared_from_this(), std::move(levels));
}

ProjClass ProjBundleRing::multiply(const ProjClass& a, const ProjClass& b) const {
  if (a.levels().empty() || b.levels().empty()) return zero();
  std::vector<GrassmannClass> prod(a.levels().size() + b.levels().size() - 1,
                                   GrassmannClass::zero(base()));
  for (std::size_t i = 0; i < a.levels().size(); ++i) {
    if (a.levels()[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.levels().size(); ++j) {
      if (b.levels()[j].is_zero()) continue;
      prod[i + j] += a.levels()[i] * b.levels()[j];
    }
  }
  return reduce(raw(std::move(prod)));
}

GrassmannClass proj_pushforward(const ProjClass& x) {
  if (!x.is_reduced()) {
    throw InvalidArgument("proj_pushforward needs a class reduced modulo the bundle relation");
  }
  const int e = x.ring()->fiber_rank();
  if (static_cast<int>(x.levels().size()) < e) return GrassmannClass::zero(x.ring()->base());
  return x.levels()[static_cast<std::size_t>(e - 1)];
}

GrassmannClass segre_pushforward(const ProjClass& x) {
  const auto& ring = *x.ring();
  const int e = ring.fiber_rank();
  const int top = static_cast<int>(x.levels().size()) - e;
  GrassmannClass out = GrassmannClass::zero(ring.base());
  if (top < 0) return out;
  const auto s = ring.bundle().segre(top);
  for (int j = e - 1; j < static_cast<int>(x.levels().size()); ++j) {
    out += s[static_cast<std::size_t>(j - e + 1)] * x.levels()[static_cast<std::size_t>(j)];
  }
  return out;
}

BigInt proj_integral(const ProjClass& x) {
  return (x.is_reduced() ? proj_pushforward(x) : segre_pushforward(x)).integral();
}

}  // namespace hodgecalc::schubert
