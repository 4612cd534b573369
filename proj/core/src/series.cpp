#include "hodgecalc/series.hpp"

#include "hodgecalc/errors.hpp"

#include <sstream>

namespace hodgecalc {

TruncSeries::TruncSeries(int order) : order_(order) {
  if (order < 0) throw InvalidArgument("series truncation order must be >= 0");
  c_.assign(static_cast<std::size_t>(order) + 1, BigRat(0));
}

TruncSeries::TruncSeries(int order, std::vector<BigRat> coeffs) : TruncSeries(order) {
  const std::size_t n = std::min(coeffs.size(), c_.size());
  for (std::size_t i = 0; i < n; ++i) c_[i] = std::move(coeffs[i]);
}

TruncSeries TruncSeries::constant(int order, const BigRat& c) {
  TruncSeries s(order);
  s.c_[0] = c;
  return s;
}

TruncSeries TruncSeries::monomial(int order, int k, const BigRat& c) {
  if (k < 0) throw InvalidArgument("monomial exponent must be >= 0");
  TruncSeries s(order);
  if (k <= order) s.c_[static_cast<std::size_t>(k)] = c;
  return s;
}

TruncSeries TruncSeries::from_integers(int order, std::span<const long> coeffs) {
  TruncSeries s(order);
  for (std::size_t i = 0; i < coeffs.size() && i < s.c_.size(); ++i) s.c_[i] = coeffs[i];
  return s;
}

const BigRat& TruncSeries::coefficient(int k) const {
  if (k < 0 || k > order_) {
    throw InvalidArgument("series coefficient " + std::to_string(k) +
                          " outside truncation order " + std::to_string(order_));
  }
  return c_[static_cast<std::size_t>(k)];
}

bool TruncSeries::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

void TruncSeries::require_same_order(const TruncSeries& o) const {
  if (o.order_ != order_) {
    throw InvalidArgument("series truncation orders differ (" + std::to_string(order_) +
                          " vs " + std::to_string(o.order_) + ")");
  }
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries out(*this);
  for (auto& x : out.c_) x = -x;
  return out;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  require_same_order(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  require_same_order(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

TruncSeries& TruncSeries::operator*=(const TruncSeries& o) {
  require_same_order(o);
  std::vector<BigRat> out(c_.size(), BigRat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; i + j < c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(out);
  return *this;
}

TruncSeries& TruncSeries::operator*=(const BigRat& c) {
  for (auto& x : c_) x *= c;
  return *this;
}

TruncSeries TruncSeries::inverse() const {
  if (c_[0] == 0) throw InvalidArgument("series inverse needs a nonzero constant term");
  TruncSeries out(order_);
  const BigRat inv0 = 1 / c_[0];
  out.c_[0] = inv0;
  for (std::size_t k = 1; k < c_.size(); ++k) {
    BigRat acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += c_[i] * out.c_[k - i];
    out.c_[k] = -acc * inv0;
  }
  return out;
}

TruncSeries TruncSeries::pow(unsigned e) const {
  TruncSeries result = one(order_);
  TruncSeries base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

TruncSeries TruncSeries::rescaled(const BigRat& c) const {
  TruncSeries out(*this);
  BigRat scale = 1;
  for (auto& x : out.c_) {
    x *= scale;
    scale *= c;
  }
  return out;
}

std::string TruncSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[k].get_str();
    if (k > 0) os << "*t^" << k;
  }
  if (first) os << "0";
  os << " + O(t^" << order_ + 1 << ")";
  return os.str();
}

const BigRat& series_coefficient(const TruncSeries& s, int k) { return s.coefficient(k); }

TruncSeries geometric_quotient_series(std::span<const long> numerator_exps,
                                      std::span<const long> denominator_exps, int order) {
  if (order < 0) throw InvalidArgument("series truncation order must be >= 0");
  std::vector<BigRat> c(static_cast<std::size_t>(order) + 1, BigRat(0));
  c[0] = 1;
  // Each factor is applied in place: multiplying by (1 - t^a) is a shifted
  // subtraction, dividing by (1 - t^b) is a shifted running sum.
  for (long a : numerator_exps) {
    if (a < 1) throw InvalidArgument("geometric_quotient_series: numerator exponent < 1");
    for (long k = order; k >= a; --k) c[static_cast<std::size_t>(k)] -= c[static_cast<std::size_t>(k - a)];
  }
  for (long b : denominator_exps) {
    if (b < 1) throw InvalidArgument("geometric_quotient_series: denominator exponent < 1");
    for (long k = b; k <= order; ++k) c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(k - b)];
  }
  return TruncSeries(order, std::move(c));
}

TruncSeries exp_series(int order, const BigRat& c) {
  if (order < 0) throw InvalidArgument("series truncation order must be >= 0");
  std::vector<BigRat> coeffs(static_cast<std::size_t>(order) + 1);
  coeffs[0] = 1;
  for (int k = 1; k <= order; ++k) coeffs[static_cast<std::size_t>(k)] = coeffs[static_cast<std::size_t>(k - 1)] * c / k;
  return TruncSeries(order, std::move(coeffs));
}

}  // namespace hodgecalc
