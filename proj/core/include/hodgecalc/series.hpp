#pragma once

#include "hodgecalc/exact.hpp"

#include <span>
#include <string>
#include <vector>

namespace hodgecalc {

/// Dense power series in one variable, truncated at a fixed order T.
/// Coefficients 0..T are stored; anything above T is discarded.
/// Binary operations require both operands to share the truncation order.
class TruncSeries {
public:
  /// The zero series of order T.
  explicit TruncSeries(int order);
  /// Takes the given coefficients; missing ones are zero, excess ones dropped.
  TruncSeries(int order, std::vector<BigRat> coeffs);

  static TruncSeries constant(int order, const BigRat& c);
  static TruncSeries one(int order) { return constant(order, 1); }
  /// The monomial c * t^k (zero if k > order).
  static TruncSeries monomial(int order, int k, const BigRat& c = 1);
  /// Integer-coefficient polynomial sum coeffs[i] t^i.
  static TruncSeries from_integers(int order, std::span<const long> coeffs);

  int order() const noexcept { return order_; }
  const std::vector<BigRat>& coefficients() const noexcept { return c_; }

  /// Coefficient of t^k; throws InvalidArgument when k is outside [0, order].
  const BigRat& coefficient(int k) const;

  bool is_zero() const;

  TruncSeries operator-() const;
  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  TruncSeries& operator*=(const TruncSeries& o);
  TruncSeries& operator*=(const BigRat& c);

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(TruncSeries a, const TruncSeries& b) { return a *= b; }
  friend TruncSeries operator*(TruncSeries a, const BigRat& c) { return a *= c; }
  friend TruncSeries operator*(const BigRat& c, TruncSeries a) { return a *= c; }
  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

  /// Multiplicative inverse; requires a nonzero constant term.
  TruncSeries inverse() const;
  TruncSeries pow(unsigned e) const;
  /// s(c t): the coefficient of t^k is scaled by c^k.
  TruncSeries rescaled(const BigRat& c) const;

  std::string to_string() const;

private:
  void require_same_order(const TruncSeries& o) const;

  int order_;
  std::vector<BigRat> c_;
};

/// Coefficient extraction with the range check made explicit.
const BigRat& series_coefficient(const TruncSeries& s, int k);

/// Expansion of prod_i (1 - t^{a_i}) / prod_j (1 - t^{b_j}) to order T.
/// Every a_i and b_j must be >= 1.
TruncSeries geometric_quotient_series(std::span<const long> numerator_exps,
                                      std::span<const long> denominator_exps,
                                      int order);

/// exp(c t) truncated at the given order.
TruncSeries exp_series(int order, const BigRat& c);

}  // namespace hodgecalc
