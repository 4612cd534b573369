#pragma once

// Exact integer and rational scalars. Everything in hodgecalc is computed
// over Z or Q; there is no floating point anywhere in the library.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace hodgecalc {

using BigInt = mpz_class;

/// GMP rationals are kept canonical (lowest terms, positive denominator)
/// by every arithmetic operation. Construct from a raw numerator and
/// denominator only through make_rat().
using BigRat = mpq_class;

BigRat make_rat(const BigInt& num, const BigInt& den);

inline BigRat to_rat(long v) { return BigRat(v); }

/// Binomial coefficient C(n, k); 0 when k < 0 or k > n. Requires n >= 0.
BigInt binomial(long n, long k);

/// Exact quotient a / b; throws ConsistencyError if b does not divide a.
BigInt exact_div(const BigInt& a, const BigInt& b);

/// The integer value of r, or ConsistencyError if r is not integral.
BigInt require_integer(const BigRat& r, const char* what);

std::optional<std::int64_t> to_int64(const BigInt& v);

/// Converts with a range check; throws InvalidArgument on overflow.
long to_long(const BigInt& v);

std::string to_string(const BigInt& v);
std::string to_string(const BigRat& v);

}  // namespace hodgecalc
