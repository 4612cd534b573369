#include "hodgecalc/exact.hpp"

#include "hodgecalc/errors.hpp"

#include <limits>

namespace hodgecalc {

BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

BigInt binomial(long n, long k) {
  if (n < 0) throw InvalidArgument("binomial: n must be non-negative");
  if (k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

BigInt exact_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw InvalidArgument("exact_div: division by zero");
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
    throw ConsistencyError("exact_div: " + a.get_str() + " is not divisible by " +
                           b.get_str());
  }
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt require_integer(const BigRat& r, const char* what) {
  if (r.get_den() != 1) {
    throw ConsistencyError(std::string(what) + " is not integral: " + r.get_str());
  }
  return r.get_num();
}

std::optional<std::int64_t> to_int64(const BigInt& v) {
  if (!mpz_fits_slong_p(v.get_mpz_t())) return std::nullopt;
  return static_cast<std::int64_t>(v.get_si());
}

long to_long(const BigInt& v) {
  if (!mpz_fits_slong_p(v.get_mpz_t())) {
    throw InvalidArgument("integer out of machine range: " + v.get_str());
  }
  return v.get_si();
}

std::string to_string(const BigInt& v) { return v.get_str(); }
std::string to_string(const BigRat& v) { return v.get_str(); }

}  // namespace hodgecalc
