#include "hodgecalc/published_claims.hpp"

#include "hodgecalc/errors.hpp"

namespace hodgecalc {

std::string subject_key_ci(int dim, const std::vector<int>& degrees) {
  std::string s = "ci:n=" + std::to_string(dim) + ":(";
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(degrees[i]);
  }
  return s + ")";
}

std::string subject_key_cover(int base_dim, int order, long branch_degree) {
  return "cover:n=" + std::to_string(base_dim) + ":m=" + std::to_string(order) +
         ":b=" + std::to_string(branch_degree);
}

const std::vector<PublishedClaim>& published_claims() {
  static const std::vector<PublishedClaim> claims = [] {
    std::vector<PublishedClaim> c;
    const std::string level_one = "level-one complete intersections: intermediate Jacobians";
    c.push_back({subject_key_ci(3, {3}), "jacobian_dim", 5, level_one + " (cubic threefold)"});
    c.push_back({subject_key_ci(3, {2, 3}), "jacobian_dim", 20, level_one + " (quadric-cubic threefold)"});
    c.push_back({subject_key_ci(3, {4}), "jacobian_dim", 30, level_one + " (quartic threefold)"});
    c.push_back({subject_key_ci(5, {3}), "jacobian_dim", 21, level_one + " (cubic fivefold)"});
    for (int m = 1; m <= 5; ++m) {
      c.push_back({subject_key_ci(2 * m + 1, {2, 2}), "jacobian_dim", m + 1,
                   level_one + " (two quadrics: Jacobian of a hyperelliptic curve of genus m+1)"});
      // Prym of a double cover of a plane curve of degree 2m+5: genus minus one.
      const long deg = 2 * m + 5;
      c.push_back({subject_key_ci(2 * m + 1, {2, 2, 2}), "jacobian_dim", (deg - 1) * (deg - 2) / 2 - 1,
                   level_one + " (three quadrics: Prym variety of a plane curve double cover)"});
    }
    const std::string quartic_double = "quartic double fivefold claim";
    const std::string qd = subject_key_cover(5, 2, 4);
    c.push_back({qd, "jacobian_dim", 142, quartic_double + " (intermediate Jacobian dimension)"});
    c.push_back({qd, "middle_betti", 284, quartic_double + " (H^5 of rank 284)"});
    c.push_back({qd, "middle_level", 1, quartic_double + " (Hodge level)"});
    return c;
  }();
  return claims;
}

std::optional<PublishedClaim> find_published_claim(std::string_view subject,
                                                   std::string_view quantity) {
  for (const auto& c : published_claims())
    if (c.subject == subject && c.quantity == quantity) return c;
  return std::nullopt;
}

namespace {

BigRat closed_form(int r, int k) {
  if (r < 1 || k < 1) throw InvalidArgument("closed form needs r >= 1 and k >= 1");
  if (r == 1) return make_rat(BigInt(k) * (k + 1), 2);
  BigInt rk;
  mpz_ui_pow_ui(rk.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(k + 1));
  return make_rat(rk - BigInt(r) * (k + 1) + k, BigInt(r - 1) * (r - 1));
}

}  // namespace

// a is the form at k = d; b is the same expression at k = 2d.
BigRat published_closed_form_a(int r, int d) { return closed_form(r, d); }
BigRat published_closed_form_b(int r, int d) { return closed_form(r, 2 * d); }

}  // namespace hodgecalc
