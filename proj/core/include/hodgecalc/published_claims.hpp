#pragma once

// Values asserted in the literature that the library can recompute. They are
// used for side-by-side reporting only; no computation depends on them.

#include "hodgecalc/exact.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hodgecalc {

inline constexpr std::string_view kPublishedClaimsVersion = "1";

struct PublishedClaim {
  std::string subject;   // e.g. "ci:n=3:(3)" or "cover:n=5:m=2:b=4"
  std::string quantity;  // "middle_betti", "jacobian_dim", "middle_level"
  BigInt value;
  std::string source;
};

std::string subject_key_ci(int dim, const std::vector<int>& degrees);
std::string subject_key_cover(int base_dim, int order, long branch_degree);

const std::vector<PublishedClaim>& published_claims();

std::optional<PublishedClaim> find_published_claim(std::string_view subject,
                                                   std::string_view quantity);

/// Closed forms stated for the determinant multipliers of Sym^d and Sym^{2d}
/// of the rank-(r+1) bundle. For r != 1 they do not always agree with the
/// splitting principle; the library reports them alongside, never uses them.
BigRat published_closed_form_a(int r, int d);
BigRat published_closed_form_b(int r, int d);
inline constexpr std::string_view kClosedFormSource =
    "published closed forms for det Sym^d / det Sym^{2d} (double cover canonical bundle)";

}  // namespace hodgecalc
