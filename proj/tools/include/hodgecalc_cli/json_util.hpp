#pragma once

#include "hodgecalc/exact.hpp"
#include "hodgecalc/hodge_diamond.hpp"
#include "hodgecalc/partition.hpp"
#include "hodgecalc/schubert.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <vector>

namespace hodgecalc::cli {

using nlohmann::json;

/// JSON integer when the value fits in 64 bits, decimal string otherwise.
json to_json(const BigInt& v);
/// Integer when the denominator is 1, "p/q" string otherwise.
json to_json(const BigRat& v);
json to_json(const std::vector<BigInt>& v);
json to_json(const std::optional<int>& v);
json to_json(const Partition& p);
/// Rows h[p][q], p = 0..dim.
json hodge_to_json(const HodgeDiamond& d);
/// [{"partition": [...], "coeff": c}, ...] in basis order.
json class_to_json(const schubert::GrassmannClass& c);

}  // namespace hodgecalc::cli
