#include "hodgecalc_cli/json_util.hpp"

namespace hodgecalc::cli {

json to_json(const BigInt& v) {
  if (auto x = to_int64(v)) return *x;
  return v.get_str();
}

json to_json(const BigRat& v) {
  if (v.get_den() == 1) return to_json(BigInt(v.get_num()));
  return v.get_str();
}

json to_json(const std::vector<BigInt>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(const std::optional<int>& v) {
  if (!v) return nullptr;
  return *v;
}

json to_json(const Partition& p) { return p.parts(); }

json hodge_to_json(const HodgeDiamond& d) {
  json rows = json::array();
  for (int p = 0; p <= d.dim(); ++p) {
    json row = json::array();
    for (int q = 0; q <= d.dim(); ++q) row.push_back(to_json(d.h(p, q)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json class_to_json(const schubert::GrassmannClass& c) {
  json out = json::array();
  for (const auto& [lambda, coeff] : c.terms())
    out.push_back({{"partition", to_json(lambda)}, {"coeff", to_json(coeff)}});
  return out;
}

}  // namespace hodgecalc::cli
