#pragma once

// JSON formats for polynomials, A-configurations, series, and reports.
// Integers are serialized as decimal strings everywhere (no 64-bit
// truncation); rationals additionally accept "num/den".
//
// Polynomial format:
//   { "core_vars": ["x","y"], "param_vars": ["t"],
//     "terms": [ { "exps": [e1,..,en], "coeff": <coeff> } ] }
// where <coeff> is a decimal string or an inner polynomial of the same
// shape with "core_vars": [] whose term exponents then run over the
// parameter variables.

#include <json.hpp>

#include "dworkcong/builtins.hpp"
#include "dworkcong/cone.hpp"
#include "dworkcong/report.hpp"
#include "dworkcong/trunc_series.hpp"

namespace dwork::io {

using nlohmann::json;

struct PolyInput {
  hw::ParamPoly f;  // parameter arity may be zero
  std::vector<std::string> core_vars;
  std::vector<std::string> param_vars;

  PolyInput() : f(0, LaurentPoly<Rat>(0, Rat(0))) {}

  // The polynomial as a plain rational Laurent polynomial; requires no
  // parameter variables.
  LaurentPoly<Rat> flat() const;
};

PolyInput parse_poly(const json& j);
PolyInput load_poly_file(const std::string& path);
json poly_to_json(const PolyInput& in);

std::pair<AConfig, MuSpec> parse_aconfig(const json& j);
std::pair<AConfig, MuSpec> load_aconfig_file(const std::string& path);

// "all" | "interior" | JSON array of faces (vertex-index lists)
MuSpec parse_mu(const std::string& text);

json to_json(const CongruenceReport& r);
json to_json(const UnitRootResult& r);
json to_json(const TruncSeries& s);
json to_json(const ConeSeries& s);

Rat parse_rat(const json& v);

template <class R, class Fn>
json matrix_to_json(const PeriodMatrix<R>& m, Fn entry_str) {
  json rows = json::array();
  for (int r = 0; r < m.size(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.size(); ++c) row.push_back(entry_str(m.at(r, c)));
    rows.push_back(row);
  }
  return json{{"labels", m.labels()}, {"entries", rows}};
}

}  // namespace dwork::io
