#include "dworkcong/json_io.hpp"

#include <fstream>

namespace dwork::io {

Rat parse_rat(const json& v) {
  if (v.is_number_integer()) return Rat(v.get<long long>());
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s.empty()) throw std::invalid_argument("empty number literal");
    return Rat(s);  // accepts "123", "-7", "1/4"
  }
  throw std::invalid_argument("expected integer or decimal string");
}

LaurentPoly<Rat> PolyInput::flat() const {
  if (!param_vars.empty())
    throw std::invalid_argument(
        "this command expects a polynomial without parameter variables");
  LaurentPoly<Rat> g(f.arity(), Rat(0));
  for (const auto& [e, c] : f.terms())
    g.add_term(e, c.coeff(ExponentVec::zeros(0)));
  return g;
}

namespace {

ExponentVec parse_exps(const json& j, size_t arity) {
  if (!j.is_array() || j.size() != arity)
    throw std::invalid_argument("exps must be an array matching the arity");
  std::vector<int32_t> e;
  for (const auto& v : j) e.push_back(v.get<int32_t>());
  return ExponentVec(e);
}

}  // namespace

PolyInput parse_poly(const json& j) {
  PolyInput in;
  in.core_vars = j.value("core_vars", std::vector<std::string>{});
  in.param_vars = j.value("param_vars", std::vector<std::string>{});
  const size_t n = in.core_vars.size();
  const size_t np = in.param_vars.size();
  LaurentPoly<Rat> pzero(static_cast<int>(np), Rat(0));
  in.f = hw::ParamPoly(static_cast<int>(n), pzero);
  if (!j.contains("terms") || !j.at("terms").is_array())
    throw std::invalid_argument("polynomial JSON needs a terms array");
  for (const auto& t : j.at("terms")) {
    ExponentVec e = parse_exps(t.at("exps"), n);
    const json& c = t.at("coeff");
    LaurentPoly<Rat> coeff = pzero;
    if (c.is_object()) {
      // inner polynomial: core_vars must be empty, exponents run over the
      // parameter variables
      auto inner_core = c.value("core_vars", std::vector<std::string>{});
      if (!inner_core.empty())
        throw std::invalid_argument("inner polynomial must have core_vars []");
      for (const auto& it : c.at("terms")) {
        ExponentVec pe = parse_exps(it.at("exps"), np);
        coeff.add_term(pe, parse_rat(it.at("coeff")));
      }
    } else {
      coeff.add_term(ExponentVec::zeros(static_cast<int>(np)), parse_rat(c));
    }
    in.f.add_term(e, coeff);
  }
  return in;
}

PolyInput load_poly_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::invalid_argument("cannot open " + path);
  json j;
  is >> j;
  return parse_poly(j);
}

json poly_to_json(const PolyInput& in) {
  json terms = json::array();
  for (const auto& [e, c] : in.f.terms()) {
    json coeff;
    if (in.param_vars.empty()) {
      coeff = c.coeff(ExponentVec::zeros(0)).str();
    } else {
      json inner_terms = json::array();
      for (const auto& [pe, q] : c.terms()) {
        json eo = json::array();
        for (int i = 0; i < pe.arity(); ++i) eo.push_back(pe[i]);
        inner_terms.push_back(json{{"exps", eo}, {"coeff", q.str()}});
      }
      coeff = json{{"core_vars", json::array()}, {"terms", inner_terms}};
    }
    json eo = json::array();
    for (int i = 0; i < e.arity(); ++i) eo.push_back(e[i]);
    terms.push_back(json{{"exps", eo}, {"coeff", coeff}});
  }
  return json{{"core_vars", in.core_vars},
              {"param_vars", in.param_vars},
              {"terms", terms}};
}

std::pair<AConfig, MuSpec> parse_aconfig(const json& j) {
  AConfig cfg;
  if (!j.contains("exponents"))
    throw std::invalid_argument("A-config JSON needs an exponents array");
  for (const auto& row : j.at("exponents")) {
    std::vector<int32_t> e;
    for (const auto& v : row) e.push_back(v.get<int32_t>());
    cfg.exponents.push_back(ExponentVec(e));
  }
  MuSpec mu = MuSpec::all();
  if (j.contains("mu")) {
    const json& m = j.at("mu");
    if (m.is_string()) {
      mu = parse_mu(m.get<std::string>());
    } else {
      std::vector<std::vector<int>> faces;
      for (const auto& f : m) faces.push_back(f.get<std::vector<int>>());
      mu = MuSpec::remove(std::move(faces));
    }
  }
  return {cfg, mu};
}

std::pair<AConfig, MuSpec> load_aconfig_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::invalid_argument("cannot open " + path);
  json j;
  is >> j;
  return parse_aconfig(j);
}

MuSpec parse_mu(const std::string& text) {
  if (text == "all") return MuSpec::all();
  if (text == "interior") return MuSpec::interior();
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_array())
    throw std::invalid_argument(
        "mu must be \"all\", \"interior\" or a JSON list of faces");
  std::vector<std::vector<int>> faces;
  for (const auto& f : j) faces.push_back(f.get<std::vector<int>>());
  return MuSpec::remove(std::move(faces));
}

json to_json(const CongruenceReport& r) {
  json j{{"claim", r.claim},
         {"params", r.params},
         {"holds", r.holds},
         {"millis", r.millis}};
  if (r.failure) {
    j["failure"] = json{{"where", r.failure->where},
                        {"lhs", r.failure->expected},
                        {"rhs", r.failure->actual}};
  }
  return j;
}

json to_json(const UnitRootResult& r) {
  json j{{"p", r.p}, {"s", r.s}, {"point", r.point}};
  if (r.a_p) j["a_p"] = r.a_p->str();
  if (r.lambda_trunc) j["lambda_trunc"] = r.lambda_trunc->value().str();
  if (r.lambda_hensel) j["lambda_hensel"] = r.lambda_hensel->value().str();
  if (r.lambda_trunc && r.lambda_hensel) j["agree"] = r.agree;
  return j;
}

json to_json(const TruncSeries& s) {
  json coeffs = json::array();
  for (int k = 0; k < s.order(); ++k) coeffs.push_back(s.coeff(k).str());
  return json{{"p", s.prime()},
              {"s", s.precision()},
              {"T", s.order()},
              {"coeffs", coeffs}};
}

json to_json(const ConeSeries& s) {
  json terms = json::array();
  for (const auto& [l, c] : s.terms()) {
    json ell = json::array();
    for (int i = 0; i < l.arity(); ++i) ell.push_back(l[i]);
    terms.push_back(json{{"ell", ell}, {"coeff", c.str()}});
  }
  json exps = json::array();
  for (const auto& a : s.context()->config().exponents) {
    json row = json::array();
    for (int i = 0; i < a.arity(); ++i) row.push_back(a[i]);
    exps.push_back(row);
  }
  return json{{"p", s.prime()},
              {"s", s.precision()},
              {"grading_cap", s.grading_cap()},
              {"exponents", exps},
              {"terms", terms}};
}

}  // namespace dwork::io
