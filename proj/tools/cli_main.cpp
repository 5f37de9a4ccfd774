// Command-line front end. Exit codes: 0 = holds/computed, 1 = congruence
// fails, 2 = invalid input.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <memory>

#include "dworkcong/ahyp.hpp"
#include "dworkcong/builtins.hpp"
#include "dworkcong/json_io.hpp"

namespace {

using namespace dwork;

struct Common {
  std::string builtin;
  std::string input;
  std::string output;
  std::string format = "text";
  std::string mu = "interior";
};

std::ostream& out_stream(const Common& c, std::ofstream& file) {
  if (c.output.empty()) return std::cout;
  file.open(c.output);
  if (!file) throw std::invalid_argument("cannot open output " + c.output);
  return file;
}

ParamFamily family_from(const Common& c) {
  if (!c.input.empty()) {
    io::PolyInput in = io::load_poly_file(c.input);
    if (in.param_vars.size() > 1)
      throw std::invalid_argument("at most one parameter variable here");
    ParamFamily fam;
    if (in.param_vars.empty()) {
      // promote to a one-parameter family with an unused parameter
      LaurentPoly<Rat> pzero(1, Rat(0));
      hw::ParamPoly f(in.f.arity(), pzero);
      for (const auto& [e, q] : in.f.terms()) {
        LaurentPoly<Rat> cc(1, Rat(0));
        cc.add_term(ExponentVec{0}, q.coeff(ExponentVec::zeros(0)));
        f.add_term(e, cc);
      }
      fam.f = f;
      fam.param_var = "t";
    } else {
      fam.f = in.f;
      fam.param_var = in.param_vars[0];
    }
    fam.core_vars = in.core_vars;
    return fam;
  }
  if (c.builtin.empty())
    throw std::invalid_argument("need --builtin or --input");
  return builtin_family(parse_builtin(c.builtin));
}

LaurentPoly<Rat> ct_generator_from(const Common& c) {
  if (!c.input.empty()) return io::load_poly_file(c.input).flat();
  if (c.builtin.empty())
    throw std::invalid_argument("need --builtin or --input");
  return builtin_ct_generator(parse_builtin(c.builtin));
}

std::pair<std::shared_ptr<const AContext>, MuSpec> aconfig_from(
    const Common& c) {
  AConfig cfg;
  MuSpec mu = io::parse_mu(c.mu);
  if (!c.input.empty()) {
    auto [cfg2, mu2] = io::load_aconfig_file(c.input);
    cfg = cfg2;
  } else if (c.builtin == "section6" || c.builtin.empty()) {
    cfg = section6_config();
  } else {
    throw std::invalid_argument("unknown A-config builtin: " + c.builtin);
  }
  return {std::make_shared<AContext>(cfg), mu};
}

int emit_report(const CongruenceReport& rep, const Common& c) {
  std::ofstream f;
  std::ostream& os = out_stream(c, f);
  if (c.format == "json")
    os << io::to_json(rep).dump(2) << "\n";
  else
    os << rep.summary() << "\n";
  return rep.holds ? 0 : 1;
}

std::optional<PerturbSpec> perturb_opt(int idx) {
  if (idx < 0) return std::nullopt;
  return PerturbSpec{idx};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact verification of Dwork-type congruences for Hasse-Witt matrices, "
      "constant-term series and A-hypergeometric truncations"};
  app.require_subcommand(1);

  Common c;
  int64_t p = 0;
  int s = 1, smax = 1, m = 0, T = 0, K = 10, kpow = 1, pivot = 1;
  int64_t M = 0;
  int perturb = -1;
  std::string z0 = "", t0 = "", u_str = "", phi = "ones";

  auto add_common = [&](CLI::App* cmd, bool with_mu = true) {
    cmd->add_option("--builtin", c.builtin,
                    "example-1d | dwork-quartic | legendre | section6");
    cmd->add_option("--input", c.input, "input JSON file");
    cmd->add_option("--output", c.output, "write the report here");
    cmd->add_option("--format", c.format, "text | json");
    if (with_mu)
      cmd->add_option("--mu", c.mu,
                      "all | interior | JSON list of faces (vertex indices)");
  };

  // ---- hw ----
  auto* hw_cmd = app.add_subcommand(
      "hw", "print the matrices beta_m and gamma_m for f and mu");
  add_common(hw_cmd);
  hw_cmd->add_option("--m", m, "matrix index m")->required();
  hw_cmd->add_option("--p", p, "reduce mod p");
  hw_cmd->add_option("--s", s, "precision exponent (with --p)");
  hw_cmd->add_option("--phi", phi, "gamma weights: ones | fcoeff");

  // ---- ct-seq ----
  auto* ct_cmd = app.add_subcommand(
      "ct-seq", "constant-term sequence b_k of g^k for k = 0..K");
  add_common(ct_cmd, false);
  ct_cmd->add_option("--K", K, "last index")->required();
  ct_cmd->add_option("--p", p, "reduce mod p");
  ct_cmd->add_option("--s", s, "precision exponent (with --p)");

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "congruence verifiers");
  verify->require_subcommand(1);
  auto* v_mev = verify->add_subcommand(
      "mev", "q(t)/q(t^p) vs gamma_{p^s}/gamma_{p^{s-1}}(t^p) mod p^s");
  add_common(v_mev, false);
  v_mev->add_option("--p", p)->required();
  v_mev->add_option("--s", s)->required();
  v_mev->add_option("--T", T, "series window (default 3 p^s)");
  v_mev->add_option("--perturb", perturb, "negative control: bump coeff k");

  auto* v_anym = verify->add_subcommand(
      "any-m", "q(t)/q(t^p) vs gamma_m/gamma_{m/p}(t^p) mod p^{ord_p m}");
  add_common(v_anym, false);
  v_anym->add_option("--p", p)->required();
  v_anym->add_option("--m", m)->required();
  v_anym->add_option("--T", T, "series window (default 3 m)");
  v_anym->add_option("--perturb", perturb);

  auto* v_deriv = verify->add_subcommand(
      "deriv", "q'/q vs gamma_m'/gamma_m mod p^{ord_p m}");
  add_common(v_deriv, false);
  v_deriv->add_option("--p", p)->required();
  v_deriv->add_option("--m", m)->required();
  v_deriv->add_option("--T", T, "series window (default 3 m)");
  v_deriv->add_option("--perturb", perturb);

  auto* v_lim = verify->add_subcommand(
      "limits",
      "Cauchy property of the Lambda/N approximants, beta and gamma variants");
  add_common(v_lim);
  v_lim->add_option("--p", p)->required();
  v_lim->add_option("--smax", smax, "check levels s = 1..smax");
  v_lim->add_option("--T", T, "series window (default 2 p^{smax+1})");
  v_lim->add_option("--phi", phi, "gamma weights: ones | fcoeff");
  v_lim->add_option("--perturb", perturb);

  auto* v_main5 = verify->add_subcommand(
      "main5",
      "A-hypergeometric truncation stability (sigma- and delta-quotients)");
  add_common(v_main5);
  v_main5->add_option("--p", p)->required();
  v_main5->add_option("--smax", smax);
  v_main5->add_option("--M", M, "weight cap; congruences reported to M/p")
      ->required();
  v_main5->add_option("--perturb", perturb);

  // ---- unit-root ----
  auto* ur = app.add_subcommand(
      "unit-root",
      "unit root via truncation quotients, with the Hensel/point-count "
      "oracle on the Legendre family");
  add_common(ur, false);
  ur->add_option("--p", p)->required();
  ur->add_option("--s", s)->required();
  ur->add_option("--z0", z0, "Legendre parameter (decimal)");
  ur->add_option("--t0", t0, "fixed lift for a ct-series builtin/input");

  // ---- ahyp ----
  auto* ah = app.add_subcommand("ahyp", "A-hypergeometric tools");
  ah->require_subcommand(1);
  auto* ah_psi = ah->add_subcommand("psi", "psi~_m entries");
  add_common(ah_psi);
  ah_psi->add_option("--m", m)->required();
  ah_psi->add_option("--M", M, "weight cap (default m-1)");
  auto* ah_ker = ah->add_subcommand("kernel", "kernel lattice of the A-matrix");
  add_common(ah_ker, false);
  auto* ah_per = ah->add_subcommand("period", "period series of x^u f^{-k}");
  add_common(ah_per, false);
  ah_per->add_option("--u", u_str, "exponent vector, comma separated")
      ->required();
  ah_per->add_option("--k", kpow, "power of f")->required();
  ah_per->add_option("--i", pivot, "expansion index (1-based)")->required();
  ah_per->add_option("--M", M, "degree cap")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    std::ofstream file;

    if (*hw_cmd) {
      ParamFamily fam = family_from(c);
      MuSpec mu = io::parse_mu(c.mu);
      hw::PhiMode pm =
          phi == "fcoeff" ? hw::PhiMode::kPolyCoeff : hw::PhiMode::kOnes;
      std::ostream& os = out_stream(c, file);
      if (p > 0) {
        auto fr = hw::embed_param_poly(fam.f, p, s, m + 1);
        OpenSubset sub = make_open_subset(newton_polytope(fr), mu);
        auto beta = hw::beta_matrix(fr, sub, m);
        auto gamma = hw::gamma_matrix(fr, sub, m, pm);
        auto str = [&](const TruncSeries& e) { return e.str(fam.param_var); };
        if (c.format == "json") {
          os << nlohmann::json{{"beta", io::matrix_to_json(beta, str)},
                               {"gamma", io::matrix_to_json(gamma, str)}}
                    .dump(2)
             << "\n";
        } else {
          os << "beta_" << m << " (mod " << p << "^" << s << "), rows/cols "
             << "indexed by mu_Z:\n";
          for (int r = 0; r < beta.size(); ++r)
            for (int cc = 0; cc < beta.size(); ++cc)
              os << "  [" << beta.labels()[r] << "][" << beta.labels()[cc]
                 << "] = " << str(beta.at(r, cc)) << "\n";
          os << "gamma_" << m << " (mod " << p << "^" << s << "):\n";
          for (int r = 0; r < gamma.size(); ++r)
            for (int cc = 0; cc < gamma.size(); ++cc)
              os << "  [" << gamma.labels()[r] << "][" << gamma.labels()[cc]
                 << "] = " << str(gamma.at(r, cc)) << "\n";
        }
      } else {
        OpenSubset sub = make_open_subset(newton_polytope(fam.f), mu);
        auto beta = hw::beta_matrix(fam.f, sub, m);
        auto gamma = hw::gamma_matrix(
            fam.f, sub, m,
            hw::phi_defaults(fam.f, sub, pm));
        auto str = [&](const LaurentPoly<Rat>& e) {
          return e.str({fam.param_var});
        };
        if (c.format == "json") {
          os << nlohmann::json{{"beta", io::matrix_to_json(beta, str)},
                               {"gamma", io::matrix_to_json(gamma, str)}}
                    .dump(2)
             << "\n";
        } else {
          os << "beta_" << m << ":\n";
          for (int r = 0; r < beta.size(); ++r)
            for (int cc = 0; cc < beta.size(); ++cc)
              os << "  [" << beta.labels()[r] << "][" << beta.labels()[cc]
                 << "] = " << str(beta.at(r, cc)) << "\n";
          os << "gamma_" << m << ":\n";
          for (int r = 0; r < gamma.size(); ++r)
            for (int cc = 0; cc < gamma.size(); ++cc)
              os << "  [" << gamma.labels()[r] << "][" << gamma.labels()[cc]
                 << "] = " << str(gamma.at(r, cc)) << "\n";
        }
      }
      return 0;
    }

    if (*ct_cmd) {
      LaurentPoly<Rat> g = ct_generator_from(c);
      std::ostream& os = out_stream(c, file);
      if (p > 0) {
        auto b = hw::ct_sequence(hw::embed_poly(g, p, s), K);
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& v : b) arr.push_back(v.value().str());
        if (c.format == "json")
          os << nlohmann::json{{"p", p}, {"s", s}, {"b", arr}}.dump(2) << "\n";
        else {
          os << "b_k mod " << p << "^" << s << ":";
          for (const auto& v : b) os << " " << v.value().str();
          os << "\n";
        }
      } else {
        auto b = hw::ct_sequence(g, K);
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& v : b) arr.push_back(v.str());
        if (c.format == "json")
          os << nlohmann::json{{"b", arr}}.dump(2) << "\n";
        else {
          os << "b_k:";
          for (const auto& v : b) os << " " << v.str();
          os << "\n";
        }
      }
      return 0;
    }

    if (*v_mev) {
      LaurentPoly<Rat> g = ct_generator_from(c);
      if (T == 0) T = 3 * static_cast<int>(pow_int(Int(p), s));
      return emit_report(hw::verify_mev(g, p, s, T, perturb_opt(perturb)), c);
    }
    if (*v_anym) {
      LaurentPoly<Rat> g = ct_generator_from(c);
      if (T == 0) T = 3 * m;
      return emit_report(hw::verify_any_m(g, p, m, T, perturb_opt(perturb)),
                         c);
    }
    if (*v_deriv) {
      LaurentPoly<Rat> g = ct_generator_from(c);
      if (T == 0) T = 3 * m;
      return emit_report(
          hw::verify_derivative(g, p, m, T, perturb_opt(perturb)), c);
    }
    if (*v_lim) {
      ParamFamily fam = family_from(c);
      MuSpec mu = io::parse_mu(c.mu);
      if (T == 0) T = 2 * static_cast<int>(pow_int(Int(p), smax + 1));
      hw::PhiMode pm =
          phi == "fcoeff" ? hw::PhiMode::kPolyCoeff : hw::PhiMode::kOnes;
      return emit_report(
          hw::verify_limits(fam.f, mu, p, smax, T, pm, perturb_opt(perturb)),
          c);
    }
    if (*v_main5) {
      auto [ctx, mu_default] = aconfig_from(c);
      MuSpec mu = io::parse_mu(c.mu);
      return emit_report(ahyp::verify_truncation_stability(
                             ctx, mu, p, smax, M, perturb_opt(perturb)),
                         c);
    }

    if (*ur) {
      std::ofstream f2;
      std::ostream& os = out_stream(c, f2);
      UnitRootResult res;
      if (!z0.empty()) {
        res = hw::unit_root_legendre(Int(z0), p, s);
      } else if (!t0.empty()) {
        LaurentPoly<Rat> g = ct_generator_from(c);
        res = hw::unit_root_ct_series(g, Int(t0), p, s);
      } else {
        throw std::invalid_argument("unit-root: need --z0 or --t0");
      }
      if (c.format == "json")
        os << io::to_json(res).dump(2) << "\n";
      else
        os << res.summary() << "\n";
      return 0;
    }

    if (*ah_psi) {
      auto [ctx, mu_unused] = aconfig_from(c);
      MuSpec mu = io::parse_mu(c.mu);
      auto indices = ahyp::mu_column_indices(*ctx, mu);
      if (M == 0) M = m - 1;
      auto exact = ahyp::psi_tilde_exact(*ctx, indices, m, M);
      std::ostream& os = out_stream(c, file);
      if (c.format == "json") {
        nlohmann::json cells = nlohmann::json::array();
        for (size_t r = 0; r < exact.size(); ++r) {
          for (size_t cc = 0; cc < exact.size(); ++cc) {
            nlohmann::json terms = nlohmann::json::array();
            for (const auto& [l, v] : exact[r][cc]) {
              nlohmann::json ell = nlohmann::json::array();
              for (int i = 0; i < l.arity(); ++i) ell.push_back(l[i]);
              terms.push_back({{"ell", ell}, {"coeff", v.str()}});
            }
            cells.push_back({{"row", indices[r] + 1},
                             {"col", indices[cc] + 1},
                             {"terms", terms}});
          }
        }
        os << nlohmann::json{{"m", m}, {"M", M}, {"entries", cells}}.dump(2)
           << "\n";
      } else {
        os << "psi~_" << m << " to weight " << M << ":\n";
        for (size_t r = 0; r < exact.size(); ++r) {
          for (size_t cc = 0; cc < exact.size(); ++cc) {
            os << "  (" << indices[r] + 1 << "," << indices[cc] + 1 << "):";
            for (const auto& [l, v] : exact[r][cc])
              os << "  " << v.str() << "*v^" << l.str();
            os << "\n";
          }
        }
      }
      return 0;
    }
    if (*ah_ker) {
      auto [ctx, mu_unused] = aconfig_from(c);
      std::ostream& os = out_stream(c, file);
      auto check = ahyp::cone_check(*ctx);
      if (c.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& b : ctx->kernel_basis()) {
          nlohmann::json row = nlohmann::json::array();
          for (const auto& v : b) row.push_back(v.str());
          rows.push_back(row);
        }
        os << nlohmann::json{{"rank", ctx->kernel_rank()},
                             {"basis", rows},
                             {"pointed", check.pointed}}
                  .dump(2)
           << "\n";
      } else {
        os << "kernel rank " << ctx->kernel_rank() << "\n";
        for (const auto& b : ctx->kernel_basis()) {
          os << "  (";
          for (size_t i = 0; i < b.size(); ++i)
            os << (i ? "," : "") << b[i].str();
          os << ")\n";
        }
        os << check.summary() << "\n";
      }
      return 0;
    }
    if (*ah_per) {
      auto [ctx, mu_unused] = aconfig_from(c);
      std::vector<int32_t> ue;
      {
        std::string cur;
        for (char ch : u_str + ",") {
          if (ch == ',') {
            if (!cur.empty()) ue.push_back(std::stoi(cur));
            cur.clear();
          } else {
            cur += ch;
          }
        }
      }
      auto ps = ahyp::period_series(*ctx, ExponentVec(ue), kpow, pivot - 1, M);
      std::ostream& os = out_stream(c, file);
      if (c.format == "json") {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [l, v] : ps.terms) {
          nlohmann::json ell = nlohmann::json::array();
          for (int i = 0; i < l.arity(); ++i) ell.push_back(l[i]);
          terms.push_back({{"ell", ell}, {"coeff", v.str()}});
        }
        os << nlohmann::json{{"u", u_str},
                             {"k", kpow},
                             {"i", pivot},
                             {"M", M},
                             {"empty", ps.terms.empty()},
                             {"terms", terms}}
                  .dump(2)
           << "\n";
      } else {
        os << "period of x^u f^-" << kpow << " wrt a_" << pivot << " (cap "
           << M << "):";
        if (ps.terms.empty()) os << " no lattice solutions at this cap";
        for (const auto& [l, v] : ps.terms)
          os << "  " << v.str() << "*v^" << l.str();
        os << "\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
