// Python bindings for the main operations. Big integers cross the boundary
// as decimal strings or native python ints; series and matrices come back
// as plain dicts/lists so the python side needs no wrapper types.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dworkcong/ahyp.hpp"
#include "dworkcong/builtins.hpp"
#include "dworkcong/hwdwork.hpp"
#include "dworkcong/json_io.hpp"

namespace py = pybind11;
using namespace dwork;

namespace {

Int to_int(const py::object& v) { return Int(py::str(v).cast<std::string>()); }

py::object from_int(const Int& v) {
  return py::eval("int")(py::str(v.str()));
}

LaurentPoly<Rat> generator_arg(const std::string& name_or_json) {
  if (!name_or_json.empty() && name_or_json[0] == '{')
    return io::parse_poly(nlohmann::json::parse(name_or_json)).flat();
  return builtin_ct_generator(parse_builtin(name_or_json));
}

std::shared_ptr<const AContext> context_arg(
    const std::vector<std::vector<int32_t>>& exponents) {
  AConfig cfg;
  for (const auto& e : exponents) cfg.exponents.push_back(ExponentVec(e));
  return std::make_shared<AContext>(cfg);
}

MuSpec mu_arg(const std::string& mu) { return io::parse_mu(mu); }

py::dict report_dict(const CongruenceReport& r) {
  py::dict d;
  d["claim"] = r.claim;
  d["holds"] = r.holds;
  d["millis"] = r.millis;
  py::dict params;
  for (const auto& [k, v] : r.params) params[py::str(k)] = v;
  d["params"] = params;
  if (r.failure) {
    py::dict f;
    f["where"] = r.failure->where;
    f["lhs"] = r.failure->expected;
    f["rhs"] = r.failure->actual;
    d["failure"] = f;
  }
  return d;
}

py::dict unit_root_dict(const UnitRootResult& r) {
  py::dict d;
  d["p"] = r.p;
  d["s"] = r.s;
  d["point"] = r.point;
  if (r.a_p) d["a_p"] = from_int(*r.a_p);
  if (r.lambda_trunc) d["lambda_trunc"] = from_int(r.lambda_trunc->value());
  if (r.lambda_hensel) d["lambda_hensel"] = from_int(r.lambda_hensel->value());
  if (r.lambda_trunc && r.lambda_hensel) d["agree"] = r.agree;
  return d;
}

std::optional<PerturbSpec> perturb_arg(int idx) {
  if (idx < 0) return std::nullopt;
  return PerturbSpec{idx};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact verification of Dwork-type congruences: Hasse-Witt matrices, "
      "constant-term series, unit roots and A-hypergeometric truncations";

  m.def(
      "padic_ord",
      [](const py::object& n, const py::object& p) {
        return padic_ord(to_int(n), to_int(p));
      },
      py::arg("n"), py::arg("p"));

  m.def(
      "embed_rational",
      [](const std::string& q, int64_t p, int s) {
        return from_int(embed_rational(Rat(q), p, s).value());
      },
      py::arg("q"), py::arg("p"), py::arg("s"),
      "q mod p^s for a rational given as 'num/den'");

  m.def(
      "hensel_unit_root",
      [](const py::object& a_p, int64_t p, int s) {
        return from_int(hensel_unit_root(to_int(a_p), p, s).value());
      },
      py::arg("a_p"), py::arg("p"), py::arg("s"));

  m.def(
      "gamma_star",
      [](const py::object& n) { return ahyp::gamma_star(to_int(n)).str(); },
      py::arg("n"));

  m.def(
      "ct_sequence",
      [](const std::string& g, int K, int64_t p, int s) {
        py::list out;
        if (p > 0) {
          auto b = hw::ct_sequence(hw::embed_poly(generator_arg(g), p, s), K);
          for (const auto& v : b) out.append(from_int(v.value()));
        } else {
          auto b = hw::ct_sequence(generator_arg(g), K);
          for (const auto& v : b) out.append(v.str());
        }
        return out;
      },
      py::arg("g"), py::arg("K"), py::arg("p") = 0, py::arg("s") = 1,
      "b_k = CT(g^k); g is a builtin name or polynomial JSON");

  m.def(
      "q_series",
      [](const std::string& g, int64_t p, int s, int T) {
        auto q = hw::q_series(generator_arg(g), p, s, T);
        py::list out;
        for (int k = 0; k < q.order(); ++k) out.append(from_int(q.coeff(k)));
        return out;
      },
      py::arg("g"), py::arg("p"), py::arg("s"), py::arg("T"));

  m.def(
      "verify_mev",
      [](const std::string& g, int64_t p, int s, int T, int perturb) {
        return report_dict(
            hw::verify_mev(generator_arg(g), p, s, T, perturb_arg(perturb)));
      },
      py::arg("g"), py::arg("p"), py::arg("s"), py::arg("T"),
      py::arg("perturb") = -1);

  m.def(
      "verify_any_m",
      [](const std::string& g, int64_t p, int m, int T, int perturb) {
        return report_dict(
            hw::verify_any_m(generator_arg(g), p, m, T, perturb_arg(perturb)));
      },
      py::arg("g"), py::arg("p"), py::arg("m"), py::arg("T"),
      py::arg("perturb") = -1);

  m.def(
      "verify_derivative",
      [](const std::string& g, int64_t p, int m, int T, int perturb) {
        return report_dict(hw::verify_derivative(generator_arg(g), p, m, T,
                                                 perturb_arg(perturb)));
      },
      py::arg("g"), py::arg("p"), py::arg("m"), py::arg("T"),
      py::arg("perturb") = -1);

  m.def(
      "verify_limits",
      [](const std::string& builtin, const std::string& mu, int64_t p,
         int smax, int T) {
        auto fam = builtin_family(parse_builtin(builtin));
        return report_dict(hw::verify_limits(fam.f, mu_arg(mu), p, smax, T));
      },
      py::arg("builtin"), py::arg("mu"), py::arg("p"), py::arg("smax"),
      py::arg("T"));

  m.def(
      "legendre_truncation",
      [](int64_t p, int s, int mm) {
        auto f = hw::legendre_truncation(p, s, mm);
        py::list out;
        for (int k = 0; k < f.order(); ++k) out.append(from_int(f.coeff(k)));
        return out;
      },
      py::arg("p"), py::arg("s"), py::arg("m"));

  m.def(
      "count_points_legendre",
      [](const py::object& z0, int64_t p) {
        return hw::count_points_legendre(to_int(z0), p);
      },
      py::arg("z0"), py::arg("p"));

  m.def(
      "unit_root_legendre",
      [](const py::object& z0, int64_t p, int s) {
        return unit_root_dict(hw::unit_root_legendre(to_int(z0), p, s));
      },
      py::arg("z0"), py::arg("p"), py::arg("s"));

  m.def(
      "unit_root_ct_series",
      [](const std::string& g, const py::object& t0, int64_t p, int s) {
        return unit_root_dict(
            hw::unit_root_ct_series(generator_arg(g), to_int(t0), p, s));
      },
      py::arg("g"), py::arg("t0"), py::arg("p"), py::arg("s"));

  m.def(
      "kernel_basis",
      [](const std::vector<std::vector<int32_t>>& exponents) {
        auto ctx = context_arg(exponents);
        py::list rows;
        for (const auto& b : ctx->kernel_basis()) {
          py::list row;
          for (const auto& v : b) row.append(from_int(v));
          rows.append(row);
        }
        return rows;
      },
      py::arg("exponents"));

  m.def(
      "psi_tilde",
      [](const std::vector<std::vector<int32_t>>& exponents,
         const std::string& mu, int mm, int64_t M) {
        auto ctx = context_arg(exponents);
        auto indices = ahyp::mu_column_indices(*ctx, mu_arg(mu));
        auto psi = ahyp::psi_tilde_exact(*ctx, indices, mm, M);
        py::dict out;
        for (size_t r = 0; r < psi.size(); ++r) {
          for (size_t c = 0; c < psi.size(); ++c) {
            py::dict cell;
            for (const auto& [l, v] : psi[r][c]) {
              py::tuple key(l.arity());
              for (int i = 0; i < l.arity(); ++i) key[i] = l[i];
              cell[key] = from_int(v);
            }
            out[py::make_tuple(indices[r] + 1, indices[c] + 1)] = cell;
          }
        }
        return out;
      },
      py::arg("exponents"), py::arg("mu"), py::arg("m"), py::arg("M"),
      "exact integer entries of psi~_m, keyed by (row, col) then by the "
      "kernel vector");

  m.def(
      "verify_main5",
      [](const std::vector<std::vector<int32_t>>& exponents,
         const std::string& mu, int64_t p, int smax, int64_t M, int perturb) {
        auto ctx = context_arg(exponents);
        return report_dict(ahyp::verify_truncation_stability(
            ctx, mu_arg(mu), p, smax, M, perturb_arg(perturb)));
      },
      py::arg("exponents"), py::arg("mu"), py::arg("p"), py::arg("smax"),
      py::arg("M"), py::arg("perturb") = -1);

  m.def(
      "cone_check",
      [](const std::vector<std::vector<int32_t>>& exponents,
         int64_t weight_bound) {
        auto ctx = context_arg(exponents);
        auto r = ahyp::cone_check(*ctx, weight_bound);
        py::dict d;
        d["pointed"] = r.pointed;
        d["lattice_elements_positive"] = r.lattice_elements_positive;
        d["checked_weight"] = r.checked_weight;
        py::list rays;
        for (const auto& g : r.rays) {
          py::list row;
          for (int i = 0; i < g.arity(); ++i) row.append(g[i]);
          rays.append(row);
        }
        d["rays"] = rays;
        return d;
      },
      py::arg("exponents"), py::arg("weight_bound") = 6);

  m.def(
      "period_series",
      [](const std::vector<std::vector<int32_t>>& exponents,
         const std::vector<int32_t>& u, int k, int i, int64_t M) {
        auto ctx = context_arg(exponents);
        auto ps = ahyp::period_series(*ctx, ExponentVec(u), k, i - 1, M);
        py::dict cell;
        for (const auto& [l, v] : ps.terms) {
          py::tuple key(l.arity());
          for (int j = 0; j < l.arity(); ++j) key[j] = l[j];
          cell[key] = from_int(v);
        }
        return cell;
      },
      py::arg("exponents"), py::arg("u"), py::arg("k"), py::arg("i"),
      py::arg("M"), "period of x^u f^{-k} expanded at a_i (1-based)");

  m.def("section6_exponents", []() {
    py::list rows;
    for (const auto& a : section6_config().exponents) {
      py::list row;
      for (int i = 0; i < a.arity(); ++i) row.append(a[i]);
      rows.append(row);
    }
    return rows;
  });
}
