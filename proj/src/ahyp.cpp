#include "dworkcong/ahyp.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

namespace dwork::ahyp {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// nonnegative solutions of sum_{r != i} l_r = d with sum_{r != i} l_r a_r
// = rhs, reported as full vectors with l_i = -d
void compositions_with_exponent(const AContext& ctx, int i, int d,
                                const ExponentVec& rhs,
                                std::vector<ExponentVec>& out) {
  const int N = ctx.N();
  const int n = ctx.n();
  std::vector<int> others;
  for (int r = 0; r < N; ++r)
    if (r != i) others.push_back(r);
  std::vector<int32_t> l(static_cast<size_t>(N), 0);
  std::vector<Int> partial(static_cast<size_t>(n), 0);
  std::function<void(size_t, int)> rec = [&](size_t pos, int left) {
    if (pos + 1 == others.size()) {
      const int r = others[pos];
      l[static_cast<size_t>(r)] = left;
      std::vector<Int> tot = partial;
      for (int c = 0; c < n; ++c)
        tot[static_cast<size_t>(c)] +=
            Int(left) * ctx.config().exponents[static_cast<size_t>(r)][c];
      for (int c = 0; c < n; ++c)
        if (tot[static_cast<size_t>(c)] != rhs[c]) {
          l[static_cast<size_t>(r)] = 0;
          return;
        }
      std::vector<int32_t> full = l;
      full[static_cast<size_t>(i)] = -d;
      out.push_back(ExponentVec(full));
      l[static_cast<size_t>(r)] = 0;
      return;
    }
    const int r = others[pos];
    for (int v = 0; v <= left; ++v) {
      l[static_cast<size_t>(r)] = v;
      for (int c = 0; c < n; ++c)
        partial[static_cast<size_t>(c)] +=
            Int(v) * ctx.config().exponents[static_cast<size_t>(r)][c];
      rec(pos + 1, left - v);
      for (int c = 0; c < n; ++c)
        partial[static_cast<size_t>(c)] -=
            Int(v) * ctx.config().exponents[static_cast<size_t>(r)][c];
      l[static_cast<size_t>(r)] = 0;
    }
  };
  if (others.empty()) return;
  rec(0, d);
}

}  // namespace

Rat gamma_star(const Int& n) {
  if (n >= 1) {
    Int r = 1;
    for (Int i = 1; i < n; ++i) r *= i;
    return Rat(r);
  }
  Int f = 1;
  for (Int i = 1; i <= -n; ++i) f *= i;
  Rat v(1, f);
  if (n % 2 != 0) v = -v;
  return v;
}

std::vector<int> mu_column_indices(const AContext& ctx, const MuSpec& mu) {
  std::vector<ExponentVec> pts;
  for (const auto& a : ctx.config().exponents) pts.push_back(a);
  LatticePolytope delta = LatticePolytope::from_points(pts);
  OpenSubset sub = make_open_subset(delta, mu);
  std::vector<int> indices;
  for (const auto& u : sub.points()) {
    int found = -1;
    for (int j = 0; j < ctx.N(); ++j) {
      if (ctx.config().exponents[static_cast<size_t>(j)] == u) {
        if (found >= 0)
          throw std::invalid_argument(
              "mu_column_indices: repeated exponent vector inside mu");
        found = j;
      }
    }
    if (found < 0)
      throw std::invalid_argument(
          "mu_column_indices: lattice point " + u.str() +
          " of mu is not among the a_j (hypothesis of the main congruence)");
    indices.push_back(found);
  }
  if (indices.empty())
    throw std::invalid_argument("mu_column_indices: mu has no lattice points");
  return indices;
}

LatticeSolutionSet enumerate_Li(const AContext& ctx, int i, int m, int64_t M) {
  if (i < 0 || i >= ctx.N())
    throw std::invalid_argument("enumerate_Li: pivot out of range");
  if (m < 1) throw std::invalid_argument("enumerate_Li: m must be >= 1");
  LatticeSolutionSet out;
  out.pivot = i;
  out.bound_m = m;
  out.weight_cap = M;
  const int64_t dmax = std::min<int64_t>(m - 1, M);
  for (int64_t d = 1; d <= dmax; ++d) {
    ExponentVec rhs = ctx.config().exponents[static_cast<size_t>(i)];
    ExponentVec scaled = rhs.scaled(static_cast<int32_t>(d));
    std::vector<ExponentVec> batch;
    compositions_with_exponent(ctx, i, static_cast<int>(d), scaled, batch);
    std::sort(batch.begin(), batch.end());
    for (auto& l : batch) out.elements.push_back(l);
  }
  return out;
}

std::vector<std::vector<ExactEntry>> psi_tilde_exact(
    const AContext& ctx, const std::vector<int>& indices, int m,
    int64_t Mcap) {
  const size_t h = indices.size();
  std::vector<std::vector<ExactEntry>> mat(h, std::vector<ExactEntry>(h));
  for (size_t ci = 0; ci < h; ++ci) {
    const int i = indices[ci];
    for (size_t rj = 0; rj < h; ++rj) {
      if (indices[rj] == i) mat[rj][ci][ExponentVec::zeros(ctx.N())] = 1;
    }
    LatticeSolutionSet li = enumerate_Li(ctx, i, m, Mcap);
    for (const auto& l : li.elements) {
      // prod_k 1/Gamma*(l_k + 1) = (-1)^{d-1} (d-1)! / prod_{r != i} l_r!
      Rat base(1);
      for (int r = 0; r < ctx.N(); ++r)
        base /= gamma_star(Int(l[r]) + 1);
      for (size_t rj = 0; rj < h; ++rj) {
        const int j = indices[rj];
        if (l[j] == 0) continue;
        Rat c = Rat(l[j]) * base;
        if (denominator(c) != 1)
          throw std::logic_error(
              "psi_tilde_exact: non-integer coefficient at key " + l.str());
        Int ci2 = numerator(c);
        auto& cell = mat[rj][ci];
        auto it = cell.find(l);
        if (it == cell.end())
          cell.emplace(l, ci2);
        else {
          it->second += ci2;
          if (it->second == 0) cell.erase(it);
        }
      }
    }
  }
  return mat;
}

PeriodMatrix<ConeSeries> psi_tilde(const std::shared_ptr<const AContext>& ctx,
                                   const std::vector<int>& indices, int m,
                                   int64_t Mcap, int64_t p, int s,
                                   int64_t grading_cap) {
  auto exact = psi_tilde_exact(*ctx, indices, m, Mcap);
  ConeSeries zero(ctx, p, s, grading_cap);
  const int h = static_cast<int>(indices.size());
  PeriodMatrix<ConeSeries> mat(h, zero);
  std::vector<std::string> labels;
  for (int j : indices) labels.push_back(std::to_string(j + 1));
  mat.set_labels(labels);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < h; ++c) {
      ConeSeries e(ctx, p, s, grading_cap);
      for (const auto& [l, v] : exact[static_cast<size_t>(r)][static_cast<size_t>(c)])
        e.add_term(l, v);
      mat.at(r, c) = e;
    }
  }
  return mat;
}

PeriodMatrix<LaurentPoly<Int>> gamma_ct_oracle(const AContext& ctx, int m) {
  const int N = ctx.N();
  const int n = ctx.n();
  using VPoly = LaurentPoly<Int>;            // polynomials in v_1..v_N
  using XPoly = LaurentPoly<VPoly>;          // Laurent in x, coeffs in v
  const VPoly vzero(N, Int(0));
  PeriodMatrix<VPoly> out(N, vzero);
  std::vector<std::string> labels;
  for (int j = 0; j < N; ++j) labels.push_back(std::to_string(j + 1));
  out.set_labels(labels);

  for (int i = 0; i < N; ++i) {
    // F = f / x^{a_i} = sum_r v_r x^{a_r - a_i}
    XPoly F(n, vzero);
    for (int r = 0; r < N; ++r) {
      ExponentVec e = ctx.config().exponents[static_cast<size_t>(r)] -
                      ctx.config().exponents[static_cast<size_t>(i)];
      F.add_term(e, VPoly::monomial(ExponentVec::unit(N, r), Int(1)));
    }
    XPoly cur = XPoly::constant(n, ring_traits<VPoly>::one_like(vzero));
    for (int k = 1; k <= m; ++k) {
      if (k > 1) cur *= F;
      Int coef = binomial(static_cast<unsigned>(m), static_cast<unsigned>(k));
      if (k % 2 == 0) coef = -coef;
      // v_i^{m-k} prefactor
      VPoly pre = VPoly::monomial(
          ExponentVec::unit(N, i, static_cast<int32_t>(m - k)), coef);
      for (int j = 0; j < N; ++j) {
        ExponentVec target = ctx.config().exponents[static_cast<size_t>(i)] -
                             ctx.config().exponents[static_cast<size_t>(j)];
        const VPoly& c = cur.coeff(target);
        if (!c.is_zero()) out.at(j, i) += c * pre;
      }
    }
  }
  return out;
}

std::vector<std::vector<ExactEntry>> psi_tilde_ct_oracle(const AContext& ctx,
                                                         int m) {
  auto gamma = gamma_ct_oracle(ctx, m);
  const int N = ctx.N();
  std::vector<std::vector<ExactEntry>> out(
      static_cast<size_t>(N), std::vector<ExactEntry>(static_cast<size_t>(N)));
  for (int j = 0; j < N; ++j) {
    for (int i = 0; i < N; ++i) {
      ExponentVec shift = ExponentVec::unit(N, j) -
                          ExponentVec::unit(N, i, static_cast<int32_t>(m));
      for (const auto& [e, c] : gamma.at(j, i).terms())
        out[static_cast<size_t>(j)][static_cast<size_t>(i)].emplace(e + shift,
                                                                    c);
    }
  }
  return out;
}

CongruenceReport verify_truncation_stability(
    const std::shared_ptr<const AContext>& ctx, const MuSpec& mu, int64_t p,
    int s_max, int64_t M, const std::optional<PerturbSpec>& perturb) {
  auto t0 = Clock::now();
  CongruenceReport rep;
  rep.claim = "main5";
  rep.params["p"] = std::to_string(p);
  rep.params["smax"] = std::to_string(s_max);
  rep.params["M"] = std::to_string(M);
  rep.params["mu"] = mu.str();

  if (!is_prime(p)) throw std::invalid_argument("main5: p must be prime");
  if (s_max < 1) throw std::invalid_argument("main5: smax must be >= 1");
  const int64_t M_rep = M / p;
  if (M_rep < 1)
    throw std::invalid_argument(
        "main5: unresolved weight (M too small; need M >= p)");
  rep.params["weight_window"] = std::to_string(M_rep);

  std::vector<int> indices = mu_column_indices(*ctx, mu);
  const int h = static_cast<int>(indices.size());

  std::vector<ExponentVec> window = ctx->cone_points_up_to_weight(M_rep);
  int64_t W = 0;
  for (const auto& l : window) W = std::max(W, ctx->grading(l));

  rep.holds = true;
  for (int sc = 1; sc <= s_max && rep.holds; ++sc) {
    const Int ps = pow_int(Int(p), static_cast<unsigned>(sc));
    auto psi = [&](int m) {
      return psi_tilde(ctx, indices, m, m - 1, p, sc, W);
    };
    int m_hi = static_cast<int>(pow_int(Int(p), static_cast<unsigned>(sc + 1)));
    int m_md = static_cast<int>(pow_int(Int(p), static_cast<unsigned>(sc)));
    int m_lo = static_cast<int>(pow_int(Int(p), static_cast<unsigned>(sc - 1)));
    PeriodMatrix<ConeSeries> a_hi = psi(m_hi);
    PeriodMatrix<ConeSeries> a_md = psi(m_md);
    PeriodMatrix<ConeSeries> a_lo = psi(m_lo);
    if (perturb && sc == 1) {
      // negative control: bump one coefficient of psi~_{p}
      auto keys = a_md.at(0, 0).terms();
      int idx = perturb->index % std::max<int>(1, static_cast<int>(keys.size()));
      auto it = keys.begin();
      std::advance(it, idx);
      a_md.at(0, 0).add_term(it->first, 1);
    }

    auto sigma = [](const PeriodMatrix<ConeSeries>& x) {
      return x.map([](const ConeSeries& e) { return e.frobenius(); });
    };
    PeriodMatrix<ConeSeries> q_hi = a_hi * sigma(inverse(a_md));
    PeriodMatrix<ConeSeries> q_lo = a_md * sigma(inverse(a_lo));

    auto compare = [&](const PeriodMatrix<ConeSeries>& x,
                       const PeriodMatrix<ConeSeries>& y,
                       const std::string& what) {
      for (int r = 0; r < h && rep.holds; ++r) {
        for (int c = 0; c < h && rep.holds; ++c) {
          for (const auto& l : window) {
            Int dv = (x.at(r, c).coeff(l) - y.at(r, c).coeff(l)) % ps;
            if (dv != 0) {
              rep.holds = false;
              rep.failure = FailureLocation{
                  what + " s=" + std::to_string(sc) + " entry (" +
                      std::to_string(indices[static_cast<size_t>(r)] + 1) +
                      "," +
                      std::to_string(indices[static_cast<size_t>(c)] + 1) +
                      ") key " + l.str(),
                  x.at(r, c).coeff(l).str(), y.at(r, c).coeff(l).str()};
              break;
            }
          }
        }
      }
    };
    compare(q_hi, q_lo, "sigma-quotient");

    for (int iv = 0; iv < ctx->N() && rep.holds; ++iv) {
      auto dlog = [&](const PeriodMatrix<ConeSeries>& x) {
        return x.map(
            [&](const ConeSeries& e) { return e.log_derive(iv); });
      };
      PeriodMatrix<ConeSeries> d_hi = dlog(a_hi) * inverse(a_hi);
      PeriodMatrix<ConeSeries> d_lo = dlog(a_md) * inverse(a_md);
      compare(d_hi, d_lo, "delta-quotient v" + std::to_string(iv + 1));
    }
  }
  rep.millis = ms_since(t0);
  return rep;
}

PeriodSeries period_series(const AContext& ctx, const ExponentVec& u, int k,
                           int i, int64_t M) {
  if (k < 1) throw std::invalid_argument("period_series: k must be >= 1");
  if (i < 0 || i >= ctx.N())
    throw std::invalid_argument("period_series: pivot out of range");
  // u must lie in k * Delta
  std::vector<ExponentVec> scaled;
  for (const auto& a : ctx.config().exponents)
    scaled.push_back(a.scaled(static_cast<int32_t>(k)));
  LatticePolytope kdelta = LatticePolytope::from_points(scaled);
  if (!kdelta.contains(u))
    throw std::invalid_argument("period_series: u not in k*Delta");

  PeriodSeries out;
  out.u = u;
  out.k = k;
  out.pivot = i;
  out.degree_cap = M;
  const ExponentVec ai = ctx.config().exponents[static_cast<size_t>(i)];
  for (int64_t d = 0; d <= M; ++d) {
    // sum_{r != i} l_r a_r = (k + d) a_i - u
    ExponentVec rhs = ai.scaled(static_cast<int32_t>(k + d)) - u;
    std::vector<ExponentVec> batch;
    compositions_with_exponent(ctx, i, static_cast<int>(d), rhs, batch);
    for (auto& l : batch) {
      l[i] = static_cast<int32_t>(-k - d);
      Int mult = factorial(static_cast<unsigned>(d));
      for (int r = 0; r < ctx.N(); ++r)
        if (r != i) mult /= factorial(static_cast<unsigned>(l[r]));
      Int c = binomial(static_cast<unsigned>(k - 1 + d),
                       static_cast<unsigned>(d)) *
              mult;
      if (d % 2 != 0) c = -c;
      out.terms.emplace(l, c);
    }
  }
  return out;
}

std::string ConeCheckResult::summary() const {
  std::ostringstream os;
  os << "cone check: " << (pointed ? "pointed" : "NOT POINTED")
     << ", lattice elements positive up to weight " << checked_weight << ": "
     << (lattice_elements_positive ? "yes" : "no") << ", " << rays.size()
     << " generating rays";
  return os.str();
}

ConeCheckResult cone_check(const AContext& ctx, int64_t weight_bound) {
  ConeCheckResult r;
  r.pointed = ctx.cone_is_pointed();
  r.checked_weight = weight_bound;
  r.rays = ctx.cone_rays();
  r.lattice_elements_positive = true;
  for (int i = 0; i < ctx.N(); ++i) {
    auto li = enumerate_Li(ctx, i, static_cast<int>(weight_bound) + 1,
                           weight_bound);
    for (const auto& l : li.elements) {
      if (ctx.grading(l) < 1) r.lattice_elements_positive = false;
      if (!ctx.in_cone(l)) r.lattice_elements_positive = false;
    }
  }
  return r;
}

}  // namespace dwork::ahyp
