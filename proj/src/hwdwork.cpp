#include "dworkcong/hwdwork.hpp"

#include <chrono>
#include <cstring>

namespace dwork::hw {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int pow_small(int64_t p, int e, int64_t limit = 1 << 20) {
  Int v = pow_int(Int(p), static_cast<unsigned>(e));
  if (v > limit)
    throw std::invalid_argument("p^s too large for a desk-scale truncation");
  return static_cast<int>(v);
}

TruncSeries series_from_bk(const std::vector<ResidueInt>& b, int cutoff,
                           int64_t p, int s, int T) {
  TruncSeries r(p, s, T);
  for (int k = 0; k < T && k < cutoff && k < static_cast<int>(b.size()); ++k)
    r.set_coeff(k, b[static_cast<size_t>(k)].value());
  return r;
}

void compare_series(CongruenceReport& rep, const TruncSeries& lhs,
                    const TruncSeries& rhs, const std::string& what) {
  const int T = std::min(lhs.order(), rhs.order());
  for (int k = 0; k < T; ++k) {
    if (lhs.coeff(k) != rhs.coeff(k)) {
      rep.holds = false;
      rep.failure = FailureLocation{what + " t^" + std::to_string(k),
                                    lhs.coeff(k).str(), rhs.coeff(k).str()};
      return;
    }
  }
}

void compare_matrices(CongruenceReport& rep,
                      const PeriodMatrix<TruncSeries>& a,
                      const PeriodMatrix<TruncSeries>& b,
                      const std::string& what) {
  for (int r = 0; r < a.size() && rep.holds; ++r)
    for (int c = 0; c < a.size() && rep.holds; ++c)
      compare_series(rep, a.at(r, c), b.at(r, c),
                     what + " entry (" + a.labels()[static_cast<size_t>(r)] +
                         "," + a.labels()[static_cast<size_t>(c)] + ")");
}

}  // namespace

LaurentPoly<ResidueInt> embed_poly(const LaurentPoly<Rat>& g, int64_t p,
                                   int s) {
  ResidueInt zero(p, s, 0);
  return map_coeffs<ResidueInt>(
      g, zero, [&](const Rat& c) { return embed_rational(c, p, s); });
}

std::vector<ResidueInt> ct_sequence(const LaurentPoly<ResidueInt>& g, int K) {
  if (K < 0) throw std::invalid_argument("ct_sequence: K must be >= 0");
  const ResidueInt zero = ring_traits<ResidueInt>::zero_like(g.zero_coeff());
  const int n = g.arity();
  bool dense_ok = !g.is_zero() && n >= 1 && n <= 3 && K >= 1 &&
                  g.zero_coeff().modulus() < Int(int64_t(1) << 31);
  int64_t lo[3] = {0, 0, 0}, hi[3] = {0, 0, 0};
  if (dense_ok) {
    bool first = true;
    for (const auto& [e, c] : g.terms()) {
      for (int i = 0; i < n; ++i) {
        if (first || e[i] < lo[i]) lo[i] = e[i];
        if (first || e[i] > hi[i]) hi[i] = e[i];
      }
      first = false;
    }
    int64_t vol = 1;
    for (int i = 0; i < n; ++i) {
      int64_t base = std::min<int64_t>(0, static_cast<int64_t>(K) * lo[i]);
      int64_t top = std::max<int64_t>(0, static_cast<int64_t>(K) * hi[i]);
      int64_t d = top - base + 1;
      if (vol > (int64_t(1) << 28) / d) {
        dense_ok = false;
        break;
      }
      vol *= d;
    }
  }
  if (!dense_ok) return ct_sequence<ResidueInt>(g, K);

  const uint64_t ps = static_cast<uint64_t>(g.zero_coeff().modulus());
  int64_t base[3] = {0, 0, 0}, dim[3] = {1, 1, 1};
  for (int i = 0; i < n; ++i) {
    base[i] = std::min<int64_t>(0, static_cast<int64_t>(K) * lo[i]);
    dim[i] = std::max<int64_t>(0, static_cast<int64_t>(K) * hi[i]) - base[i] + 1;
  }
  int64_t stride[3] = {1, 1, 1};
  for (int i = 1; i < n; ++i) stride[i] = stride[i - 1] * dim[i - 1];
  const size_t vol =
      static_cast<size_t>(dim[0]) * static_cast<size_t>(dim[1]) *
      static_cast<size_t>(dim[2]);

  struct Term {
    int64_t delta;
    uint64_t c;
  };
  std::vector<Term> terms;
  for (const auto& [e, c] : g.terms()) {
    int64_t d = 0;
    for (int i = 0; i < n; ++i) d += static_cast<int64_t>(e[i]) * stride[i];
    terms.push_back({d, static_cast<uint64_t>(c.value())});
  }

  std::vector<uint64_t> cur(vol, 0), nxt(vol, 0);
  int64_t zoff = 0;
  for (int i = 0; i < n; ++i) zoff += (0 - base[i]) * stride[i];
  cur[static_cast<size_t>(zoff)] = 1 % ps;

  std::vector<ResidueInt> out;
  out.push_back(ring_traits<ResidueInt>::one_like(zero));
  // iterate the support box of g^{k-1} only
  for (int k = 1; k <= K; ++k) {
    std::memset(nxt.data(), 0, vol * sizeof(uint64_t));
    int64_t klo[3] = {0, 0, 0}, khi[3] = {0, 0, 0};
    for (int i = 0; i < n; ++i) {
      klo[i] = static_cast<int64_t>(k - 1) * lo[i];
      khi[i] = static_cast<int64_t>(k - 1) * hi[i];
    }
    for (int64_t e2 = (n > 2 ? klo[2] : 0); e2 <= (n > 2 ? khi[2] : 0); ++e2) {
      for (int64_t e1 = (n > 1 ? klo[1] : 0); e1 <= (n > 1 ? khi[1] : 0);
           ++e1) {
        int64_t rowbase = (e1 - (n > 1 ? base[1] : 0)) * stride[1] +
                          (e2 - (n > 2 ? base[2] : 0)) * stride[2];
        for (int64_t e0 = klo[0]; e0 <= khi[0]; ++e0) {
          uint64_t v = cur[static_cast<size_t>(rowbase + e0 - base[0])];
          if (!v) continue;
          int64_t idx = rowbase + e0 - base[0];
          for (const Term& t : terms) {
            size_t j = static_cast<size_t>(idx + t.delta);
            nxt[j] = (nxt[j] + v * t.c) % ps;
          }
        }
      }
    }
    std::swap(cur, nxt);
    out.push_back(ResidueInt(zero.prime(), zero.precision(),
                             Int(cur[static_cast<size_t>(zoff)])));
  }
  return out;
}

TruncSeries q_series(const LaurentPoly<Rat>& g, int64_t p, int s, int T) {
  LatticePolytope delta = newton_polytope(g);
  auto interior = delta.interior_lattice_points();
  if (interior.size() != 1 || !interior[0].is_zero())
    throw std::invalid_argument(
        "q_series: 0 must be the only interior lattice point of the Newton "
        "polytope");
  auto b = ct_sequence(embed_poly(g, p, s), T - 1);
  return series_from_bk(b, T, p, s, T);
}

ParamPoly one_minus_t_g(const LaurentPoly<Rat>& g) {
  LaurentPoly<Rat> pzero(1, Rat(0));
  ParamPoly f(g.arity(), pzero);
  f.add_term(ExponentVec::zeros(g.arity()), LaurentPoly<Rat>::constant(1, 1));
  for (const auto& [e, c] : g.terms())
    f.add_term(e, LaurentPoly<Rat>::monomial(ExponentVec{1}, -c));
  return f;
}

LaurentPoly<TruncSeries> embed_param_poly(const ParamPoly& f, int64_t p, int s,
                                          int T) {
  TruncSeries zero(p, s, T);
  return map_coeffs<TruncSeries>(f, zero, [&](const LaurentPoly<Rat>& c) {
    TruncSeries r(p, s, T);
    for (const auto& [e, q] : c.terms()) {
      if (e[0] < 0)
        throw std::invalid_argument(
            "embed_param_poly: negative parameter exponent");
      if (e[0] < T) r.add_coeff(e[0], embed_rational(q, p, s).value());
    }
    return r;
  });
}

CongruenceReport verify_mev(const LaurentPoly<Rat>& g, int64_t p, int s, int T,
                            const std::optional<PerturbSpec>& perturb) {
  auto t0 = Clock::now();
  if (s < 1) throw std::invalid_argument("verify_mev: s must be >= 1");
  CongruenceReport rep;
  rep.claim = "mev";
  rep.params = {{"p", std::to_string(p)},
                {"s", std::to_string(s)},
                {"T", std::to_string(T)},
                {"window", "t^" + std::to_string(T)}};
  int ps_hi = pow_small(p, s);
  int ps_lo = pow_small(p, s - 1);

  LatticePolytope delta = newton_polytope(g);
  auto interior = delta.interior_lattice_points();
  if (interior.size() != 1 || !interior[0].is_zero())
    throw std::invalid_argument(
        "verify_mev: 0 must be the only interior lattice point");
  auto b = ct_sequence(embed_poly(g, p, s), T - 1);
  TruncSeries q = series_from_bk(b, T, p, s, T);
  TruncSeries gam_hi = series_from_bk(b, ps_hi, p, s, T);
  TruncSeries gam_lo = series_from_bk(b, ps_lo, p, s, T);
  if (!q.is_unit())
    throw std::invalid_argument("verify_mev: q is not a unit (b_0 != 1?)");
  if (perturb) gam_hi.add_coeff(perturb->index % T, 1);

  TruncSeries lhs = q * gam_lo.frobenius();
  TruncSeries rhs = q.frobenius() * gam_hi;
  rep.holds = true;
  compare_series(rep, lhs, rhs, "q*sigma(gamma_lo) vs sigma(q)*gamma_hi at");
  rep.millis = ms_since(t0);
  return rep;
}

CongruenceReport verify_any_m(const LaurentPoly<Rat>& g, int64_t p, int m,
                              int T,
                              const std::optional<PerturbSpec>& perturb) {
  auto t0 = Clock::now();
  if (m < 1 || m % p != 0)
    throw std::invalid_argument("verify_any_m: need p | m");
  int ord = padic_ord(Int(m), Int(p));
  CongruenceReport rep;
  rep.claim = "any-m";
  rep.params = {{"p", std::to_string(p)},
                {"m", std::to_string(m)},
                {"mod", "p^" + std::to_string(ord)},
                {"T", std::to_string(T)},
                {"window", "t^" + std::to_string(T)}};
  auto b = ct_sequence(embed_poly(g, p, ord), T - 1);
  TruncSeries q = series_from_bk(b, T, p, ord, T);
  TruncSeries gam_m = series_from_bk(b, m, p, ord, T);
  TruncSeries gam_mp = series_from_bk(b, m / static_cast<int>(p), p, ord, T);
  if (!q.is_unit())
    throw std::invalid_argument("verify_any_m: q is not a unit");
  if (perturb) gam_m.add_coeff(perturb->index % T, 1);

  TruncSeries lhs = q * gam_mp.frobenius();
  TruncSeries rhs = q.frobenius() * gam_m;
  rep.holds = true;
  compare_series(rep, lhs, rhs, "q*sigma(gamma_{m/p}) vs sigma(q)*gamma_m at");
  rep.millis = ms_since(t0);
  return rep;
}

CongruenceReport verify_derivative(const LaurentPoly<Rat>& g, int64_t p, int m,
                                   int T,
                                   const std::optional<PerturbSpec>& perturb) {
  auto t0 = Clock::now();
  if (m < 1) throw std::invalid_argument("verify_derivative: m must be >= 1");
  int ord = padic_ord(Int(m), Int(p));
  if (ord < 1)
    throw std::invalid_argument("verify_derivative: need ord_p(m) >= 1");
  CongruenceReport rep;
  rep.claim = "deriv";
  rep.params = {{"p", std::to_string(p)},
                {"m", std::to_string(m)},
                {"mod", "p^" + std::to_string(ord)},
                {"T", std::to_string(T)},
                {"window", "t^" + std::to_string(T - 1)}};
  auto b = ct_sequence(embed_poly(g, p, ord), T - 1);
  TruncSeries q = series_from_bk(b, T, p, ord, T);
  TruncSeries gam_m = series_from_bk(b, m, p, ord, T);
  if (perturb) gam_m.add_coeff(perturb->index % T, 1);

  TruncSeries lhs = q.derivative() * gam_m.truncate_order(T - 1);
  TruncSeries rhs = gam_m.derivative() * q.truncate_order(T - 1);
  rep.holds = true;
  compare_series(rep, lhs, rhs, "q'*gamma_m vs gamma_m'*q at");
  rep.millis = ms_since(t0);
  return rep;
}

ApproximantPair approximants(const ParamPoly& f, const MuSpec& mu, int64_t p,
                             int level_s, int s_work, int T, bool use_gamma,
                             PhiMode phi_mode) {
  if (level_s < 1)
    throw std::invalid_argument("approximants: level must be >= 1");
  LaurentPoly<TruncSeries> fr = embed_param_poly(f, p, s_work, T);
  OpenSubset sub = make_open_subset(newton_polytope(fr), mu);
  int m_hi = pow_small(p, level_s);
  int m_lo = pow_small(p, level_s - 1);
  auto build = [&](int m) {
    return use_gamma ? gamma_matrix(fr, sub, m, phi_mode)
                     : beta_matrix(fr, sub, m);
  };
  PeriodMatrix<TruncSeries> b_hi = build(m_hi);
  PeriodMatrix<TruncSeries> b_lo = build(m_lo);
  auto sigma = [](const PeriodMatrix<TruncSeries>& x) {
    return x.map([](const TruncSeries& e) { return e.frobenius(); });
  };
  auto dlog = [](const PeriodMatrix<TruncSeries>& x) {
    return x.map([](const TruncSeries& e) { return e.log_derivative(); });
  };
  ApproximantPair out{b_hi * inverse(sigma(b_lo)), dlog(b_hi) * inverse(b_hi)};
  return out;
}

CongruenceReport verify_limits(const ParamPoly& f, const MuSpec& mu, int64_t p,
                               int s_max, int T, PhiMode phi_mode,
                               const std::optional<PerturbSpec>& perturb) {
  auto t0 = Clock::now();
  if (s_max < 1) throw std::invalid_argument("verify_limits: smax >= 1");
  CongruenceReport rep;
  rep.claim = "limits";
  rep.params = {{"p", std::to_string(p)},
                {"smax", std::to_string(s_max)},
                {"T", std::to_string(T)},
                {"mu", mu.str()},
                {"window", "t^" + std::to_string(T)}};
  rep.holds = true;
  for (int s = 1; s <= s_max && rep.holds; ++s) {
    ApproximantPair beta_lo = approximants(f, mu, p, s, s, T, false, phi_mode);
    ApproximantPair beta_hi =
        approximants(f, mu, p, s + 1, s, T, false, phi_mode);
    ApproximantPair gam_lo = approximants(f, mu, p, s, s, T, true, phi_mode);
    ApproximantPair gam_hi =
        approximants(f, mu, p, s + 1, s, T, true, phi_mode);
    if (perturb && s == 1)
      beta_lo.lambda.at(0, 0).add_coeff(perturb->index % T, 1);
    std::string lvl = " (mod p^" + std::to_string(s) + ")";
    compare_matrices(rep, beta_hi.lambda, beta_lo.lambda,
                     "Lambda beta-variant Cauchy" + lvl);
    if (rep.holds)
      compare_matrices(rep, beta_hi.nmat, beta_lo.nmat,
                       "N beta-variant Cauchy" + lvl);
    if (rep.holds)
      compare_matrices(rep, gam_hi.lambda, gam_lo.lambda,
                       "Lambda gamma-variant Cauchy" + lvl);
    if (rep.holds)
      compare_matrices(rep, gam_hi.nmat, gam_lo.nmat,
                       "N gamma-variant Cauchy" + lvl);
    if (rep.holds)
      compare_matrices(rep, beta_lo.lambda, gam_lo.lambda,
                       "Lambda beta vs gamma" + lvl);
    if (rep.holds)
      compare_matrices(rep, beta_lo.nmat, gam_lo.nmat,
                       "N beta vs gamma" + lvl);
  }
  rep.millis = ms_since(t0);
  return rep;
}

TruncSeries legendre_truncation(int64_t p, int s, int m) {
  if (p == 2)
    throw std::invalid_argument(
        "legendre_truncation: p = 2 rejected (4^{-k} not 2-integral)");
  if (m < 1) throw std::invalid_argument("legendre_truncation: m >= 1");
  TruncSeries r(p, s, m);
  ResidueInt inv16 = embed_rational(Rat(1, 16), p, s);
  ResidueInt acc = ring_traits<ResidueInt>::one_like(inv16);
  for (int k = 0; k < m; ++k) {
    if (k > 0) acc = acc * inv16;
    Int c2k = binomial(static_cast<unsigned>(2 * k), static_cast<unsigned>(k));
    ResidueInt ck(p, s, c2k);
    r.set_coeff(k, (ck * ck * acc).value());
  }
  return r;
}

int64_t count_points_legendre(const Int& z0, int64_t p) {
  if (!is_prime(p) || p == 2)
    throw std::invalid_argument("count_points_legendre: p must be an odd prime");
  int64_t z = static_cast<int64_t>(((z0 % p) + p) % p);
  if (z == 0 || z == 1)
    throw std::invalid_argument("count_points_legendre: singular curve");
  auto powmod = [&](int64_t b, int64_t e) {
    int64_t r = 1;
    b %= p;
    while (e) {
      if (e & 1) r = (__int128)r * b % p;
      b = (__int128)b * b % p;
      e >>= 1;
    }
    return r;
  };
  int64_t count = 1;  // point at infinity
  for (int64_t x = 0; x < p; ++x) {
    int64_t v = (__int128)x % p * ((x - 1 + p) % p) % p * ((x - z + p) % p) % p;
    if (v == 0) {
      count += 1;
    } else {
      int64_t chi = powmod(v, (p - 1) / 2);
      count += (chi == 1) ? 2 : 0;
    }
  }
  return p + 1 - count;
}

UnitRootResult unit_root_legendre(const Int& z0, int64_t p, int s) {
  if (s < 1) throw std::invalid_argument("unit_root_legendre: s >= 1");
  UnitRootResult out;
  out.p = p;
  out.s = s;
  out.point = z0.str();
  int64_t a_p = count_points_legendre(z0, p);
  out.a_p = Int(a_p);
  if (a_p % p == 0)
    throw std::domain_error("unit_root_legendre: supersingular: no unit root");
  int m_hi = pow_small(p, s, 1 << 17);
  int m_lo = pow_small(p, s - 1, 1 << 17);
  TruncSeries f_hi = legendre_truncation(p, s, m_hi);
  TruncSeries f_lo = legendre_truncation(p, s, m_lo);
  ResidueInt z(p, s, z0);
  ResidueInt num = f_hi.eval(z);
  ResidueInt den = f_lo.eval(z);
  if (!den.is_unit())
    throw std::domain_error("unit_root_legendre: non-ordinary point");
  ResidueInt lam = num * den.inverse();
  if ((p - 1) / 2 % 2 == 1) lam = -lam;  // sign (-1)^{(p-1)/2}
  out.lambda_trunc = lam;
  out.lambda_hensel = hensel_unit_root(Int(a_p), p, s);
  out.agree = (*out.lambda_trunc == *out.lambda_hensel);
  return out;
}

UnitRootResult unit_root_ct_series(const LaurentPoly<Rat>& g, const Int& t0,
                                   int64_t p, int s) {
  if (s < 1) throw std::invalid_argument("unit_root_ct_series: s >= 1");
  UnitRootResult out;
  out.p = p;
  out.s = s;
  out.point = t0.str();
  int m_hi = pow_small(p, s, 1 << 17);
  int m_lo = pow_small(p, s - 1, 1 << 17);
  auto b = ct_sequence(embed_poly(g, p, s), m_hi - 1);
  TruncSeries gam_hi = series_from_bk(b, m_hi, p, s, m_hi);
  TruncSeries gam_lo = series_from_bk(b, m_lo, p, s, m_hi);
  ResidueInt t(p, s, t0);
  // ordinarity: gamma_p at the residue of t0 must be a unit
  TruncSeries gam_p = series_from_bk(b, pow_small(p, 1), p, s, m_hi);
  if (!gam_p.eval(t).is_unit())
    throw std::domain_error("unit_root_ct_series: non-ordinary point");
  ResidueInt den = gam_lo.eval(t);
  if (!den.is_unit())
    throw std::domain_error("unit_root_ct_series: non-ordinary point");
  out.lambda_trunc = gam_hi.eval(t) * den.inverse();
  out.agree = false;
  return out;
}

}  // namespace dwork::hw
