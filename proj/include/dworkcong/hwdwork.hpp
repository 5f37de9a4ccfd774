#pragma once

// Hasse-Witt style matrices beta_m and gamma_m, constant-term sequences and
// the period series q(t), the Dwork-type congruence verifiers, the
// Frobenius/derivation approximant matrices with their Cauchy checks, and
// the Legendre-family unit-root cross validation.

#include <optional>

#include "dworkcong/laurent.hpp"
#include "dworkcong/matrix.hpp"
#include "dworkcong/polytope.hpp"
#include "dworkcong/report.hpp"
#include "dworkcong/trunc_series.hpp"

namespace dwork::hw {

// beta_m: entry (u,v) = coefficient of x^{m v - u} in f^{m-1}, indexed by
// mu_Z in lexicographic order. mu must be an open subset of Delta(f).
template <class R>
PeriodMatrix<R> beta_matrix(const LaurentPoly<R>& f, const OpenSubset& mu,
                            int m) {
  if (m < 1) throw std::invalid_argument("beta_matrix: m must be >= 1");
  if (!(mu.polytope() == newton_polytope(f)))
    throw std::invalid_argument(
        "beta_matrix: mu is not a subset of the Newton polytope of f");
  const auto& pts = mu.points();
  const int h = static_cast<int>(pts.size());
  if (h == 0) throw std::invalid_argument("beta_matrix: mu has no points");
  LaurentPoly<R> fm = f.pow(static_cast<unsigned>(m - 1));
  PeriodMatrix<R> b(h, f.zero_coeff());
  std::vector<std::string> labels;
  for (const auto& q : pts) labels.push_back(q.str());
  b.set_labels(labels);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < h; ++c) {
      ExponentVec e =
          pts[static_cast<size_t>(c)].scaled(static_cast<int32_t>(m)) -
          pts[static_cast<size_t>(r)];
      b.at(r, c) = fm.coeff(e);
    }
  }
  return b;
}

enum class PhiMode { kOnes, kPolyCoeff };

// gamma_m through the beta expansion, entry (u,v) =
// sum_{k=1}^m (-1)^{k+1} C(m,k) phi_v^{m-k} (beta_k)_{u,v}.
// This is an exact Laurent-polynomial identity; no division by f anywhere.
template <class R>
PeriodMatrix<R> gamma_matrix(const LaurentPoly<R>& f, const OpenSubset& mu,
                             int m, const std::vector<R>& phi) {
  if (m < 1) throw std::invalid_argument("gamma_matrix: m must be >= 1");
  if (!(mu.polytope() == newton_polytope(f)))
    throw std::invalid_argument(
        "gamma_matrix: mu is not a subset of the Newton polytope of f");
  const auto& pts = mu.points();
  const int h = static_cast<int>(pts.size());
  if (static_cast<int>(phi.size()) != h)
    throw std::invalid_argument("gamma_matrix: phi missing an index");

  // beta_k entries for k = 1..m from one incremental power sweep
  std::vector<PeriodMatrix<R>> betas;
  betas.reserve(static_cast<size_t>(m));
  LaurentPoly<R> cur = ring_traits<LaurentPoly<R>>::one_like(f);
  for (int k = 1; k <= m; ++k) {
    if (k > 1) cur *= f;
    PeriodMatrix<R> b(h, f.zero_coeff());
    for (int r = 0; r < h; ++r)
      for (int c = 0; c < h; ++c)
        b.at(r, c) = cur.coeff(
            pts[static_cast<size_t>(c)].scaled(static_cast<int32_t>(k)) -
            pts[static_cast<size_t>(r)]);
    betas.push_back(std::move(b));
  }

  PeriodMatrix<R> g(h, f.zero_coeff());
  std::vector<std::string> labels;
  for (const auto& q : pts) labels.push_back(q.str());
  g.set_labels(labels);
  // iterate k downward so phi_v^{m-k} accumulates by multiplication only
  std::vector<R> phipow(phi.size(), ring_traits<R>::one_like(f.zero_coeff()));
  for (int k = m; k >= 1; --k) {
    Int c = binomial(static_cast<unsigned>(m), static_cast<unsigned>(k));
    if (k % 2 == 0) c = -c;
    R cf = ring_traits<R>::from_int(c, f.zero_coeff());
    for (int col = 0; col < h; ++col) {
      R scale = cf * phipow[static_cast<size_t>(col)];
      for (int r = 0; r < h; ++r) {
        g.at(r, col) =
            g.at(r, col) +
            scale * betas[static_cast<size_t>(k - 1)].at(r, col);
      }
    }
    if (k > 1)
      for (size_t col = 0; col < phi.size(); ++col)
        phipow[col] = phipow[col] * phi[col];
  }
  return g;
}

template <class R>
std::vector<R> phi_defaults(const LaurentPoly<R>& f, const OpenSubset& mu,
                            PhiMode mode) {
  std::vector<R> phi;
  for (const auto& v : mu.points()) {
    if (mode == PhiMode::kOnes)
      phi.push_back(ring_traits<R>::one_like(f.zero_coeff()));
    else
      phi.push_back(f.coeff(v));
  }
  return phi;
}

template <class R>
PeriodMatrix<R> gamma_matrix(const LaurentPoly<R>& f, const OpenSubset& mu,
                             int m, PhiMode mode) {
  return gamma_matrix(f, mu, m, phi_defaults(f, mu, mode));
}

// b_k = constant term of g^k for k = 0..K, by incremental powers.
template <class R>
std::vector<R> ct_sequence(const LaurentPoly<R>& g, int K) {
  if (K < 0) throw std::invalid_argument("ct_sequence: K must be >= 0");
  const ExponentVec z = ExponentVec::zeros(g.arity());
  std::vector<R> out;
  out.push_back(ring_traits<R>::one_like(g.zero_coeff()));
  LaurentPoly<R> cur = ring_traits<LaurentPoly<R>>::one_like(g);
  for (int k = 1; k <= K; ++k) {
    cur *= g;
    out.push_back(cur.coeff(z));
  }
  return out;
}

// Dense fast path for word-size moduli in dimension <= 3; falls back to the
// generic sparse walk otherwise.
std::vector<ResidueInt> ct_sequence(const LaurentPoly<ResidueInt>& g, int K);

// Reduction Q -> Z/p^s of a rational-coefficient Laurent polynomial;
// throws when some denominator is divisible by p.
LaurentPoly<ResidueInt> embed_poly(const LaurentPoly<Rat>& g, int64_t p,
                                   int s);

// q(t) = sum b_k t^k mod (p^s, t^T), with the standing hypothesis that 0 is
// the only interior lattice point of the Newton polytope of g.
TruncSeries q_series(const LaurentPoly<Rat>& g, int64_t p, int s, int T);

// Congruence verifiers for the constant-term series setup f = 1 - t g.
// All checks are cross-multiplied and division free.
CongruenceReport verify_mev(const LaurentPoly<Rat>& g, int64_t p, int s, int T,
                            const std::optional<PerturbSpec>& perturb = {});
CongruenceReport verify_any_m(const LaurentPoly<Rat>& g, int64_t p, int m,
                              int T,
                              const std::optional<PerturbSpec>& perturb = {});
CongruenceReport verify_derivative(
    const LaurentPoly<Rat>& g, int64_t p, int m, int T,
    const std::optional<PerturbSpec>& perturb = {});

// f with one parameter variable, such as 1 - t g(x) or the Legendre family;
// the parameter lives in the nested coefficient ring.
using ParamPoly = LaurentPoly<LaurentPoly<Rat>>;

ParamPoly one_minus_t_g(const LaurentPoly<Rat>& g);

// Reduce a one-parameter polynomial into the series ring mod (p^s, t^T).
LaurentPoly<TruncSeries> embed_param_poly(const ParamPoly& f, int64_t p, int s,
                                          int T);

// Frobenius/derivation approximants at level s over the series ring:
//   lambda_s = beta_{p^s} sigma(beta_{p^{s-1}})^{-1}
//   n_s      = delta(beta_{p^s}) beta_{p^s}^{-1},  delta = t d/dt
// (gamma variants with use_gamma = true).
struct ApproximantPair {
  PeriodMatrix<TruncSeries> lambda;
  PeriodMatrix<TruncSeries> nmat;
};
// level_s picks m = p^{level_s}; s_work is the coefficient precision the
// matrices are computed at (comparisons happen at min of the two levels).
ApproximantPair approximants(const ParamPoly& f, const MuSpec& mu, int64_t p,
                             int level_s, int s_work, int T, bool use_gamma,
                             PhiMode phi_mode = PhiMode::kOnes);

// Cauchy property of the approximants (levels s and s+1 agree mod p^s) and
// agreement of the beta- and gamma-variants, for s = 1..s_max.
CongruenceReport verify_limits(const ParamPoly& f, const MuSpec& mu, int64_t p,
                               int s_max, int T,
                               PhiMode phi_mode = PhiMode::kOnes,
                               const std::optional<PerturbSpec>& perturb = {});

// Truncated hypergeometric sum F_m(z) = sum_{k<m} C(2k,k)^2 16^{-k} z^k
// mod p^s, as a z-polynomial of degree < m. Rejects p = 2.
TruncSeries legendre_truncation(int64_t p, int s, int m);

// Trace of Frobenius for y^2 = x(x-1)(x-z0) over F_p by direct point count.
// z0 in {0,1} mod p is singular.
int64_t count_points_legendre(const Int& z0, int64_t p);

// Unit root of the Legendre curve at z0 via truncation quotients
//   (-1)^{(p-1)/2} F_{p^s}(z0) / F_{p^{s-1}}(z0)  mod p^s
// cross-checked against Hensel lifting from the point count.
UnitRootResult unit_root_legendre(const Int& z0, int64_t p, int s);

// Unit-root style quotient gamma_{p^s}(t0)/gamma_{p^{s-1}}(t0) for a
// constant-term series at a fixed lift t0 (no sign, no Hensel oracle).
UnitRootResult unit_root_ct_series(const LaurentPoly<Rat>& g, const Int& t0,
                                   int64_t p, int s);

}  // namespace dwork::hw
