#pragma once

// The A-hypergeometric engine: Gamma* calculus, enumeration of the lattice
// solution sets L_i(m), the normalized truncated period matrices psi~_m
// built two independent ways (lattice enumeration and the constant-term
// oracle), truncation-stability verification of the main congruences, and
// period series for x^u f^{-k}.

#include <memory>

#include "dworkcong/cone.hpp"
#include "dworkcong/laurent.hpp"
#include "dworkcong/matrix.hpp"
#include "dworkcong/polytope.hpp"
#include "dworkcong/report.hpp"

namespace dwork::ahyp {

// Gamma*(n): (n-1)! for n >= 1, (-1)^n / |n|! for n <= 0.
Rat gamma_star(const Int& n);

// Column indices {j : a_j in mu_Z}; requires exactly one j per point of
// mu_Z (repeated exponent vectors inside mu are rejected).
std::vector<int> mu_column_indices(const AContext& ctx, const MuSpec& mu);

struct LatticeSolutionSet {
  int pivot = 0;       // the index i whose coordinate may go negative
  int bound_m = 0;     // l_i > -m
  int64_t weight_cap = 0;
  std::vector<ExponentVec> elements;  // nonzero, ordered by degree then lex
};

// L_i(m)* up to weight -l_i <= M, enumerated by total degree d = -l_i.
LatticeSolutionSet enumerate_Li(const AContext& ctx, int i, int m, int64_t M);

// Exact integer psi~ entries: (psi~_m)_{ji} = delta_ij +
// sum_{l in L_i(m)*, |l| <= Mcap} l_j prod_k Gamma*(l_k+1)^{-1}.
// Every produced coefficient is an integer; a non-integer aborts.
using ExactEntry = std::map<ExponentVec, Int>;
std::vector<std::vector<ExactEntry>> psi_tilde_exact(
    const AContext& ctx, const std::vector<int>& indices, int m, int64_t Mcap);

// The same matrix over the truncated cone-series ring.
PeriodMatrix<ConeSeries> psi_tilde(const std::shared_ptr<const AContext>& ctx,
                                   const std::vector<int>& indices, int m,
                                   int64_t Mcap, int64_t p, int s,
                                   int64_t grading_cap);

// Independent route: gamma_m over Z[v_1..v_N] by constant-term extraction,
// (gamma_m)_{ji} = CT( x^{a_j - a_i} sum_{k=1}^m (-1)^{k+1} C(m,k)
// v_i^{m-k} (f/x^{a_i})^{k-1} ), division free.
PeriodMatrix<LaurentPoly<Int>> gamma_ct_oracle(const AContext& ctx, int m);

// The oracle's psi~_m: entry (j,i) of gamma_m rescaled by v_j * v_i^{-m}.
std::vector<std::vector<ExactEntry>> psi_tilde_ct_oracle(const AContext& ctx,
                                                         int m);

// Truncation stability of psi~_{p^{s+1}} sigma(psi~_{p^s})^{-1} mod p^s and
// of the log-derivative analogue, on the weight window <= M/p.
CongruenceReport verify_truncation_stability(
    const std::shared_ptr<const AContext>& ctx, const MuSpec& mu, int64_t p,
    int s_max, int64_t M, const std::optional<PerturbSpec>& perturb = {});

// Laurent-series period of x^u f^{-k} expanded with respect to a_i, keys
// l in Z^N with A~ l = -(k, u), truncated by d = sum_{r != i} l_r <= M.
struct PeriodSeries {
  ExponentVec u;
  int k = 1;
  int pivot = 0;
  int64_t degree_cap = 0;
  std::map<ExponentVec, Int> terms;
};
PeriodSeries period_series(const AContext& ctx, const ExponentVec& u, int k,
                           int i, int64_t M);

struct ConeCheckResult {
  bool pointed = false;
  bool lattice_elements_positive = false;  // grading >= 1 on enumerated L_i*
  int64_t checked_weight = 0;
  std::vector<ExponentVec> rays;
  std::string summary() const;
};
ConeCheckResult cone_check(const AContext& ctx, int64_t weight_bound = 6);

// Laplace-expansion determinant for small exact matrices.
template <class R>
R det_laplace(const PeriodMatrix<R>& m) {
  const int h = m.size();
  if (h == 1) return m.at(0, 0);
  std::function<R(std::vector<int>, int)> rec =
      [&](std::vector<int> cols, int row) -> R {
    if (cols.size() == 1) return m.at(row, cols[0]);
    R acc = ring_traits<R>::zero_like(m.at(0, 0));
    for (size_t k = 0; k < cols.size(); ++k) {
      std::vector<int> rest;
      for (size_t j = 0; j < cols.size(); ++j)
        if (j != k) rest.push_back(cols[j]);
      R sub = rec(rest, row + 1);
      R term = m.at(row, cols[k]) * sub;
      acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
  };
  std::vector<int> cols;
  for (int j = 0; j < h; ++j) cols.push_back(j);
  return rec(cols, 0);
}

}  // namespace dwork::ahyp
