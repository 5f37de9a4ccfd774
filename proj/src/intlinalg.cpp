#include "dworkcong/intlinalg.hpp"

#include <algorithm>

namespace dwork::linalg {

std::vector<std::vector<Int>> integer_kernel(const IMat& a0, int ncols) {
  const size_t m = a0.size();
  const size_t n = static_cast<size_t>(ncols);
  IMat a = a0;
  for (auto& row : a) row.resize(n, 0);
  // u tracks column operations: columns of the original identity
  IMat u(n, std::vector<Int>(n, 0));
  for (size_t i = 0; i < n; ++i) u[i][i] = 1;

  auto col_sub = [&](size_t dst, size_t src, const Int& q) {
    for (size_t r = 0; r < m; ++r) a[r][dst] -= q * a[r][src];
    for (size_t r = 0; r < n; ++r) u[r][dst] -= q * u[r][src];
  };
  auto col_swap = [&](size_t i, size_t j) {
    if (i == j) return;
    for (size_t r = 0; r < m; ++r) std::swap(a[r][i], a[r][j]);
    for (size_t r = 0; r < n; ++r) std::swap(u[r][i], u[r][j]);
  };

  size_t col = 0;
  for (size_t row = 0; row < m && col < n; ++row) {
    // Euclidean reduction across columns col..n-1 on this row
    while (true) {
      size_t best = n;
      for (size_t j = col; j < n; ++j) {
        if (a[row][j] != 0 &&
            (best == n || abs(a[row][j]) < abs(a[row][best])))
          best = j;
      }
      if (best == n) break;  // all zero on this row
      col_swap(col, best);
      bool cleared = true;
      for (size_t j = col + 1; j < n; ++j) {
        if (a[row][j] != 0) {
          // floor division keeps remainders small in absolute value
          Int q = a[row][j] / a[row][col];
          col_sub(j, col, q);
          if (a[row][j] != 0) cleared = false;
        }
      }
      if (cleared) break;
    }
    if (a[row][col] != 0) ++col;
    if (col >= n) break;
  }

  std::vector<std::vector<Int>> basis;
  for (size_t j = col; j < n; ++j) {
    // column j of (possibly reduced) a must be fully zero
    bool zero = true;
    for (size_t r = 0; r < m; ++r)
      if (a[r][j] != 0) zero = false;
    if (!zero) continue;
    std::vector<Int> v(n);
    for (size_t r = 0; r < n; ++r) v[r] = u[r][j];
    make_primitive(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

int rational_rank(IMat a) {
  if (a.empty()) return 0;
  const size_t m = a.size(), n = a[0].size();
  // fraction-free elimination is fine at this scale with exact Int
  std::vector<std::vector<Rat>> q(m, std::vector<Rat>(n));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < n; ++j) q[i][j] = Rat(a[i][j]);
  int rank = 0;
  size_t prow = 0;
  for (size_t c = 0; c < n && prow < m; ++c) {
    size_t piv = m;
    for (size_t r = prow; r < m; ++r)
      if (q[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv == m) continue;
    std::swap(q[prow], q[piv]);
    for (size_t r = 0; r < m; ++r) {
      if (r != prow && q[r][c] != 0) {
        Rat f = q[r][c] / q[prow][c];
        for (size_t j = c; j < n; ++j) q[r][j] -= f * q[prow][j];
      }
    }
    ++prow;
    ++rank;
  }
  return rank;
}

bool solve_rational(const IMat& a, const std::vector<Int>& b,
                    std::vector<Rat>& y) {
  const size_t m = a.size();
  const size_t n = m == 0 ? 0 : a[0].size();
  std::vector<std::vector<Rat>> q(m, std::vector<Rat>(n + 1));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) q[i][j] = Rat(a[i][j]);
    q[i][n] = Rat(b[i]);
  }
  std::vector<size_t> pivot_col;
  size_t prow = 0;
  for (size_t c = 0; c < n && prow < m; ++c) {
    size_t piv = m;
    for (size_t r = prow; r < m; ++r)
      if (q[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv == m) continue;
    std::swap(q[prow], q[piv]);
    Rat pv = q[prow][c];
    for (size_t j = c; j <= n; ++j) q[prow][j] /= pv;
    for (size_t r = 0; r < m; ++r) {
      if (r != prow && q[r][c] != 0) {
        Rat f = q[r][c];
        for (size_t j = c; j <= n; ++j) q[r][j] -= f * q[prow][j];
      }
    }
    pivot_col.push_back(c);
    ++prow;
  }
  for (size_t r = prow; r < m; ++r)
    if (q[r][n] != 0) return false;
  y.assign(n, Rat(0));
  for (size_t k = 0; k < pivot_col.size(); ++k) y[pivot_col[k]] = q[k][n];
  return true;
}

void make_primitive(std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  if (g == 0) return;
  for (Int& x : v) x /= g;
  for (const Int& x : v) {
    if (x != 0) {
      if (x < 0)
        for (Int& e : v) e = -e;
      break;
    }
  }
}

std::vector<Int> matvec(const IMat& a, const std::vector<Int>& x) {
  std::vector<Int> r(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j) r[i] += a[i][j] * x[j];
  return r;
}

}  // namespace dwork::linalg
