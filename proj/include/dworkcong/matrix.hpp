#pragma once

// Square matrices over an exact (local) coefficient ring, indexed by a fixed
// ordered label set (lattice points of mu, or A-column indices). Inversion
// is Gaussian elimination with unit pivots; in the local rings used here a
// unit pivot always exists when the constant-term matrix is invertible
// mod p, otherwise the matrix is reported singular.

#include <functional>
#include <string>
#include <vector>

#include "dworkcong/ring.hpp"

namespace dwork {

template <class R>
class PeriodMatrix {
 public:
  PeriodMatrix(int h, const R& zero)
      : h_(h), e_(static_cast<size_t>(h) * static_cast<size_t>(h),
                  ring_traits<R>::zero_like(zero)) {
    if (h < 1) throw std::invalid_argument("PeriodMatrix: size must be >= 1");
    for (int i = 0; i < h; ++i) labels_.push_back(std::to_string(i));
  }

  static PeriodMatrix identity(int h, const R& zero) {
    PeriodMatrix m(h, zero);
    for (int i = 0; i < h; ++i)
      m.at(i, i) = ring_traits<R>::one_like(zero);
    return m;
  }

  int size() const { return h_; }
  R& at(int r, int c) { return e_[idx(r, c)]; }
  const R& at(int r, int c) const { return e_[idx(r, c)]; }

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> l) {
    if (static_cast<int>(l.size()) != h_)
      throw std::invalid_argument("PeriodMatrix: label count mismatch");
    labels_ = std::move(l);
  }

  friend PeriodMatrix operator+(const PeriodMatrix& a, const PeriodMatrix& b) {
    a.check(b);
    PeriodMatrix r = a;
    for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = r.e_[i] + b.e_[i];
    return r;
  }
  friend PeriodMatrix operator-(const PeriodMatrix& a, const PeriodMatrix& b) {
    a.check(b);
    PeriodMatrix r = a;
    for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = r.e_[i] - b.e_[i];
    return r;
  }
  friend PeriodMatrix operator*(const PeriodMatrix& a, const PeriodMatrix& b) {
    a.check(b);
    PeriodMatrix r(a.h_, a.e_[0]);
    for (int i = 0; i < a.h_; ++i) {
      for (int k = 0; k < a.h_; ++k) {
        const R& aik = a.at(i, k);
        if (ring_traits<R>::is_zero(aik)) continue;
        for (int j = 0; j < a.h_; ++j) {
          r.at(i, j) = r.at(i, j) + aik * b.at(k, j);
        }
      }
    }
    r.labels_ = a.labels_;
    return r;
  }

  friend bool operator==(const PeriodMatrix& a, const PeriodMatrix& b) {
    return a.h_ == b.h_ && a.e_ == b.e_;
  }

  // Entry-wise map (derivations, reductions).
  PeriodMatrix map(const std::function<R(const R&)>& fn) const {
    PeriodMatrix r = *this;
    for (auto& x : r.e_) x = fn(x);
    return r;
  }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!ring_traits<R>::is_zero(x)) return false;
    return true;
  }

 private:
  size_t idx(int r, int c) const {
    if (r < 0 || r >= h_ || c < 0 || c >= h_)
      throw std::out_of_range("PeriodMatrix: index");
    return static_cast<size_t>(r) * static_cast<size_t>(h_) +
           static_cast<size_t>(c);
  }
  void check(const PeriodMatrix& o) const {
    if (h_ != o.h_) throw std::invalid_argument("PeriodMatrix: size mismatch");
  }

  int h_;
  std::vector<std::string> labels_;
  std::vector<R> e_;
};

// Exact inverse over a local ring. R must provide is_unit() and inverse().
// Throws std::domain_error when no unit pivot can be found (constant-term
// matrix singular mod p).
template <class R>
PeriodMatrix<R> inverse(const PeriodMatrix<R>& m) {
  const int h = m.size();
  PeriodMatrix<R> a = m;
  PeriodMatrix<R> inv = PeriodMatrix<R>::identity(h, m.at(0, 0));
  for (int col = 0; col < h; ++col) {
    int piv = -1;
    for (int r = col; r < h; ++r) {
      if (a.at(r, col).is_unit()) {
        piv = r;
        break;
      }
    }
    if (piv < 0)
      throw std::domain_error(
          "PeriodMatrix: singular (no unit pivot in column " +
          std::to_string(col) + ")");
    if (piv != col) {
      for (int j = 0; j < h; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    }
    R pinv = a.at(col, col).inverse();
    for (int j = 0; j < h; ++j) {
      a.at(col, j) = pinv * a.at(col, j);
      inv.at(col, j) = pinv * inv.at(col, j);
    }
    for (int r = 0; r < h; ++r) {
      if (r == col) continue;
      R f = a.at(r, col);
      if (ring_traits<R>::is_zero(f)) continue;
      for (int j = 0; j < h; ++j) {
        a.at(r, j) = a.at(r, j) - f * a.at(col, j);
        inv.at(r, j) = inv.at(r, j) - f * inv.at(col, j);
      }
    }
  }
  inv.set_labels(m.labels());
  return inv;
}

}  // namespace dwork
