#include "dworkcong/trunc_series.hpp"

#include <algorithm>

namespace dwork {

TruncSeries::TruncSeries(int64_t p, int s, int T) : p_(p), s_(s), T_(T) {
  if (!is_prime(p)) throw std::invalid_argument("TruncSeries: p must be prime");
  if (s < 1) throw std::invalid_argument("TruncSeries: s must be >= 1");
  if (T < 1) throw std::invalid_argument("TruncSeries: T must be >= 1");
  mod_ = pow_int(Int(p), static_cast<unsigned>(s));
  c_.assign(static_cast<size_t>(T), Int(0));
}

const Int& TruncSeries::coeff(int k) const {
  static const Int kZero(0);
  if (k < 0 || k >= T_) return kZero;
  return c_[static_cast<size_t>(k)];
}

void TruncSeries::set_coeff(int k, const Int& v) {
  if (k < 0 || k >= T_)
    throw std::out_of_range("TruncSeries: coefficient index out of window");
  c_[static_cast<size_t>(k)] = reduce(v);
}

void TruncSeries::add_coeff(int k, const Int& v) {
  if (k < 0 || k >= T_) return;
  c_[static_cast<size_t>(k)] = reduce(c_[static_cast<size_t>(k)] + v);
}

TruncSeries TruncSeries::from_coeffs(int64_t p, int s, int T,
                                     const std::vector<Int>& c) {
  TruncSeries r(p, s, T);
  for (size_t k = 0; k < c.size() && k < static_cast<size_t>(T); ++k)
    r.set_coeff(static_cast<int>(k), c[k]);
  return r;
}

bool TruncSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Int& x) { return x == 0; });
}

bool TruncSeries::is_unit() const { return c_[0] % p_ != 0; }

void TruncSeries::require_same_ring(const TruncSeries& o) const {
  if (p_ != o.p_ || s_ != o.s_)
    throw std::invalid_argument("TruncSeries: mixed moduli");
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries r = *this;
  for (auto& x : r.c_)
    if (x != 0) x = mod_ - x;
  return r;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  a.require_same_ring(b);
  TruncSeries r(a.p_, a.s_, std::min(a.T_, b.T_));
  for (int k = 0; k < r.T_; ++k) r.set_coeff(k, a.coeff(k) + b.coeff(k));
  return r;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
  a.require_same_ring(b);
  TruncSeries r(a.p_, a.s_, std::min(a.T_, b.T_));
  for (int k = 0; k < r.T_; ++k) r.set_coeff(k, a.coeff(k) - b.coeff(k));
  return r;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  a.require_same_ring(b);
  TruncSeries r(a.p_, a.s_, std::min(a.T_, b.T_));
  for (int i = 0; i < std::min(a.T_, r.T_); ++i) {
    if (a.c_[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; i + j < r.T_ && j < b.T_; ++j) {
      if (b.c_[static_cast<size_t>(j)] == 0) continue;
      r.add_coeff(i + j,
                  a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)]);
    }
  }
  return r;
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
  return a.p_ == b.p_ && a.s_ == b.s_ && a.T_ == b.T_ && a.c_ == b.c_;
}

TruncSeries TruncSeries::inverse() const {
  if (!is_unit()) throw std::domain_error("TruncSeries: not a unit");
  Int x, y;
  ext_gcd(c_[0], mod_, x, y);
  TruncSeries g(p_, s_, T_);
  g.set_coeff(0, x);
  Int c0i = g.c_[0];
  // g_k = -c0^{-1} * sum_{j=1}^{k} c_j g_{k-j}
  for (int k = 1; k < T_; ++k) {
    Int acc = 0;
    for (int j = 1; j <= k; ++j)
      acc += c_[static_cast<size_t>(j)] * g.c_[static_cast<size_t>(k - j)];
    g.set_coeff(k, -c0i * acc);
  }
  return g;
}

TruncSeries TruncSeries::frobenius() const {
  TruncSeries r(p_, s_, T_);
  for (int k = 0; static_cast<int64_t>(k) * p_ < T_; ++k)
    r.set_coeff(static_cast<int>(k * p_), c_[static_cast<size_t>(k)]);
  return r;
}

TruncSeries TruncSeries::derivative() const {
  if (T_ == 1) return TruncSeries(p_, s_, 1);
  TruncSeries r(p_, s_, T_ - 1);
  for (int k = 0; k + 1 < T_; ++k)
    r.set_coeff(k, Int(k + 1) * c_[static_cast<size_t>(k + 1)]);
  return r;
}

TruncSeries TruncSeries::log_derivative() const {
  TruncSeries r(p_, s_, T_);
  for (int k = 1; k < T_; ++k)
    r.set_coeff(k, Int(k) * c_[static_cast<size_t>(k)]);
  return r;
}

TruncSeries TruncSeries::reduce_precision(int s2) const {
  TruncSeries r(p_, s2, T_);
  for (int k = 0; k < T_; ++k) r.set_coeff(k, c_[static_cast<size_t>(k)]);
  return r;
}

TruncSeries TruncSeries::truncate_order(int T2) const {
  if (T2 > T_)
    throw std::invalid_argument("TruncSeries: cannot extend the window");
  TruncSeries r(p_, s_, T2);
  for (int k = 0; k < T2; ++k) r.set_coeff(k, c_[static_cast<size_t>(k)]);
  return r;
}

ResidueInt TruncSeries::eval(const ResidueInt& t0) const {
  if (t0.prime() != p_ || t0.precision() != s_)
    throw std::invalid_argument("TruncSeries::eval: mixed moduli");
  ResidueInt acc(p_, s_, 0);
  for (int k = T_ - 1; k >= 0; --k)
    acc = acc * t0 + ResidueInt(p_, s_, c_[static_cast<size_t>(k)]);
  return acc;
}

std::string TruncSeries::str(const std::string& var) const {
  std::string s;
  for (int k = 0; k < T_; ++k) {
    if (c_[static_cast<size_t>(k)] == 0) continue;
    if (!s.empty()) s += " + ";
    std::string cs = c_[static_cast<size_t>(k)].str();
    if (k == 0) {
      s += cs;
    } else {
      s += (cs == "1" ? "" : cs + "*") + var +
           (k == 1 ? "" : "^" + std::to_string(k));
    }
  }
  if (s.empty()) s = "0";
  return s + " + O(" + var + "^" + std::to_string(T_) + ")";
}

}  // namespace dwork
