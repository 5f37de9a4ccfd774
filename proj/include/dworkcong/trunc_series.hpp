#pragma once

// Single-variable truncated power series mod (p^s, t^T), with exact
// inversion of units, the Frobenius substitution t -> t^p, and both d/dt
// and the logarithmic derivation t d/dt.

#include <vector>

#include "dworkcong/ring.hpp"

namespace dwork {

class TruncSeries {
 public:
  TruncSeries(int64_t p, int s, int T);

  int64_t prime() const { return p_; }
  int precision() const { return s_; }
  int order() const { return T_; }
  const Int& modulus() const { return mod_; }

  const Int& coeff(int k) const;
  void set_coeff(int k, const Int& v);
  void add_coeff(int k, const Int& v);

  static TruncSeries from_coeffs(int64_t p, int s, int T,
                                 const std::vector<Int>& c);

  bool is_zero() const;
  // Unit in Z/p^s[[t]]/(t^T): constant term invertible mod p.
  bool is_unit() const;

  TruncSeries operator-() const;
  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  TruncSeries& operator+=(const TruncSeries& b) { return *this = *this + b; }
  TruncSeries& operator-=(const TruncSeries& b) { return *this = *this - b; }
  TruncSeries& operator*=(const TruncSeries& b) { return *this = *this * b; }
  friend bool operator==(const TruncSeries& a, const TruncSeries& b);

  // Multiplicative inverse; throws "not a unit" when the constant term is
  // divisible by p.
  TruncSeries inverse() const;

  // Substitution t -> t^p (the Frobenius lift on Z_p[[t]]).
  TruncSeries frobenius() const;

  // d/dt; the order window shrinks by one.
  TruncSeries derivative() const;

  // t d/dt at the same order window.
  TruncSeries log_derivative() const;

  TruncSeries reduce_precision(int s2) const;
  TruncSeries truncate_order(int T2) const;

  // Evaluation at a residue point (same (p, s)).
  ResidueInt eval(const ResidueInt& t0) const;

  std::string str(const std::string& var = "t") const;

 private:
  void require_same_ring(const TruncSeries& o) const;
  Int reduce(const Int& v) const {
    Int r = v % mod_;
    if (r < 0) r += mod_;
    return r;
  }

  int64_t p_;
  int s_;
  int T_;
  Int mod_;
  std::vector<Int> c_;
};

template <>
struct ring_traits<TruncSeries> {
  static TruncSeries zero_like(const TruncSeries& x) {
    return TruncSeries(x.prime(), x.precision(), x.order());
  }
  static TruncSeries one_like(const TruncSeries& x) {
    TruncSeries r(x.prime(), x.precision(), x.order());
    r.set_coeff(0, 1);
    return r;
  }
  static bool is_zero(const TruncSeries& x) { return x.is_zero(); }
  static TruncSeries from_int(const Int& n, const TruncSeries& like) {
    TruncSeries r(like.prime(), like.precision(), like.order());
    r.set_coeff(0, n);
    return r;
  }
  static std::string str(const TruncSeries& x) { return x.str(); }
};

}  // namespace dwork
