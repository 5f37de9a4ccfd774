#include "dworkcong/exactnum.hpp"

namespace dwork {

int padic_ord(const Int& n, const Int& p) {
  if (n == 0) throw std::invalid_argument("padic_ord: infinite valuation");
  if (p < 2) throw std::invalid_argument("padic_ord: p must be >= 2");
  Int m = abs(n);
  int e = 0;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  return e;
}

bool is_prime(int64_t p) {
  if (p < 2) return false;
  for (int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Int pow_int(const Int& base, unsigned e) {
  Int r = 1, b = base;
  while (e) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1u;
  }
  return r;
}

Int binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

Int factorial(unsigned n) {
  Int r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
  Int r0 = a, r1 = b, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int t;
    t = r0 - q * r1; r0 = r1; r1 = t;
    t = x0 - q * x1; x0 = x1; x1 = t;
    t = y0 - q * y1; y0 = y1; y1 = t;
  }
  if (r0 < 0) { r0 = -r0; x0 = -x0; y0 = -y0; }
  x = x0;
  y = y0;
  return r0;
}

ResidueInt::ResidueInt(int64_t p, int s, Int v) : p_(p), s_(s) {
  if (!is_prime(p)) throw std::invalid_argument("ResidueInt: p must be prime");
  if (s < 1) throw std::invalid_argument("ResidueInt: s must be >= 1");
  mod_ = pow_int(Int(p), static_cast<unsigned>(s));
  v_ = v % mod_;
  if (v_ < 0) v_ += mod_;
}

ResidueInt ResidueInt::checked(int64_t p, int s, const Int& v,
                               const ResidueLimits& limits) {
  if (p > limits.max_p)
    throw std::invalid_argument("ResidueInt: p exceeds configured bound");
  if (s > limits.max_s)
    throw std::invalid_argument("ResidueInt: s exceeds configured bound");
  return ResidueInt(p, s, v);
}

bool ResidueInt::is_unit() const {
  if (p_ == 0) return false;
  return v_ % p_ != 0;
}

void ResidueInt::require_same_ring(const ResidueInt& other) const {
  if (p_ != other.p_ || s_ != other.s_)
    throw std::invalid_argument("ResidueInt: mixed moduli in arithmetic");
}

ResidueInt ResidueInt::inverse() const {
  if (!is_unit()) throw std::domain_error("ResidueInt: not a unit");
  Int x, y;
  ext_gcd(v_, mod_, x, y);
  return ResidueInt(p_, s_, x);
}

ResidueInt ResidueInt::pow(const Int& e) const {
  if (e < 0) return inverse().pow(-e);
  ResidueInt r(p_, s_, 1), b = *this;
  Int k = e;
  while (k > 0) {
    if ((k & 1) != 0) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

ResidueInt ResidueInt::reduce(int s2) const {
  if (s2 > s_ || s2 < 1)
    throw std::invalid_argument("ResidueInt::reduce: target precision invalid");
  return ResidueInt(p_, s2, v_);
}

ResidueInt ResidueInt::operator-() const {
  ResidueInt r = *this;
  if (r.v_ != 0) r.v_ = mod_ - r.v_;
  return r;
}

ResidueInt operator+(const ResidueInt& a, const ResidueInt& b) {
  a.require_same_ring(b);
  ResidueInt r = a;
  r.v_ += b.v_;
  if (r.v_ >= r.mod_) r.v_ -= r.mod_;
  return r;
}

ResidueInt operator-(const ResidueInt& a, const ResidueInt& b) {
  a.require_same_ring(b);
  ResidueInt r = a;
  r.v_ -= b.v_;
  if (r.v_ < 0) r.v_ += r.mod_;
  return r;
}

ResidueInt operator*(const ResidueInt& a, const ResidueInt& b) {
  a.require_same_ring(b);
  ResidueInt r = a;
  r.v_ = (a.v_ * b.v_) % r.mod_;
  return r;
}

bool operator==(const ResidueInt& a, const ResidueInt& b) {
  return a.p_ == b.p_ && a.s_ == b.s_ && a.v_ == b.v_;
}

std::string ResidueInt::str() const {
  return v_.str() + " (mod " + mod_.str() + ")";
}

ResidueInt embed_rational(const Rat& q, int64_t p, int s) {
  Int num = numerator(q), den = denominator(q);
  if (den % p == 0) throw std::domain_error("embed_rational: not p-integral");
  ResidueInt d(p, s, den);
  return ResidueInt(p, s, num) * d.inverse();
}

ResidueInt hensel_unit_root(const Int& a_p, int64_t p, int s) {
  if (p == 2) throw std::invalid_argument("hensel_unit_root: p = 2 rejected");
  if (!is_prime(p)) throw std::invalid_argument("hensel_unit_root: p not prime");
  if (a_p % p == 0)
    throw std::domain_error("hensel_unit_root: supersingular: no unit root");
  // Root of f(T) = T^2 - a_p T + p, starting from lambda == a_p mod p.
  // f'(lambda) = 2 lambda - a_p == a_p mod p is a unit for odd p.
  Int lam = a_p % p;
  if (lam < 0) lam += p;
  Int mod = p;
  for (int j = 2; j <= s; ++j) {
    mod *= p;
    Int f = (lam * lam - a_p * lam + p) % mod;
    Int fp = (2 * lam - a_p) % mod;
    Int x, y;
    ext_gcd(((fp % mod) + mod) % mod, mod, x, y);
    lam = ((lam - f * x) % mod + mod) % mod;
  }
  ResidueInt r(p, s, lam);
  if (!r.is_unit()) throw std::logic_error("hensel_unit_root: lift not a unit");
  return r;
}

}  // namespace dwork
