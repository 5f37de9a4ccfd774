#pragma once

// Exact arithmetic backbone: arbitrary-precision integers and rationals,
// residue rings Z/p^s, p-adic valuation, Hensel lifting for unit roots.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace dwork {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Largest e with p^e | n. Throws on n = 0 (infinite valuation).
int padic_ord(const Int& n, const Int& p);

// Trial division; p is small by design so this is enough.
bool is_prime(int64_t p);

Int pow_int(const Int& base, unsigned e);
Int binomial(unsigned n, unsigned k);
Int factorial(unsigned n);

// Extended gcd: returns g = gcd(a,b) and x,y with a*x + b*y = g.
Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y);

// Default desk-scale bounds for residue rings. Construction via
// ResidueInt::checked enforces them; the plain constructor only requires
// p prime and s >= 1.
struct ResidueLimits {
  int64_t max_p = 97;
  int max_s = 12;
};

// An element of Z/p^s with explicit (p, s). Value semantics, canonical
// representative in [0, p^s). Arithmetic requires matching (p, s).
class ResidueInt {
 public:
  ResidueInt() : p_(0), s_(0), mod_(1), v_(0) {}
  ResidueInt(int64_t p, int s, Int v);

  static ResidueInt checked(int64_t p, int s, const Int& v,
                            const ResidueLimits& limits = {});

  int64_t prime() const { return p_; }
  int precision() const { return s_; }
  const Int& value() const { return v_; }
  const Int& modulus() const { return mod_; }

  bool is_zero() const { return v_ == 0; }
  // Unit in the local ring Z/p^s, i.e. p does not divide the value.
  bool is_unit() const;

  ResidueInt inverse() const;
  ResidueInt pow(const Int& e) const;

  // Ring homomorphism Z/p^s -> Z/p^s2, s2 <= s.
  ResidueInt reduce(int s2) const;

  ResidueInt operator-() const;
  friend ResidueInt operator+(const ResidueInt& a, const ResidueInt& b);
  friend ResidueInt operator-(const ResidueInt& a, const ResidueInt& b);
  friend ResidueInt operator*(const ResidueInt& a, const ResidueInt& b);
  ResidueInt& operator+=(const ResidueInt& b) { return *this = *this + b; }
  ResidueInt& operator-=(const ResidueInt& b) { return *this = *this - b; }
  ResidueInt& operator*=(const ResidueInt& b) { return *this = *this * b; }
  friend bool operator==(const ResidueInt& a, const ResidueInt& b);
  friend bool operator!=(const ResidueInt& a, const ResidueInt& b) {
    return !(a == b);
  }

  std::string str() const;

 private:
  void require_same_ring(const ResidueInt& other) const;

  int64_t p_;
  int s_;
  Int mod_;
  Int v_;
};

// q mod p^s via modular inverse of the denominator. Requires p coprime to
// the denominator, otherwise throws "not p-integral".
ResidueInt embed_rational(const Rat& q, int64_t p, int s);

// The unique unit root of T^2 - a_p*T + p in Z/p^s, lifted one p-adic digit
// at a time from the mod-p root a_p. Requires p odd and p not dividing a_p;
// p | a_p throws "supersingular: no unit root".
ResidueInt hensel_unit_root(const Int& a_p, int64_t p, int s);

}  // namespace dwork
