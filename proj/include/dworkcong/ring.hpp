#pragma once

// Minimal coefficient-ring interface used by the generic polynomial and
// series code. Rings with runtime context (ResidueInt carries its modulus)
// derive zero/one from a sample element, so every specialization is
// "like"-based.

#include "dworkcong/exactnum.hpp"

namespace dwork {

template <class R>
struct ring_traits;

template <>
struct ring_traits<Int> {
  static Int zero_like(const Int&) { return Int(0); }
  static Int one_like(const Int&) { return Int(1); }
  static bool is_zero(const Int& x) { return x == 0; }
  static Int from_int(const Int& n, const Int&) { return n; }
  static std::string str(const Int& x) { return x.str(); }
};

template <>
struct ring_traits<Rat> {
  static Rat zero_like(const Rat&) { return Rat(0); }
  static Rat one_like(const Rat&) { return Rat(1); }
  static bool is_zero(const Rat& x) { return x == 0; }
  static Rat from_int(const Int& n, const Rat&) { return Rat(n); }
  static std::string str(const Rat& x) { return x.str(); }
};

template <>
struct ring_traits<ResidueInt> {
  static ResidueInt zero_like(const ResidueInt& r) {
    return ResidueInt(r.prime(), r.precision(), 0);
  }
  static ResidueInt one_like(const ResidueInt& r) {
    return ResidueInt(r.prime(), r.precision(), 1);
  }
  static bool is_zero(const ResidueInt& r) { return r.is_zero(); }
  static ResidueInt from_int(const Int& n, const ResidueInt& like) {
    return ResidueInt(like.prime(), like.precision(), n);
  }
  static std::string str(const ResidueInt& r) { return r.value().str(); }
};

}  // namespace dwork
