#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace dwork {

// Fixed-capacity signed exponent vector. Used both for monomial exponents
// (arity <= 6 core variables) and for kernel-lattice vectors l in Z^N.
// Total order is lexicographic, which fixes all matrix index orderings.
class ExponentVec {
 public:
  static constexpr int kMaxArity = 8;

  ExponentVec() : n_(0) { e_.fill(0); }
  ExponentVec(std::initializer_list<int32_t> xs) : n_(0) {
    e_.fill(0);
    if (xs.size() > kMaxArity)
      throw std::invalid_argument("ExponentVec: arity too large");
    for (int32_t x : xs) e_[n_++] = x;
  }
  explicit ExponentVec(const std::vector<int32_t>& xs) : n_(0) {
    e_.fill(0);
    if (xs.size() > kMaxArity)
      throw std::invalid_argument("ExponentVec: arity too large");
    for (int32_t x : xs) e_[n_++] = x;
  }
  static ExponentVec zeros(int n) {
    ExponentVec v;
    if (n < 0 || n > kMaxArity)
      throw std::invalid_argument("ExponentVec: arity too large");
    v.n_ = static_cast<uint8_t>(n);
    return v;
  }
  static ExponentVec unit(int n, int i, int32_t c = 1) {
    ExponentVec v = zeros(n);
    v[i] = c;
    return v;
  }

  int arity() const { return n_; }
  int32_t operator[](int i) const { return e_[static_cast<size_t>(i)]; }
  int32_t& operator[](int i) { return e_[static_cast<size_t>(i)]; }

  bool is_zero() const {
    for (int i = 0; i < n_; ++i)
      if (e_[i] != 0) return false;
    return true;
  }

  ExponentVec operator+(const ExponentVec& o) const {
    check_arity(o);
    ExponentVec r = *this;
    for (int i = 0; i < n_; ++i) r.e_[i] += o.e_[i];
    return r;
  }
  ExponentVec operator-(const ExponentVec& o) const {
    check_arity(o);
    ExponentVec r = *this;
    for (int i = 0; i < n_; ++i) r.e_[i] -= o.e_[i];
    return r;
  }
  ExponentVec operator-() const {
    ExponentVec r = *this;
    for (int i = 0; i < n_; ++i) r.e_[i] = -r.e_[i];
    return r;
  }
  ExponentVec scaled(int32_t c) const {
    ExponentVec r = *this;
    for (int i = 0; i < n_; ++i) r.e_[i] *= c;
    return r;
  }

  friend bool operator==(const ExponentVec& a, const ExponentVec& b) {
    if (a.n_ != b.n_) return false;
    for (int i = 0; i < a.n_; ++i)
      if (a.e_[i] != b.e_[i]) return false;
    return true;
  }
  friend std::strong_ordering operator<=>(const ExponentVec& a,
                                          const ExponentVec& b) {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    for (int i = 0; i < a.n_; ++i)
      if (a.e_[i] != b.e_[i]) return a.e_[i] <=> b.e_[i];
    return std::strong_ordering::equal;
  }

  std::vector<int32_t> to_vector() const {
    return std::vector<int32_t>(e_.begin(), e_.begin() + n_);
  }

  std::string str() const {
    std::string s = "(";
    for (int i = 0; i < n_; ++i) {
      if (i) s += ",";
      s += std::to_string(e_[i]);
    }
    return s + ")";
  }

  // Monomial rendering, e.g. x^2*y^-1; empty exponents give "1".
  std::string monomial_str(const std::vector<std::string>& names) const {
    std::string s;
    for (int i = 0; i < n_; ++i) {
      if (e_[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += names.at(static_cast<size_t>(i));
      if (e_[i] != 1) s += "^" + std::to_string(e_[i]);
    }
    return s.empty() ? "1" : s;
  }

 private:
  void check_arity(const ExponentVec& o) const {
    if (n_ != o.n_) throw std::invalid_argument("ExponentVec: arity mismatch");
  }

  std::array<int32_t, kMaxArity> e_;
  uint8_t n_;
};

}  // namespace dwork
