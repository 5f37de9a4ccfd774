#pragma once

// Sparse multivariate Laurent polynomials over a pluggable coefficient ring.
// Parameter variables (t, z, v_1..v_N) live in the coefficient ring as a
// nested LaurentPoly, never as extra core variables; constant-term
// extraction in the core variables is then a single map lookup.

#include <map>
#include <set>
#include <vector>

#include "dworkcong/exponent.hpp"
#include "dworkcong/ring.hpp"

namespace dwork {

template <class R>
class LaurentPoly {
 public:
  using Terms = std::map<ExponentVec, R>;

  LaurentPoly(int arity, R zero) : arity_(arity), zero_(std::move(zero)) {
    if (arity < 0 || arity > ExponentVec::kMaxArity)
      throw std::invalid_argument("LaurentPoly: bad arity");
  }

  static LaurentPoly constant(int arity, R c) {
    LaurentPoly f(arity, ring_traits<R>::zero_like(c));
    f.add_term(ExponentVec::zeros(arity), std::move(c));
    return f;
  }
  static LaurentPoly monomial(ExponentVec e, R c) {
    LaurentPoly f(e.arity(), ring_traits<R>::zero_like(c));
    f.add_term(e, std::move(c));
    return f;
  }

  int arity() const { return arity_; }
  const R& zero_coeff() const { return zero_; }
  const Terms& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const ExponentVec& e, R c) {
    if (e.arity() != arity_)
      throw std::invalid_argument("LaurentPoly: exponent arity mismatch");
    if (ring_traits<R>::is_zero(c)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, std::move(c));
    } else {
      it->second = it->second + c;
      if (ring_traits<R>::is_zero(it->second)) terms_.erase(it);
    }
  }

  const R& coeff(const ExponentVec& e) const {
    if (e.arity() != arity_)
      throw std::invalid_argument("LaurentPoly: exponent arity mismatch");
    auto it = terms_.find(e);
    return it == terms_.end() ? zero_ : it->second;
  }

  std::set<ExponentVec> support() const {
    std::set<ExponentVec> s;
    for (const auto& [e, c] : terms_) s.insert(e);
    return s;
  }

  LaurentPoly operator-() const {
    LaurentPoly r(arity_, zero_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_compat(b);
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_compat(b);
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_compat(b);
    LaurentPoly r(a.arity_, a.zero_);
    // iterate the smaller factor outermost
    const LaurentPoly& small = a.size() <= b.size() ? a : b;
    const LaurentPoly& big = a.size() <= b.size() ? b : a;
    for (const auto& [e1, c1] : small.terms_) {
      for (const auto& [e2, c2] : big.terms_) {
        r.add_term(e1 + e2, c1 * c2);
      }
    }
    return r;
  }
  LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
  LaurentPoly& operator-=(const LaurentPoly& b) { return *this = *this - b; }
  LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }

  LaurentPoly scaled(const R& c) const {
    LaurentPoly r(arity_, zero_);
    for (const auto& [e, k] : terms_) r.add_term(e, k * c);
    return r;
  }

  // Binary exponentiation. Coefficient reduction (for ResidueInt and
  // series coefficients) happens inside the ring ops on every multiply.
  LaurentPoly pow(unsigned e) const {
    LaurentPoly r = constant(arity_, ring_traits<R>::one_like(zero_));
    LaurentPoly b = *this;
    while (e) {
      if (e & 1u) r *= b;
      if (e >>= 1u) b *= b;
    }
    return r;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  std::string str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
      if (!s.empty()) s += " + ";
      std::string cs = ring_traits<R>::str(c);
      std::string ms = e.monomial_str(names);
      if (ms == "1") {
        s += cs;
      } else if (cs == "1") {
        s += ms;
      } else {
        s += (cs.find_first_of("+- ") != std::string::npos ? "(" + cs + ")"
                                                           : cs) +
             "*" + ms;
      }
    }
    return s;
  }

 private:
  void check_compat(const LaurentPoly& o) const {
    if (arity_ != o.arity_)
      throw std::invalid_argument("LaurentPoly: arity mismatch");
  }

  int arity_;
  R zero_;
  Terms terms_;
};

template <class R>
struct ring_traits<LaurentPoly<R>> {
  static LaurentPoly<R> zero_like(const LaurentPoly<R>& f) {
    return LaurentPoly<R>(f.arity(), ring_traits<R>::zero_like(f.zero_coeff()));
  }
  static LaurentPoly<R> one_like(const LaurentPoly<R>& f) {
    return LaurentPoly<R>::constant(f.arity(),
                                    ring_traits<R>::one_like(f.zero_coeff()));
  }
  static bool is_zero(const LaurentPoly<R>& f) { return f.is_zero(); }
  static LaurentPoly<R> from_int(const Int& n, const LaurentPoly<R>& like) {
    return LaurentPoly<R>::constant(
        like.arity(), ring_traits<R>::from_int(n, like.zero_coeff()));
  }
  static std::string str(const LaurentPoly<R>& f) {
    std::vector<std::string> names;
    for (int i = 0; i < f.arity(); ++i)
      names.push_back("x" + std::to_string(i + 1));
    return f.str(names);
  }
};

// Maps every coefficient through fn; prunes zeros. Used for reductions
// such as Z -> Z/p^s or Q -> Z/p^s.
template <class S, class R, class Fn>
LaurentPoly<S> map_coeffs(const LaurentPoly<R>& f, const S& zero_like, Fn fn) {
  LaurentPoly<S> r(f.arity(), ring_traits<S>::zero_like(zero_like));
  for (const auto& [e, c] : f.terms()) r.add_term(e, fn(c));
  return r;
}

}  // namespace dwork
