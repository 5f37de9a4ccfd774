#pragma once

// Kernel lattice of an A-matrix, the solution cones L_i, and truncated
// power series supported in the cone L°.
//
// Truncation detail: the paper grades by the weight |l| (sum of positive
// coordinates), but |l| is a norm, not a linear functional, so "drop keys
// above weight M" is not a ring quotient. Internally the series are
// truncated by an integer linear functional w that is strictly positive on
// L° \ {0} (it exists because the cone is pointed); that IS an exact ring
// quotient, and it makes unit inversion terminate. Verifiers pick the w-cap
// large enough to cover every key of weight <= M, then report on the
// weight-M window.

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "dworkcong/exponent.hpp"
#include "dworkcong/intlinalg.hpp"
#include "dworkcong/ring.hpp"

namespace dwork {

struct AConfig {
  // exponent vectors a_1..a_N of f = sum v_i x^{a_i}
  std::vector<ExponentVec> exponents;
};

class AContext {
 public:
  explicit AContext(AConfig cfg);

  int N() const { return N_; }
  int n() const { return n_; }
  const AConfig& config() const { return cfg_; }
  const linalg::IMat& a_tilde() const { return a_tilde_; }

  // Basis of the full integer kernel of the A-matrix; rank d = N - rank(A~).
  const std::vector<std::vector<Int>>& kernel_basis() const { return basis_; }
  int kernel_rank() const { return d_; }

  bool in_kernel(const ExponentVec& l) const;

  // Kernel coordinates y with l = B y (null when l is not in the kernel).
  std::optional<std::vector<Int>> kernel_coords(const ExponentVec& l) const;

  // |l| = sum of positive coordinates; on the kernel this equals half the
  // l1-norm since the coordinates sum to zero.
  static int64_t weight(const ExponentVec& l);

  // The grading functional value w(l); additive, >= 1 on nonzero cone keys.
  int64_t grading(const ExponentVec& l) const;

  // Extreme rays of L_i(R) expressed as lattice vectors in Z^N.
  const std::vector<ExponentVec>& rays_of_Li(int i) const {
    return li_rays_[static_cast<size_t>(i)];
  }
  // Pooled generating rays of L° = sum_i L_i(R).
  const std::vector<ExponentVec>& cone_rays() const { return cone_rays_; }

  // Membership of a kernel-lattice vector in the real cone L°(R).
  bool in_cone(const ExponentVec& l) const;

  // All lattice points of L° with |l| <= M (includes 0), lex order.
  std::vector<ExponentVec> cone_points_up_to_weight(int64_t M) const;

  // Smallest w-cap that resolves every key of weight <= M.
  int64_t grading_cap_for_weight(int64_t M) const;

  bool cone_is_pointed() const { return pointed_; }
  const std::vector<Int>& grading_vector() const { return w_y_; }

 private:
  std::vector<std::vector<Int>> rays_in_y(int i) const;
  bool y_in_cone(const std::vector<Int>& y) const;

  AConfig cfg_;
  int N_ = 0, n_ = 0, d_ = 0;
  linalg::IMat a_tilde_;                 // (n+1) x N
  std::vector<std::vector<Int>> basis_;  // d vectors of length N
  // rational left inverse of the basis matrix, scaled to integers:
  // y = (linv * l) / linv_den
  linalg::IMat linv_;
  Int linv_den_ = 1;
  std::vector<Int> w_y_;   // grading functional in kernel coords
  std::vector<Int> w_l_;   // same functional pulled back to Z^N (num)
  Int w_den_ = 1;
  std::vector<std::vector<ExponentVec>> li_rays_;
  std::vector<ExponentVec> cone_rays_;
  std::vector<std::vector<Int>> cone_rays_y_;
  bool pointed_ = true;
};

// Truncated power series supported in L°, coefficients in Z/p^s, keys kept
// up to the grading cap. Keys are validated against the kernel lattice at
// construction; invalid keys are a hard error.
class ConeSeries {
 public:
  ConeSeries(std::shared_ptr<const AContext> ctx, int64_t p, int s,
             int64_t grading_cap);

  const std::shared_ptr<const AContext>& context() const { return ctx_; }
  int64_t prime() const { return p_; }
  int precision() const { return s_; }
  int64_t grading_cap() const { return wcap_; }
  const Int& modulus() const { return mod_; }
  const std::map<ExponentVec, Int>& terms() const { return terms_; }

  void add_term(const ExponentVec& l, const Int& c);
  Int coeff(const ExponentVec& l) const;
  Int constant_term() const;

  bool is_zero() const { return terms_.empty(); }
  bool is_unit() const;

  ConeSeries operator-() const;
  friend ConeSeries operator+(const ConeSeries& a, const ConeSeries& b);
  friend ConeSeries operator-(const ConeSeries& a, const ConeSeries& b);
  friend ConeSeries operator*(const ConeSeries& a, const ConeSeries& b);
  ConeSeries& operator+=(const ConeSeries& b) { return *this = *this + b; }
  ConeSeries& operator-=(const ConeSeries& b) { return *this = *this - b; }
  ConeSeries& operator*=(const ConeSeries& b) { return *this = *this * b; }
  friend bool operator==(const ConeSeries& a, const ConeSeries& b);

  // Neumann inversion off the unit constant term; throws "not a unit".
  ConeSeries inverse() const;

  // v^l -> v^{p l}; keys whose grading overflows the cap are dropped.
  ConeSeries frobenius() const;

  // The derivation v_i d/dv_i: key l gets factor l_i.
  ConeSeries log_derive(int i) const;

  // Report-side truncation by the paper's weight grading.
  ConeSeries truncate_weight(int64_t M) const;
  ConeSeries reduce_precision(int s2) const;

  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  void require_same_ring(const ConeSeries& o) const;

  std::shared_ptr<const AContext> ctx_;
  int64_t p_;
  int s_;
  Int mod_;
  int64_t wcap_;
  std::map<ExponentVec, Int> terms_;
};

template <>
struct ring_traits<ConeSeries> {
  static ConeSeries zero_like(const ConeSeries& x) {
    return ConeSeries(x.context(), x.prime(), x.precision(), x.grading_cap());
  }
  static ConeSeries one_like(const ConeSeries& x) {
    ConeSeries r = zero_like(x);
    r.add_term(ExponentVec::zeros(x.context()->N()), 1);
    return r;
  }
  static bool is_zero(const ConeSeries& x) { return x.is_zero(); }
  static ConeSeries from_int(const Int& v, const ConeSeries& like) {
    ConeSeries r = zero_like(like);
    r.add_term(ExponentVec::zeros(like.context()->N()), v);
    return r;
  }
  static std::string str(const ConeSeries& x) { return x.str(); }
};

}  // namespace dwork
