#include "dworkcong/cone.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace dwork {

namespace {

using linalg::IMat;

Int idot(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int r = 0;
  for (size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

}  // namespace

AContext::AContext(AConfig cfg) : cfg_(std::move(cfg)) {
  N_ = static_cast<int>(cfg_.exponents.size());
  if (N_ < 1) throw std::invalid_argument("AContext: empty exponent list");
  n_ = cfg_.exponents[0].arity();
  for (const auto& a : cfg_.exponents)
    if (a.arity() != n_) throw std::invalid_argument("AContext: mixed arities");
  if (N_ > ExponentVec::kMaxArity)
    throw std::invalid_argument("AContext: N too large");

  a_tilde_.assign(static_cast<size_t>(n_) + 1,
                  std::vector<Int>(static_cast<size_t>(N_)));
  for (int j = 0; j < N_; ++j) {
    a_tilde_[0][static_cast<size_t>(j)] = 1;
    for (int r = 0; r < n_; ++r)
      a_tilde_[static_cast<size_t>(r) + 1][static_cast<size_t>(j)] =
          cfg_.exponents[static_cast<size_t>(j)][r];
  }

  basis_ = linalg::integer_kernel(a_tilde_, N_);
  d_ = static_cast<int>(basis_.size());

  if (d_ > 0) {
    // rational left inverse of the N x d basis matrix
    IMat btb(static_cast<size_t>(d_), std::vector<Int>(static_cast<size_t>(d_)));
    for (int i = 0; i < d_; ++i)
      for (int j = 0; j < d_; ++j)
        btb[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            idot(basis_[static_cast<size_t>(i)], basis_[static_cast<size_t>(j)]);
    // invert btb over Q by solving btb * x = e_k
    std::vector<std::vector<Rat>> inv(static_cast<size_t>(d_),
                                      std::vector<Rat>(static_cast<size_t>(d_)));
    for (int k = 0; k < d_; ++k) {
      std::vector<Int> e(static_cast<size_t>(d_), 0);
      e[static_cast<size_t>(k)] = 1;
      std::vector<Rat> x;
      if (!linalg::solve_rational(btb, e, x))
        throw std::logic_error("AContext: basis Gram matrix singular");
      for (int i = 0; i < d_; ++i)
        inv[static_cast<size_t>(i)][static_cast<size_t>(k)] =
            x[static_cast<size_t>(i)];
    }
    // linv = inv(BtB) * Bt, as integer matrix over a common denominator
    std::vector<std::vector<Rat>> lq(static_cast<size_t>(d_),
                                     std::vector<Rat>(static_cast<size_t>(N_)));
    Int den = 1;
    for (int i = 0; i < d_; ++i) {
      for (int r = 0; r < N_; ++r) {
        Rat acc(0);
        for (int j = 0; j < d_; ++j)
          acc += inv[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                 Rat(basis_[static_cast<size_t>(j)][static_cast<size_t>(r)]);
        lq[static_cast<size_t>(i)][static_cast<size_t>(r)] = acc;
        den = lcm(den, denominator(acc));
      }
    }
    linv_den_ = den;
    linv_.assign(static_cast<size_t>(d_),
                 std::vector<Int>(static_cast<size_t>(N_)));
    for (int i = 0; i < d_; ++i)
      for (int r = 0; r < N_; ++r)
        linv_[static_cast<size_t>(i)][static_cast<size_t>(r)] =
            numerator(lq[static_cast<size_t>(i)][static_cast<size_t>(r)]) *
            (den / denominator(lq[static_cast<size_t>(i)][static_cast<size_t>(r)]));
  }

  // rays of each L_i, then the pooled generating set of L°
  li_rays_.resize(static_cast<size_t>(N_));
  std::set<std::vector<Int>> pooled;
  for (int i = 0; i < N_; ++i) {
    auto ys = rays_in_y(i);
    for (const auto& y : ys) {
      std::vector<Int> l(static_cast<size_t>(N_), 0);
      for (int r = 0; r < N_; ++r)
        for (int j = 0; j < d_; ++j)
          l[static_cast<size_t>(r)] +=
              y[static_cast<size_t>(j)] * basis_[static_cast<size_t>(j)][static_cast<size_t>(r)];
      std::vector<int32_t> li(static_cast<size_t>(N_));
      for (int r = 0; r < N_; ++r)
        li[static_cast<size_t>(r)] =
            static_cast<int32_t>(l[static_cast<size_t>(r)]);
      li_rays_[static_cast<size_t>(i)].push_back(ExponentVec(li));
      pooled.insert(y);
    }
  }
  for (const auto& y : pooled) {
    cone_rays_y_.push_back(y);
    std::vector<int32_t> li(static_cast<size_t>(N_));
    for (int r = 0; r < N_; ++r) {
      Int v = 0;
      for (int j = 0; j < d_; ++j)
        v += y[static_cast<size_t>(j)] *
             basis_[static_cast<size_t>(j)][static_cast<size_t>(r)];
      li[static_cast<size_t>(r)] = static_cast<int32_t>(v);
    }
    cone_rays_.push_back(ExponentVec(li));
  }

  // grading functional: small integer vector positive on every pooled ray
  w_y_.assign(static_cast<size_t>(d_), 0);
  if (!cone_rays_y_.empty()) {
    bool found = false;
    for (int radius = 1; radius <= 60 && !found; ++radius) {
      std::vector<Int> w(static_cast<size_t>(d_), 0);
      std::function<bool(int)> rec = [&](int pos) -> bool {
        if (pos == d_) {
          for (const auto& g : cone_rays_y_)
            if (idot(w, g) < 1) return false;
          return true;
        }
        for (int v = -radius; v <= radius; ++v) {
          w[static_cast<size_t>(pos)] = v;
          if (rec(pos + 1)) return true;
        }
        return false;
      };
      if (rec(0)) {
        w_y_ = w;
        found = true;
      }
    }
    // A missing functional means the pooled cone is not pointed (possible
    // with repeated columns); kernel queries still work, series rings do not.
    pointed_ = found;
    if (!found) w_y_.assign(static_cast<size_t>(d_), 0);
  }
  // pull back to Z^N: w(l) = (w_y . linv l) / linv_den
  w_l_.assign(static_cast<size_t>(N_), 0);
  for (int r = 0; r < N_; ++r)
    for (int j = 0; j < d_; ++j)
      w_l_[static_cast<size_t>(r)] +=
          w_y_[static_cast<size_t>(j)] * linv_[static_cast<size_t>(j)][static_cast<size_t>(r)];
  w_den_ = linv_den_;
}

bool AContext::in_kernel(const ExponentVec& l) const {
  if (l.arity() != N_) return false;
  for (const auto& row : a_tilde_) {
    Int acc = 0;
    for (int r = 0; r < N_; ++r) acc += row[static_cast<size_t>(r)] * l[r];
    if (acc != 0) return false;
  }
  return true;
}

std::optional<std::vector<Int>> AContext::kernel_coords(
    const ExponentVec& l) const {
  if (!in_kernel(l)) return std::nullopt;
  std::vector<Int> y(static_cast<size_t>(d_), 0);
  for (int j = 0; j < d_; ++j) {
    Int acc = 0;
    for (int r = 0; r < N_; ++r)
      acc += linv_[static_cast<size_t>(j)][static_cast<size_t>(r)] * l[r];
    if (acc % linv_den_ != 0) return std::nullopt;
    y[static_cast<size_t>(j)] = acc / linv_den_;
  }
  return y;
}

int64_t AContext::weight(const ExponentVec& l) {
  int64_t w = 0;
  for (int r = 0; r < l.arity(); ++r)
    if (l[r] > 0) w += l[r];
  return w;
}

int64_t AContext::grading(const ExponentVec& l) const {
  Int acc = 0;
  for (int r = 0; r < N_; ++r) acc += w_l_[static_cast<size_t>(r)] * l[r];
  if (acc % w_den_ != 0)
    throw std::invalid_argument("AContext::grading: key not in kernel lattice");
  return static_cast<int64_t>(acc / w_den_);
}

std::vector<std::vector<Int>> AContext::rays_in_y(int i) const {
  std::vector<std::vector<Int>> rays;
  if (d_ == 0) return rays;
  // constraint rows: (B y)_r >= 0 for r != i
  IMat c;
  for (int r = 0; r < N_; ++r) {
    if (r == i) continue;
    std::vector<Int> row(static_cast<size_t>(d_));
    for (int j = 0; j < d_; ++j)
      row[static_cast<size_t>(j)] =
          basis_[static_cast<size_t>(j)][static_cast<size_t>(r)];
    c.push_back(std::move(row));
  }
  auto feasible = [&](const std::vector<Int>& y) {
    for (const auto& row : c)
      if (idot(row, y) < 0) return false;
    return true;
  };
  auto push_ray = [&](std::vector<Int> g) {
    linalg::make_primitive(g);
    bool zero = std::all_of(g.begin(), g.end(),
                            [](const Int& x) { return x == 0; });
    if (zero) return;
    std::vector<Int> neg(g.size());
    for (size_t k = 0; k < g.size(); ++k) neg[k] = -g[k];
    for (const auto& cand : {g, neg}) {
      if (feasible(cand) &&
          std::find(rays.begin(), rays.end(), cand) == rays.end()) {
        rays.push_back(cand);
      }
    }
  };
  if (d_ == 1) {
    push_ray({Int(1)});
    return rays;
  }
  // active sets of size d-1 among the constraints
  const int nc = static_cast<int>(c.size());
  std::vector<int> sel;
  std::function<void(int, int)> rec = [&](int start, int need) {
    if (need == 0) {
      IMat sub;
      for (int k : sel) sub.push_back(c[static_cast<size_t>(k)]);
      auto ker = linalg::integer_kernel(sub, d_);
      if (ker.size() == 1) push_ray(ker[0]);
      return;
    }
    for (int k = start; k < nc; ++k) {
      sel.push_back(k);
      rec(k + 1, need - 1);
      sel.pop_back();
    }
  };
  rec(0, d_ - 1);
  return rays;
}

bool AContext::y_in_cone(const std::vector<Int>& y) const {
  bool zero = std::all_of(y.begin(), y.end(),
                          [](const Int& x) { return x == 0; });
  if (zero) return true;
  if (cone_rays_y_.empty()) return false;
  const int k = static_cast<int>(cone_rays_y_.size());
  // Caratheodory: y is in the cone iff it is a nonnegative combination of
  // at most d linearly independent rays
  std::vector<int> sel;
  std::function<bool(int, int)> rec = [&](int start, int need) -> bool {
    if (need == 0) {
      IMat a(static_cast<size_t>(d_), std::vector<Int>(sel.size()));
      for (int r = 0; r < d_; ++r)
        for (size_t ci = 0; ci < sel.size(); ++ci)
          a[static_cast<size_t>(r)][ci] =
              cone_rays_y_[static_cast<size_t>(sel[ci])][static_cast<size_t>(r)];
      std::vector<Rat> lam;
      if (!linalg::solve_rational(a, y, lam)) return false;
      for (size_t r = 0; r < static_cast<size_t>(d_); ++r) {
        Rat acc(0);
        for (size_t ci = 0; ci < sel.size(); ++ci)
          acc += Rat(a[r][ci]) * lam[ci];
        if (acc != Rat(y[r])) return false;
      }
      for (const auto& l : lam)
        if (l < 0) return false;
      return true;
    }
    for (int i = start; i < k; ++i) {
      sel.push_back(i);
      if (rec(i + 1, need - 1)) return true;
      sel.pop_back();
    }
    return false;
  };
  for (int sz = 1; sz <= std::max(1, d_); ++sz) {
    sel.clear();
    if (rec(0, sz)) return true;
  }
  return false;
}

bool AContext::in_cone(const ExponentVec& l) const {
  auto y = kernel_coords(l);
  if (!y) return false;
  return y_in_cone(*y);
}

std::vector<ExponentVec> AContext::cone_points_up_to_weight(int64_t M) const {
  std::vector<ExponentVec> out;
  out.push_back(ExponentVec::zeros(N_));
  if (d_ == 0 || cone_rays_y_.empty() || M <= 0) return out;
  // box bounds: |y_j| <= sum_r |linv[j][r]| / den * (2M) since |l|_1 <= 2M
  std::vector<int64_t> bound(static_cast<size_t>(d_));
  for (int j = 0; j < d_; ++j) {
    Int s = 0;
    for (int r = 0; r < N_; ++r)
      s += abs(linv_[static_cast<size_t>(j)][static_cast<size_t>(r)]);
    Int b = (s * 2 * M) / linv_den_ + 1;
    bound[static_cast<size_t>(j)] = static_cast<int64_t>(b);
  }
  std::vector<Int> y(static_cast<size_t>(d_));
  std::function<void(int)> scan = [&](int j) {
    if (j == d_) {
      bool zero = std::all_of(y.begin(), y.end(),
                              [](const Int& v) { return v == 0; });
      if (zero) return;
      std::vector<int32_t> l(static_cast<size_t>(N_));
      for (int r = 0; r < N_; ++r) {
        Int v = 0;
        for (int jj = 0; jj < d_; ++jj)
          v += y[static_cast<size_t>(jj)] *
               basis_[static_cast<size_t>(jj)][static_cast<size_t>(r)];
        l[static_cast<size_t>(r)] = static_cast<int32_t>(v);
      }
      ExponentVec lv(l);
      if (weight(lv) > M) return;
      if (!y_in_cone(y)) return;
      out.push_back(lv);
      return;
    }
    for (int64_t v = -bound[static_cast<size_t>(j)];
         v <= bound[static_cast<size_t>(j)]; ++v) {
      y[static_cast<size_t>(j)] = v;
      scan(j + 1);
    }
  };
  scan(0);
  std::sort(out.begin(), out.end());
  return out;
}

int64_t AContext::grading_cap_for_weight(int64_t M) const {
  int64_t cap = 0;
  for (const auto& l : cone_points_up_to_weight(M))
    cap = std::max(cap, grading(l));
  return cap;
}

ConeSeries::ConeSeries(std::shared_ptr<const AContext> ctx, int64_t p, int s,
                       int64_t grading_cap)
    : ctx_(std::move(ctx)), p_(p), s_(s), wcap_(grading_cap) {
  if (!ctx_) throw std::invalid_argument("ConeSeries: null context");
  if (!ctx_->cone_is_pointed())
    throw std::domain_error(
        "ConeSeries: the cone L° is not pointed for this configuration");
  if (!is_prime(p)) throw std::invalid_argument("ConeSeries: p must be prime");
  if (s < 1) throw std::invalid_argument("ConeSeries: s must be >= 1");
  mod_ = pow_int(Int(p), static_cast<unsigned>(s));
}

void ConeSeries::add_term(const ExponentVec& l, const Int& c) {
  if (!ctx_->in_kernel(l))
    throw std::invalid_argument(
        "ConeSeries: key not in the kernel lattice: " + l.str());
  if (ctx_->grading(l) > wcap_) return;  // beyond truncation
  Int v = c % mod_;
  if (v < 0) v += mod_;
  auto it = terms_.find(l);
  if (it == terms_.end()) {
    if (v != 0) terms_.emplace(l, v);
  } else {
    it->second = (it->second + v) % mod_;
    if (it->second == 0) terms_.erase(it);
  }
}

Int ConeSeries::coeff(const ExponentVec& l) const {
  auto it = terms_.find(l);
  return it == terms_.end() ? Int(0) : it->second;
}

Int ConeSeries::constant_term() const {
  return coeff(ExponentVec::zeros(ctx_->N()));
}

bool ConeSeries::is_unit() const { return constant_term() % p_ != 0; }

void ConeSeries::require_same_ring(const ConeSeries& o) const {
  if (ctx_ != o.ctx_ || p_ != o.p_ || s_ != o.s_ || wcap_ != o.wcap_)
    throw std::invalid_argument("ConeSeries: mixed rings");
}

ConeSeries ConeSeries::operator-() const {
  ConeSeries r(ctx_, p_, s_, wcap_);
  for (const auto& [l, c] : terms_) r.terms_.emplace(l, mod_ - c);
  return r;
}

ConeSeries operator+(const ConeSeries& a, const ConeSeries& b) {
  a.require_same_ring(b);
  ConeSeries r = a;
  for (const auto& [l, c] : b.terms_) {
    auto it = r.terms_.find(l);
    if (it == r.terms_.end()) {
      r.terms_.emplace(l, c);
    } else {
      it->second = (it->second + c) % r.mod_;
      if (it->second == 0) r.terms_.erase(it);
    }
  }
  return r;
}

ConeSeries operator-(const ConeSeries& a, const ConeSeries& b) {
  return a + (-b);
}

ConeSeries operator*(const ConeSeries& a, const ConeSeries& b) {
  a.require_same_ring(b);
  ConeSeries r(a.ctx_, a.p_, a.s_, a.wcap_);
  for (const auto& [l1, c1] : a.terms_) {
    int64_t w1 = a.ctx_->grading(l1);
    for (const auto& [l2, c2] : b.terms_) {
      if (w1 + b.ctx_->grading(l2) > r.wcap_) continue;
      ExponentVec l = l1 + l2;
      Int v = (c1 * c2) % r.mod_;
      auto it = r.terms_.find(l);
      if (it == r.terms_.end()) {
        if (v != 0) r.terms_.emplace(l, v);
      } else {
        it->second = (it->second + v) % r.mod_;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

bool operator==(const ConeSeries& a, const ConeSeries& b) {
  return a.ctx_ == b.ctx_ && a.p_ == b.p_ && a.s_ == b.s_ &&
         a.wcap_ == b.wcap_ && a.terms_ == b.terms_;
}

ConeSeries ConeSeries::inverse() const {
  if (!is_unit()) throw std::domain_error("ConeSeries: not a unit");
  Int x, y;
  ext_gcd(constant_term(), mod_, x, y);
  Int c0i = x % mod_;
  if (c0i < 0) c0i += mod_;
  // *this = c0 (1 + n) with n of positive grading; inverse by Neumann
  ConeSeries n(ctx_, p_, s_, wcap_);
  for (const auto& [l, c] : terms_) {
    if (l.is_zero()) continue;
    n.add_term(l, c * c0i);
  }
  ConeSeries acc = ring_traits<ConeSeries>::one_like(*this);
  ConeSeries term = acc;
  ConeSeries negn = -n;
  for (int64_t k = 0; k < wcap_; ++k) {
    term = term * negn;
    if (term.is_zero()) break;
    acc += term;
  }
  ConeSeries r(ctx_, p_, s_, wcap_);
  for (const auto& [l, c] : acc.terms_) r.add_term(l, c * c0i);
  return r;
}

ConeSeries ConeSeries::frobenius() const {
  ConeSeries r(ctx_, p_, s_, wcap_);
  for (const auto& [l, c] : terms_) {
    ExponentVec lp = l.scaled(static_cast<int32_t>(p_));
    if (ctx_->grading(lp) > wcap_) continue;
    r.terms_.emplace(lp, c);
  }
  return r;
}

ConeSeries ConeSeries::log_derive(int i) const {
  ConeSeries r(ctx_, p_, s_, wcap_);
  for (const auto& [l, c] : terms_) {
    Int v = (Int(l[i]) * c) % mod_;
    if (v < 0) v += mod_;
    if (v != 0) r.terms_.emplace(l, v);
  }
  return r;
}

ConeSeries ConeSeries::truncate_weight(int64_t M) const {
  ConeSeries r(ctx_, p_, s_, wcap_);
  for (const auto& [l, c] : terms_)
    if (AContext::weight(l) <= M) r.terms_.emplace(l, c);
  return r;
}

ConeSeries ConeSeries::reduce_precision(int s2) const {
  ConeSeries r(ctx_, p_, s2, wcap_);
  for (const auto& [l, c] : terms_) r.add_term(l, c);
  return r;
}

std::string ConeSeries::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::vector<std::string> nm = names;
  if (nm.empty())
    for (int i = 0; i < ctx_->N(); ++i)
      nm.push_back("v" + std::to_string(i + 1));
  std::string s;
  for (const auto& [l, c] : terms_) {
    if (!s.empty()) s += " + ";
    std::string ms = l.monomial_str(nm);
    if (ms == "1")
      s += c.str();
    else
      s += (c == 1 ? "" : c.str() + "*") + ms;
  }
  return s;
}

}  // namespace dwork
