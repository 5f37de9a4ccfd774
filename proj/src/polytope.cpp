#include "dworkcong/polytope.hpp"

#include <algorithm>
#include <set>

namespace dwork {

namespace {

using linalg::IMat;

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int r = 0;
  for (size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

// Is q in the convex hull of the given points? Caratheodory in dim <= 3:
// q is in the hull iff it lies in some simplex on at most dim+1 of the
// points. Containment in a simplex is an exact rational solve for
// barycentric coordinates.
bool in_hull(const std::vector<std::vector<Int>>& pts,
             const std::vector<Int>& q, int dim) {
  const int k = static_cast<int>(pts.size());
  const size_t d = q.size();
  std::vector<int> idx;
  // iterate subsets of size <= dim+1 via simple recursion
  std::vector<int> sel;
  std::function<bool(int, int)> rec = [&](int start, int need) -> bool {
    if (need == 0) {
      // solve sum_i l_i p_i = q, sum l_i = 1, l_i >= 0
      IMat a(d + 1, std::vector<Int>(sel.size()));
      std::vector<Int> b(d + 1);
      for (size_t r = 0; r < d; ++r) {
        for (size_t c = 0; c < sel.size(); ++c) a[r][c] = pts[sel[c]][r];
        b[r] = q[r];
      }
      for (size_t c = 0; c < sel.size(); ++c) a[d][c] = 1;
      b[d] = 1;
      std::vector<Rat> y;
      if (!linalg::solve_rational(a, b, y)) return false;
      // verify (free vars were zeroed, so recheck the full system)
      for (size_t r = 0; r <= d; ++r) {
        Rat acc(0);
        for (size_t c = 0; c < sel.size(); ++c) acc += Rat(a[r][c]) * y[c];
        if (acc != Rat(b[r])) return false;
      }
      for (const Rat& l : y)
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
  for (int sz = 1; sz <= dim + 1; ++sz) {
    sel.clear();
    if (rec(0, sz)) return true;
  }
  return false;
}

}  // namespace

LatticePolytope LatticePolytope::from_points(
    const std::vector<ExponentVec>& pts_in) {
  if (pts_in.empty())
    throw std::invalid_argument("LatticePolytope: empty support");
  LatticePolytope p;
  p.ambient_ = pts_in[0].arity();
  for (const auto& q : pts_in)
    if (q.arity() != p.ambient_)
      throw std::invalid_argument("LatticePolytope: mixed arities");

  std::set<ExponentVec> uniq(pts_in.begin(), pts_in.end());
  std::vector<ExponentVec> pts(uniq.begin(), uniq.end());
  p.origin_ = pts[0];  // lex-min, deterministic

  // Saturated basis of the lattice of the affine span: normals first
  // (integer kernel of the difference matrix transposed), then the span
  // lattice as the integer kernel of the normal matrix.
  const size_t n = static_cast<size_t>(p.ambient_);
  IMat diffs_t;  // rows are difference vectors
  for (size_t i = 1; i < pts.size(); ++i) {
    std::vector<Int> row(n);
    for (size_t j = 0; j < n; ++j)
      row[j] = pts[i][static_cast<int>(j)] - p.origin_[static_cast<int>(j)];
    diffs_t.push_back(std::move(row));
  }
  IMat normals;
  if (diffs_t.empty()) {
    // a single point: every direction is normal
    for (size_t i = 0; i < n; ++i) {
      std::vector<Int> e(n, 0);
      e[i] = 1;
      normals.push_back(std::move(e));
    }
  } else {
    for (auto& v : linalg::integer_kernel(diffs_t, p.ambient_))
      normals.push_back(std::move(v));
  }
  std::vector<std::vector<Int>> span_basis;
  if (normals.empty()) {
    for (size_t i = 0; i < n; ++i) {
      std::vector<Int> e(n, 0);
      e[i] = 1;
      span_basis.push_back(std::move(e));
    }
  } else {
    span_basis = linalg::integer_kernel(normals, p.ambient_);
  }
  p.basis_ = span_basis;
  p.dim_ = static_cast<int>(span_basis.size());
  if (p.dim_ > 3)
    throw std::invalid_argument("LatticePolytope: dimension > 3 unsupported");

  // span coordinates of all points
  std::vector<std::vector<Int>> ys;
  for (const auto& q : pts) {
    auto y = p.span_coords(q);
    if (!y) throw std::logic_error("LatticePolytope: span solve failed");
    ys.push_back(*y);
  }

  // extreme points
  std::vector<int> extreme;
  if (p.dim_ == 0) {
    extreme.push_back(0);
  } else {
    for (size_t i = 0; i < pts.size(); ++i) {
      std::vector<std::vector<Int>> others;
      for (size_t j = 0; j < pts.size(); ++j)
        if (j != i) others.push_back(ys[j]);
      if (!in_hull(others, ys[i], p.dim_))
        extreme.push_back(static_cast<int>(i));
    }
  }
  for (int i : extreme) {
    p.vertices_.push_back(pts[static_cast<size_t>(i)]);
    p.vertex_ycoords_.push_back(ys[static_cast<size_t>(i)]);
  }

  // facets in span coordinates
  const auto& vy = p.vertex_ycoords_;
  auto add_facet = [&](std::vector<Int> a, const Int& c) {
    linalg::make_primitive(a);
    if (a.empty()) return;
    bool zero = true;
    for (const auto& x : a)
      if (x != 0) zero = false;
    if (zero) return;
    // rescale offset consistently with the primitive normal
    // (recompute c as min over vertices to be safe)
    Int cc = dot(a, vy[0]);
    for (const auto& y : vy) cc = std::min(cc, dot(a, y));
    for (const auto& y : vy)
      if (dot(a, y) < cc) return;
    // facet only if some vertex is tight and not all are
    int tight = 0;
    for (const auto& y : vy)
      if (dot(a, y) == cc) ++tight;
    if (tight == 0 || tight == static_cast<int>(vy.size())) return;
    auto f = std::make_pair(a, cc);
    if (std::find(p.facets_.begin(), p.facets_.end(), f) == p.facets_.end())
      p.facets_.push_back(std::move(f));
    (void)c;
  };

  if (p.dim_ == 1) {
    Int lo = vy[0][0], hi = vy[0][0];
    for (const auto& y : vy) {
      lo = std::min(lo, y[0]);
      hi = std::max(hi, y[0]);
    }
    p.facets_.push_back({{Int(1)}, lo});
    p.facets_.push_back({{Int(-1)}, -hi});
  } else if (p.dim_ == 2) {
    for (size_t i = 0; i < vy.size(); ++i) {
      for (size_t j = i + 1; j < vy.size(); ++j) {
        std::vector<Int> d = {vy[j][0] - vy[i][0], vy[j][1] - vy[i][1]};
        std::vector<Int> a = {-d[1], d[0]};
        // orient inward
        Int c = dot(a, vy[i]);
        bool allge = true, allle = true;
        for (const auto& y : vy) {
          Int v = dot(a, y);
          if (v < c) allge = false;
          if (v > c) allle = false;
        }
        if (allle && !allge) {
          for (auto& x : a) x = -x;
          c = -c;
          allge = true;
        }
        if (allge) add_facet(a, c);
      }
    }
  } else if (p.dim_ == 3) {
    for (size_t i = 0; i < vy.size(); ++i) {
      for (size_t j = i + 1; j < vy.size(); ++j) {
        for (size_t k = j + 1; k < vy.size(); ++k) {
          std::vector<Int> u = {vy[j][0] - vy[i][0], vy[j][1] - vy[i][1],
                                vy[j][2] - vy[i][2]};
          std::vector<Int> v = {vy[k][0] - vy[i][0], vy[k][1] - vy[i][1],
                                vy[k][2] - vy[i][2]};
          std::vector<Int> a = {u[1] * v[2] - u[2] * v[1],
                                u[2] * v[0] - u[0] * v[2],
                                u[0] * v[1] - u[1] * v[0]};
          if (a[0] == 0 && a[1] == 0 && a[2] == 0) continue;
          Int c = dot(a, vy[i]);
          bool allge = true, allle = true;
          for (const auto& y : vy) {
            Int w = dot(a, y);
            if (w < c) allge = false;
            if (w > c) allle = false;
          }
          if (allle && !allge) {
            for (auto& x : a) x = -x;
            c = -c;
            allge = true;
          }
          if (allge && !(allge && allle)) add_facet(a, c);
        }
      }
    }
  }

  p.build_faces();
  return p;
}

std::optional<std::vector<Int>> LatticePolytope::span_coords(
    const ExponentVec& u) const {
  const size_t n = static_cast<size_t>(ambient_);
  if (dim_ == 0) {
    for (size_t j = 0; j < n; ++j)
      if (u[static_cast<int>(j)] != origin_[static_cast<int>(j)])
        return std::nullopt;
    return std::vector<Int>{};
  }
  IMat a(n, std::vector<Int>(static_cast<size_t>(dim_)));
  std::vector<Int> b(n);
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < static_cast<size_t>(dim_); ++c)
      a[r][c] = basis_[c][r];
    b[r] = u[static_cast<int>(r)] - origin_[static_cast<int>(r)];
  }
  std::vector<Rat> y;
  if (!linalg::solve_rational(a, b, y)) return std::nullopt;
  std::vector<Int> yi(y.size());
  for (size_t i = 0; i < y.size(); ++i) {
    if (denominator(y[i]) != 1) return std::nullopt;
    yi[i] = numerator(y[i]);
  }
  return yi;
}

ExponentVec LatticePolytope::from_span(const std::vector<Int>& y) const {
  ExponentVec u = origin_;
  for (size_t c = 0; c < y.size(); ++c) {
    for (int r = 0; r < ambient_; ++r) {
      Int v = Int(u[r]) + y[c] * basis_[c][static_cast<size_t>(r)];
      u[r] = static_cast<int32_t>(v);
    }
  }
  return u;
}

bool LatticePolytope::is_vertex(const ExponentVec& u) const {
  return std::find(vertices_.begin(), vertices_.end(), u) != vertices_.end();
}

bool LatticePolytope::contains(const ExponentVec& u) const {
  auto y = span_coords(u);
  if (!y) return false;
  for (const auto& [a, c] : facets_)
    if (dot(a, *y) < c) return false;
  return true;
}

bool LatticePolytope::strictly_contains(const ExponentVec& u) const {
  auto y = span_coords(u);
  if (!y) return false;
  if (dim_ == 0) return true;  // relative interior of a point
  for (const auto& [a, c] : facets_)
    if (dot(a, *y) <= c) return false;
  return true;
}

std::vector<ExponentVec> LatticePolytope::lattice_points() const {
  std::vector<ExponentVec> out;
  if (dim_ == 0) {
    out.push_back(origin_);
    return out;
  }
  std::vector<Int> lo(static_cast<size_t>(dim_)), hi(static_cast<size_t>(dim_));
  for (size_t c = 0; c < static_cast<size_t>(dim_); ++c) {
    lo[c] = vertex_ycoords_[0][c];
    hi[c] = vertex_ycoords_[0][c];
    for (const auto& y : vertex_ycoords_) {
      lo[c] = std::min(lo[c], y[c]);
      hi[c] = std::max(hi[c], y[c]);
    }
  }
  std::vector<Int> y(static_cast<size_t>(dim_));
  std::function<void(int)> scan = [&](int c) {
    if (c == dim_) {
      for (const auto& [a, off] : facets_)
        if (dot(a, y) < off) return;
      out.push_back(from_span(y));
      return;
    }
    for (Int v = lo[static_cast<size_t>(c)]; v <= hi[static_cast<size_t>(c)];
         ++v) {
      y[static_cast<size_t>(c)] = v;
      scan(c + 1);
    }
  };
  scan(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ExponentVec> LatticePolytope::interior_lattice_points() const {
  std::vector<ExponentVec> out;
  for (const auto& u : lattice_points())
    if (strictly_contains(u)) out.push_back(u);
  return out;
}

void LatticePolytope::build_faces() {
  faces_.clear();
  if (dim_ == 0) return;
  auto pts = lattice_points();
  std::vector<std::vector<Int>> ys;
  for (const auto& q : pts) ys.push_back(*span_coords(q));

  // point sets of faces: start from facets, close under intersection
  std::set<std::vector<size_t>> face_sets;
  for (const auto& [a, c] : facets_) {
    std::vector<size_t> s;
    for (size_t i = 0; i < pts.size(); ++i)
      if (dot(a, ys[i]) == c) s.push_back(i);
    if (!s.empty()) face_sets.insert(s);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<size_t>> cur(face_sets.begin(), face_sets.end());
    for (size_t i = 0; i < cur.size(); ++i) {
      for (size_t j = i + 1; j < cur.size(); ++j) {
        std::vector<size_t> inter;
        std::set_intersection(cur[i].begin(), cur[i].end(), cur[j].begin(),
                              cur[j].end(), std::back_inserter(inter));
        if (!inter.empty() && face_sets.insert(inter).second) grew = true;
      }
    }
  }

  for (const auto& s : face_sets) {
    Face f;
    std::vector<ExponentVec> fpts;
    for (size_t i : s) fpts.push_back(pts[i]);
    f.points = fpts;
    for (size_t vi = 0; vi < vertices_.size(); ++vi) {
      if (std::find(fpts.begin(), fpts.end(), vertices_[vi]) != fpts.end())
        f.vertex_indices.push_back(static_cast<int>(vi));
    }
    // dimension of the face from the rank of point differences
    if (fpts.size() <= 1) {
      f.dim = 0;
    } else {
      linalg::IMat d;
      for (size_t i = 1; i < fpts.size(); ++i) {
        std::vector<Int> row(static_cast<size_t>(ambient_));
        for (int j = 0; j < ambient_; ++j) row[static_cast<size_t>(j)] =
            Int(fpts[i][j]) - Int(fpts[0][j]);
        d.push_back(std::move(row));
      }
      f.dim = linalg::rational_rank(d);
    }
    faces_.push_back(std::move(f));
  }
}

OpenSubset OpenSubset::whole(const LatticePolytope& p) {
  OpenSubset s;
  s.polytope_ = p;
  s.points_ = p.lattice_points();
  s.desc_ = "all";
  return s;
}

OpenSubset OpenSubset::interior(const LatticePolytope& p) {
  OpenSubset s;
  s.polytope_ = p;
  s.points_ = p.interior_lattice_points();
  s.desc_ = "interior";
  return s;
}

std::string MuSpec::str() const {
  switch (kind) {
    case kAll:
      return "all";
    case kInterior:
      return "interior";
    default: {
      std::string s = "remove";
      for (const auto& f : faces) {
        s += " [";
        for (size_t i = 0; i < f.size(); ++i)
          s += (i ? "," : "") + std::to_string(f[i]);
        s += "]";
      }
      return s;
    }
  }
}

OpenSubset make_open_subset(const LatticePolytope& p, const MuSpec& mu) {
  switch (mu.kind) {
    case MuSpec::kAll:
      return OpenSubset::whole(p);
    case MuSpec::kInterior:
      return OpenSubset::interior(p);
    default:
      return OpenSubset::remove_faces(p, mu.faces);
  }
}

OpenSubset OpenSubset::remove_faces(
    const LatticePolytope& p, const std::vector<std::vector<int>>& faces) {
  std::set<ExponentVec> removed;
  for (auto want : faces) {
    std::sort(want.begin(), want.end());
    bool found = false;
    for (const auto& f : p.proper_faces()) {
      if (f.vertex_indices == want) {
        removed.insert(f.points.begin(), f.points.end());
        found = true;
        break;
      }
    }
    if (!found)
      throw std::invalid_argument(
          "OpenSubset: not open (listed set is not a face)");
  }
  OpenSubset s;
  s.polytope_ = p;
  for (const auto& u : p.lattice_points())
    if (!removed.count(u)) s.points_.push_back(u);
  s.desc_ = "custom";
  return s;
}

}  // namespace dwork
