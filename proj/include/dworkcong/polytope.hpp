#pragma once

// Lattice geometry of Newton polytopes in (affine) dimension <= 3:
// vertices, facets, faces, lattice points, relative-interior points, and
// open subsets mu whose complement is a union of faces.
//
// Lower-dimensional polytopes (a segment in R^2 and so on) are handled by
// working in the saturated lattice of their affine span; "interior" always
// means relative interior. All orderings are lexicographic.

#include <optional>
#include <vector>

#include "dworkcong/exponent.hpp"
#include "dworkcong/intlinalg.hpp"
#include "dworkcong/laurent.hpp"

namespace dwork {

class LatticePolytope {
 public:
  // Convex hull of the given points. Throws "empty support" when empty.
  static LatticePolytope from_points(const std::vector<ExponentVec>& pts);

  int ambient_arity() const { return ambient_; }
  // Affine dimension (0 for a point).
  int dim() const { return dim_; }

  const std::vector<ExponentVec>& vertices() const { return vertices_; }
  bool is_vertex(const ExponentVec& u) const;

  bool contains(const ExponentVec& u) const;
  bool strictly_contains(const ExponentVec& u) const;

  std::vector<ExponentVec> lattice_points() const;
  std::vector<ExponentVec> interior_lattice_points() const;

  struct Face {
    std::vector<int> vertex_indices;       // into vertices(), sorted
    std::vector<ExponentVec> points;       // lattice points on the face
    int dim;
  };
  // All nonempty proper faces (facets, edges, vertices).
  const std::vector<Face>& proper_faces() const { return faces_; }

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
    return a.vertices_ == b.vertices_;
  }

 private:
  LatticePolytope() = default;
  std::optional<std::vector<Int>> span_coords(const ExponentVec& u) const;
  ExponentVec from_span(const std::vector<Int>& y) const;
  void build_faces();

  int ambient_ = 0;
  int dim_ = 0;
  ExponentVec origin_;
  // columns of the span-lattice basis, each an ambient integer vector
  std::vector<std::vector<Int>> basis_;
  std::vector<ExponentVec> vertices_;           // lex sorted
  std::vector<std::vector<Int>> vertex_ycoords_;  // parallel to vertices_
  // facet inequalities <a, y> >= c in span coordinates
  std::vector<std::pair<std::vector<Int>, Int>> facets_;
  std::vector<Face> faces_;
};

// An open subset mu of a polytope: the complement is a union of faces.
class OpenSubset {
 public:
  static OpenSubset whole(const LatticePolytope& p);
  static OpenSubset interior(const LatticePolytope& p);
  // Faces are given as lists of vertex indices (into p.vertices()); every
  // list must name an actual face, otherwise throws "not open".
  static OpenSubset remove_faces(const LatticePolytope& p,
                                 const std::vector<std::vector<int>>& faces);

  const LatticePolytope& polytope() const { return polytope_; }
  // mu_Z in lexicographic order; this fixes matrix row/column indexing.
  const std::vector<ExponentVec>& points() const { return points_; }
  const std::string& description() const { return desc_; }

 private:
  LatticePolytope polytope_ = LatticePolytope::from_points(
      {ExponentVec::zeros(1)});
  std::vector<ExponentVec> points_;
  std::string desc_;
};

// How to pick the open subset mu: everything, the relative interior, or
// the complement of an explicit list of faces (by vertex indices).
struct MuSpec {
  enum Kind { kAll, kInterior, kFaces } kind = kAll;
  std::vector<std::vector<int>> faces;

  static MuSpec all() { return {kAll, {}}; }
  static MuSpec interior() { return {kInterior, {}}; }
  static MuSpec remove(std::vector<std::vector<int>> f) {
    return {kFaces, std::move(f)};
  }
  std::string str() const;
};

OpenSubset make_open_subset(const LatticePolytope& p, const MuSpec& mu);

// Newton polytope of a nonzero Laurent polynomial.
template <class R>
LatticePolytope newton_polytope(const LaurentPoly<R>& f) {
  if (f.is_zero())
    throw std::invalid_argument("newton_polytope: empty support");
  std::vector<ExponentVec> pts;
  for (const auto& [e, c] : f.terms()) pts.push_back(e);
  return LatticePolytope::from_points(pts);
}

}  // namespace dwork
