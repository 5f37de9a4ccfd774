#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "dworkcong/polytope.hpp"

using namespace dwork;

namespace {

std::vector<ExponentVec> brute_scan_triangle() {
  // independent oracle: scan the bounding box of hull{(0,2),(1,0),(3,0)}
  // using the three edge inequalities derived by hand:
  //   y >= 0;  2x + y >= 2  (edge (0,2)-(1,0));  2x + 3y <= 6 (edge (0,2)-(3,0))
  std::vector<ExponentVec> out;
  for (int32_t x = 0; x <= 3; ++x)
    for (int32_t y = 0; y <= 2; ++y)
      if (y >= 0 && 2 * x + y >= 2 && 2 * x + 3 * y <= 6)
        out.push_back(ExponentVec{x, y});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("segment [-1,1]") {
  auto p = LatticePolytope::from_points({ExponentVec{-1}, ExponentVec{1}});
  CHECK(p.dim() == 1);
  CHECK(p.lattice_points() ==
        std::vector<ExponentVec>{ExponentVec{-1}, ExponentVec{0},
                                 ExponentVec{1}});
  CHECK(p.interior_lattice_points() == std::vector<ExponentVec>{ExponentVec{0}});
  CHECK(p.vertices() ==
        std::vector<ExponentVec>{ExponentVec{-1}, ExponentVec{1}});
  CHECK(p.is_vertex(ExponentVec{1}));
  CHECK(!p.is_vertex(ExponentVec{0}));
}

TEST_CASE("triangle hull{(0,2),(1,0),(3,0)}") {
  auto p = LatticePolytope::from_points(
      {ExponentVec{0, 2}, ExponentVec{1, 0}, ExponentVec{3, 0},
       ExponentVec{2, 0}, ExponentVec{1, 1}});
  CHECK(p.vertices() ==
        std::vector<ExponentVec>{ExponentVec{0, 2}, ExponentVec{1, 0},
                                 ExponentVec{3, 0}});
  auto pts = p.lattice_points();
  CHECK(pts == brute_scan_triangle());
  CHECK(std::find(pts.begin(), pts.end(), ExponentVec{1, 1}) != pts.end());
  CHECK(p.interior_lattice_points() ==
        std::vector<ExponentVec>{ExponentVec{1, 1}});
}

TEST_CASE("square and unit segment") {
  auto sq = LatticePolytope::from_points(
      {ExponentVec{1, 1}, ExponentVec{1, -1}, ExponentVec{-1, 1},
       ExponentVec{-1, -1}});
  CHECK(sq.interior_lattice_points() ==
        std::vector<ExponentVec>{ExponentVec{0, 0}});
  CHECK(sq.lattice_points().size() == 9);

  auto seg = LatticePolytope::from_points({ExponentVec{0}, ExponentVec{1}});
  CHECK(seg.interior_lattice_points().empty());

  auto pt = LatticePolytope::from_points({ExponentVec{0}});
  CHECK(pt.lattice_points() == std::vector<ExponentVec>{ExponentVec{0}});
  CHECK(pt.dim() == 0);
}

TEST_CASE("lower-dimensional polytopes live in their affine lattice") {
  // segment from (0,0) to (2,2): lattice points include (1,1)
  auto p = LatticePolytope::from_points({ExponentVec{0, 0}, ExponentVec{2, 2}});
  CHECK(p.dim() == 1);
  CHECK(p.lattice_points() ==
        std::vector<ExponentVec>{ExponentVec{0, 0}, ExponentVec{1, 1},
                                 ExponentVec{2, 2}});
  CHECK(p.interior_lattice_points() ==
        std::vector<ExponentVec>{ExponentVec{1, 1}});
  // (1,0) is not in the affine span
  CHECK(!p.contains(ExponentVec{1, 0}));
}

TEST_CASE("dimension 3") {
  auto simplex = LatticePolytope::from_points(
      {ExponentVec{0, 0, 0}, ExponentVec{1, 0, 0}, ExponentVec{0, 1, 0},
       ExponentVec{0, 0, 1}});
  CHECK(simplex.dim() == 3);
  CHECK(simplex.lattice_points().size() == 4);
  CHECK(simplex.interior_lattice_points().empty());

  auto scaled = LatticePolytope::from_points(
      {ExponentVec{0, 0, 0}, ExponentVec{4, 0, 0}, ExponentVec{0, 4, 0},
       ExponentVec{0, 0, 4}});
  auto inter = scaled.interior_lattice_points();
  CHECK(std::find(inter.begin(), inter.end(), ExponentVec{1, 1, 1}) !=
        inter.end());
  // every returned point re-verifies strictly / non-strictly
  for (const auto& u : scaled.lattice_points()) CHECK(scaled.contains(u));
  for (const auto& u : inter) CHECK(scaled.strictly_contains(u));
}

TEST_CASE("open subsets") {
  auto seg = LatticePolytope::from_points({ExponentVec{-1}, ExponentVec{1}});
  auto whole = OpenSubset::whole(seg);
  CHECK(whole.points().size() == 3);
  auto inter = OpenSubset::interior(seg);
  CHECK(inter.points() == std::vector<ExponentVec>{ExponentVec{0}});

  // removing only the vertex {-1} keeps [0, 1]
  auto sub = OpenSubset::remove_faces(seg, {{0}});
  CHECK(sub.points() ==
        std::vector<ExponentVec>{ExponentVec{0}, ExponentVec{1}});

  // a non-face vertex set is rejected
  CHECK_THROWS_AS(OpenSubset::remove_faces(seg, {{0, 1}}),
                  std::invalid_argument);

  auto sq = LatticePolytope::from_points(
      {ExponentVec{1, 1}, ExponentVec{1, -1}, ExponentVec{-1, 1},
       ExponentVec{-1, -1}});
  CHECK(OpenSubset::interior(sq).points() ==
        std::vector<ExponentVec>{ExponentVec{0, 0}});
  // removing all proper faces recovers the interior
  std::vector<std::vector<int>> all_faces;
  for (const auto& f : sq.proper_faces()) all_faces.push_back(f.vertex_indices);
  CHECK(OpenSubset::remove_faces(sq, all_faces).points() ==
        OpenSubset::interior(sq).points());
}

TEST_CASE("hull of hull is idempotent on random 2d supports") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int32_t> d(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<ExponentVec> pts;
    int n = 3 + static_cast<int>(rng() % 7);
    for (int i = 0; i < n; ++i) pts.push_back(ExponentVec{d(rng), d(rng)});
    auto h1 = LatticePolytope::from_points(pts);
    auto h2 = LatticePolytope::from_points(h1.vertices());
    CHECK(h1.vertices() == h2.vertices());
    CHECK(h1.lattice_points() == h2.lattice_points());
    // interior points are lattice points
    auto lp = h1.lattice_points();
    for (const auto& u : h1.interior_lattice_points())
      CHECK(std::find(lp.begin(), lp.end(), u) != lp.end());
  }
}
