#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dworkcong/hwdwork.hpp"
#include "dworkcong/laurent.hpp"
#include "dworkcong/polytope.hpp"

using namespace dwork;

namespace {

LaurentPoly<Int> xpow1d() {  // x + 1/x
  LaurentPoly<Int> f(1, Int(0));
  f.add_term(ExponentVec{1}, 1);
  f.add_term(ExponentVec{-1}, 1);
  return f;
}

LaurentPoly<Int> random_poly(std::mt19937& rng, int arity, int nterms,
                             int espan, int cspan) {
  LaurentPoly<Int> f(arity, Int(0));
  std::uniform_int_distribution<int> de(-espan, espan), dc(-cspan, cspan);
  for (int t = 0; t < nterms; ++t) {
    std::vector<int32_t> e;
    for (int i = 0; i < arity; ++i) e.push_back(de(rng));
    f.add_term(ExponentVec(e), dc(rng));
  }
  return f;
}

}  // namespace

TEST_CASE("basic multiplication") {
  auto f = xpow1d();
  auto sq = f * f;
  CHECK(sq.coeff(ExponentVec{2}) == 1);
  CHECK(sq.coeff(ExponentVec{0}) == 2);
  CHECK(sq.coeff(ExponentVec{-2}) == 1);
  CHECK(sq.size() == 3);

  auto zero = ring_traits<LaurentPoly<Int>>::zero_like(f);
  CHECK((f * zero).is_zero());
}

TEST_CASE("nested coefficients: (1 - t(x + 1/x))^2") {
  LaurentPoly<Int> pz(1, Int(0));  // polynomials in t
  LaurentPoly<LaurentPoly<Int>> f(1, pz);
  f.add_term(ExponentVec{0}, LaurentPoly<Int>::constant(1, 1));
  f.add_term(ExponentVec{1}, LaurentPoly<Int>::monomial(ExponentVec{1}, -1));
  f.add_term(ExponentVec{-1}, LaurentPoly<Int>::monomial(ExponentVec{1}, -1));
  auto sq = f.pow(2);
  // 1 - 2t(x+1/x) + t^2(x^2 + 2 + x^-2)
  CHECK(sq.coeff(ExponentVec{0}).coeff(ExponentVec{0}) == 1);
  CHECK(sq.coeff(ExponentVec{0}).coeff(ExponentVec{2}) == 2);
  CHECK(sq.coeff(ExponentVec{1}).coeff(ExponentVec{1}) == -2);
  CHECK(sq.coeff(ExponentVec{2}).coeff(ExponentVec{2}) == 1);
  CHECK(sq.coeff(ExponentVec{-2}).coeff(ExponentVec{2}) == 1);
}

TEST_CASE("legendre square picks up 2(1+z) at (xy)^2") {
  // f = y^2 - x^3 + (1+z) x^2 - z x over Z[z]
  LaurentPoly<Int> pz(1, Int(0));
  LaurentPoly<LaurentPoly<Int>> f(2, pz);
  auto zp = [&](std::initializer_list<Int> cs) {
    LaurentPoly<Int> c(1, Int(0));
    int32_t e = 0;
    for (const Int& v : cs) c.add_term(ExponentVec{e++}, v);
    return c;
  };
  f.add_term(ExponentVec{0, 2}, zp({1}));
  f.add_term(ExponentVec{3, 0}, zp({-1}));
  f.add_term(ExponentVec{2, 0}, zp({1, 1}));
  f.add_term(ExponentVec{1, 0}, zp({0, -1}));
  auto sq = f.pow(2);
  CHECK(sq.coeff(ExponentVec{2, 2}) == zp({2, 2}));
  CHECK(f.pow(0) ==
        ring_traits<LaurentPoly<LaurentPoly<Int>>>::one_like(f));
  CHECK(f.pow(1) == f);
}

TEST_CASE("pow is additive in the exponent") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 10; ++trial) {
    auto f = random_poly(rng, 2, 4, 2, 3);
    unsigned a = rng() % 5, b = rng() % 4;
    CHECK(f.pow(a + b) == f.pow(a) * f.pow(b));
  }
}

TEST_CASE("power over Z/p^s equals reduction of the integer power") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 8; ++trial) {
    auto f = random_poly(rng, 2, 6, 2, 9);
    unsigned e = 1 + rng() % 10;
    int64_t p = 5;
    int s = 2;
    ResidueInt zero(p, s, 0);
    auto fr = map_coeffs<ResidueInt>(
        f, zero, [&](const Int& c) { return ResidueInt(p, s, c); });
    auto lhs = fr.pow(e);
    auto rhs = map_coeffs<ResidueInt>(
        f.pow(e), zero, [&](const Int& c) { return ResidueInt(p, s, c); });
    CHECK(lhs == rhs);
  }
}

TEST_CASE("support and newton polytope") {
  auto f = xpow1d();
  auto sup = f.support();
  CHECK(sup.size() == 2);
  auto np = newton_polytope(f);
  CHECK(np.vertices().size() == 2);
  CHECK(np.dim() == 1);

  LaurentPoly<Int> c = LaurentPoly<Int>::constant(2, 5);
  auto pt = newton_polytope(c);
  CHECK(pt.dim() == 0);
  CHECK(pt.lattice_points().size() == 1);

  LaurentPoly<Int> z(1, Int(0));
  CHECK_THROWS_AS(newton_polytope(z), std::invalid_argument);

  // section-6 support: vertices are exactly {(0,2),(1,0),(3,0)}
  LaurentPoly<Int> s6(2, Int(0));
  for (auto e : {ExponentVec{0, 2}, ExponentVec{1, 0}, ExponentVec{3, 0},
                 ExponentVec{2, 0}, ExponentVec{1, 1}})
    s6.add_term(e, 1);
  auto np6 = newton_polytope(s6);
  CHECK(np6.vertices() ==
        std::vector<ExponentVec>{ExponentVec{0, 2}, ExponentVec{1, 0},
                                 ExponentVec{3, 0}});
}

TEST_CASE("newton polytope of a product is the Minkowski sum") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 12; ++trial) {
    auto f = random_poly(rng, 2, 4, 2, 2);
    auto g = random_poly(rng, 2, 4, 2, 2);
    if (f.is_zero() || g.is_zero()) continue;
    // positive coefficients so no cancellation hides support points
    auto fa = map_coeffs<Int>(f, Int(0), [](const Int& c) { return abs(c) + 1; });
    auto ga = map_coeffs<Int>(g, Int(0), [](const Int& c) { return abs(c) + 1; });
    std::vector<ExponentVec> mink;
    for (const auto& [e1, c1] : fa.terms())
      for (const auto& [e2, c2] : ga.terms()) mink.push_back(e1 + e2);
    CHECK(newton_polytope(fa * ga).vertices() ==
          LatticePolytope::from_points(mink).vertices());
  }
}

TEST_CASE("coefficient lookup") {
  auto f = xpow1d();
  auto cube = f.pow(3);
  CHECK(cube.coeff(ExponentVec{0}) == 0);  // odd power
  auto sq = f.pow(2);
  CHECK(sq.coeff(ExponentVec{0}) == 2);
  CHECK_THROWS_AS(sq.coeff(ExponentVec{0, 0}), std::invalid_argument);
}
