#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dworkcong/builtins.hpp"
#include "dworkcong/hwdwork.hpp"

using namespace dwork;

namespace {

LaurentPoly<Rat> poly_1d() { return builtin_ct_generator(Builtin::kExample1d); }
LaurentPoly<Rat> quartic() {
  return builtin_ct_generator(Builtin::kDworkQuartic);
}

// rational t-polynomial from a coefficient list
LaurentPoly<Rat> tpoly(std::initializer_list<Rat> cs) {
  LaurentPoly<Rat> c(1, Rat(0));
  int32_t e = 0;
  for (const Rat& v : cs) c.add_term(ExponentVec{e++}, v);
  return c;
}

}  // namespace

TEST_CASE("beta matrix examples") {
  auto fam = builtin_family(Builtin::kExample1d);
  auto sub = make_open_subset(newton_polytope(fam.f), MuSpec::interior());
  CHECK(sub.points() == std::vector<ExponentVec>{ExponentVec{0}});

  auto b1 = hw::beta_matrix(fam.f, sub, 1);
  CHECK(b1.at(0, 0) == tpoly({1}));
  auto b3 = hw::beta_matrix(fam.f, sub, 3);
  CHECK(b3.at(0, 0) == tpoly({1, 0, 2}));

  // legendre, m = 3: the 1x1 matrix [2(1+z)]
  auto leg = builtin_family(Builtin::kLegendre);
  auto lsub = make_open_subset(newton_polytope(leg.f), MuSpec::interior());
  CHECK(lsub.points() == std::vector<ExponentVec>{ExponentVec{1, 1}});
  auto g3 = hw::beta_matrix(leg.f, lsub, 3);
  CHECK(g3.at(0, 0) == tpoly({2, 2}));

  // mu from a different polytope is rejected
  auto wrong = make_open_subset(
      LatticePolytope::from_points({ExponentVec{0}, ExponentVec{2}}),
      MuSpec::all());
  CHECK_THROWS_AS(hw::beta_matrix(fam.f, wrong, 2), std::invalid_argument);
}

TEST_CASE("gamma matrix via the beta expansion") {
  auto fam = builtin_family(Builtin::kExample1d);
  auto sub = make_open_subset(newton_polytope(fam.f), MuSpec::interior());

  // for f = 1 - t g with phi = 1, gamma_m = sum_{k<m} b_k t^k
  auto b = hw::ct_sequence(builtin_ct_generator(Builtin::kExample1d), 7);
  for (int m : {1, 2, 3, 6}) {
    auto gm = hw::gamma_matrix(fam.f, sub, m, hw::PhiMode::kOnes);
    LaurentPoly<Rat> expect(1, Rat(0));
    for (int k = 0; k < m; ++k)
      expect.add_term(ExponentVec{static_cast<int32_t>(k)},
                      b[static_cast<size_t>(k)]);
    CHECK(gm.at(0, 0) == expect);
  }

  // m = 1: gamma_1 = beta_1 for any f and phi
  auto leg = builtin_family(Builtin::kLegendre);
  auto lsub = make_open_subset(newton_polytope(leg.f), MuSpec::interior());
  CHECK(hw::gamma_matrix(leg.f, lsub, 1, hw::PhiMode::kOnes) ==
        hw::beta_matrix(leg.f, lsub, 1));

  // Lemma: beta_p == gamma_p mod p (both [1 + 2t^2] for p = 3 here)
  int64_t p = 3;
  auto fr = hw::embed_param_poly(fam.f, p, 1, 4);
  auto subr = make_open_subset(newton_polytope(fr), MuSpec::interior());
  auto bp = hw::beta_matrix(fr, subr, static_cast<int>(p));
  auto gp = hw::gamma_matrix(fr, subr, static_cast<int>(p), hw::PhiMode::kOnes);
  CHECK(bp == gp);
  CHECK(bp.at(0, 0).coeff(0) == 1);
  CHECK(bp.at(0, 0).coeff(2) == 2);
}

TEST_CASE("lemma beta_p == gamma_p mod p across builtins and phi choices") {
  for (int64_t p : {3, 5, 7}) {
    for (Builtin bt : {Builtin::kExample1d, Builtin::kDworkQuartic,
                       Builtin::kLegendre, Builtin::kSection6}) {
      auto fam = builtin_family(bt);
      auto fr = hw::embed_param_poly(fam.f, p, 1, 2 * static_cast<int>(p));
      auto sub = make_open_subset(newton_polytope(fr), MuSpec::interior());
      for (auto mode : {hw::PhiMode::kOnes, hw::PhiMode::kPolyCoeff}) {
        auto bp = hw::beta_matrix(fr, sub, static_cast<int>(p));
        auto gp = hw::gamma_matrix(fr, sub, static_cast<int>(p), mode);
        CHECK(bp == gp);
      }
    }
  }
}

TEST_CASE("constant-term sequences") {
  auto b = hw::ct_sequence(poly_1d(), 4);
  CHECK(b == std::vector<Rat>{1, 0, 2, 0, 6});
  CHECK(hw::ct_sequence(poly_1d(), 0) == std::vector<Rat>{1});

  // quartic: b_k = C(k, k/2)^2 4^{-k} for even k (independent closed form)
  auto bq = hw::ct_sequence(quartic(), 8);
  for (int k = 0; k <= 8; ++k) {
    Rat expect = 0;
    if (k % 2 == 0)
      expect = Rat(binomial(static_cast<unsigned>(k),
                            static_cast<unsigned>(k / 2)) *
                       binomial(static_cast<unsigned>(k),
                                static_cast<unsigned>(k / 2)),
                   pow_int(4, static_cast<unsigned>(k)));
    CHECK(bq[static_cast<size_t>(k)] == expect);
  }
}

TEST_CASE("dense modular fast path matches the generic sparse walk") {
  for (auto g : {poly_1d(), quartic()}) {
    auto gz = hw::embed_poly(g, 5, 3);
    auto fast = hw::ct_sequence(gz, 30);                 // dense path
    auto slow = hw::ct_sequence<ResidueInt>(gz, 30);     // generic template
    CHECK(fast == slow);
  }
}

TEST_CASE("q series") {
  auto q = hw::q_series(poly_1d(), 3, 1, 5);
  CHECK(q.coeff(0) == 1);
  CHECK(q.coeff(1) == 0);
  CHECK(q.coeff(2) == 2);
  CHECK(q.coeff(3) == 0);
  CHECK(q.coeff(4) == 0);  // b_4 = 6 == 0 mod 3

  // quartic mod 5: coefficients C(2k,k)^2 16^{-k} at t^{2k}
  auto qq = hw::q_series(quartic(), 5, 2, 8);
  for (int k = 0; 2 * k < 8; ++k) {
    Int c2k = binomial(static_cast<unsigned>(2 * k), static_cast<unsigned>(k));
    ResidueInt expect = ResidueInt(5, 2, c2k) * ResidueInt(5, 2, c2k) *
                        embed_rational(Rat(1, 16), 5, 2).pow(k);
    CHECK(qq.coeff(2 * k) == expect.value());
    if (2 * k + 1 < 8) CHECK(qq.coeff(2 * k + 1) == 0);
  }

  // interior-point hypothesis: support {0, 2} has interior point 1
  LaurentPoly<Rat> bad(1, Rat(0));
  bad.add_term(ExponentVec{0}, 1);
  bad.add_term(ExponentVec{2}, 1);
  CHECK_THROWS_AS(hw::q_series(bad, 3, 1, 4), std::invalid_argument);

  // non-p-integral coefficients
  CHECK_THROWS_AS(hw::q_series(quartic(), 2, 1, 4), std::domain_error);
}

TEST_CASE("mev congruence") {
  CHECK(hw::verify_mev(poly_1d(), 3, 1, 27).holds);
  CHECK(hw::verify_mev(poly_1d(), 3, 2, 27).holds);
  auto rep = hw::verify_mev(poly_1d(), 3, 1, 27, PerturbSpec{2});
  CHECK(!rep.holds);
  CHECK(rep.failure.has_value());
  CHECK(!rep.failure->where.empty());
}

TEST_CASE("any-m congruence") {
  CHECK(hw::verify_any_m(quartic(), 5, 10, 30).holds);
  CHECK(hw::verify_any_m(poly_1d(), 3, 6, 20).holds);
  // m = p is the s = 1 instance of mev
  CHECK(hw::verify_any_m(poly_1d(), 3, 3, 27).holds ==
        hw::verify_mev(poly_1d(), 3, 1, 27).holds);
  CHECK_THROWS_AS(hw::verify_any_m(poly_1d(), 3, 4, 20),
                  std::invalid_argument);
  CHECK(!hw::verify_any_m(poly_1d(), 3, 6, 20, PerturbSpec{4}).holds);
}

TEST_CASE("derivative congruence") {
  CHECK(hw::verify_derivative(poly_1d(), 3, 9, 27).holds);
  CHECK(hw::verify_derivative(quartic(), 5, 5, 30).holds);
  CHECK(!hw::verify_derivative(poly_1d(), 3, 9, 27, PerturbSpec{3}).holds);
  CHECK_THROWS_AS(hw::verify_derivative(poly_1d(), 3, 2, 20),
                  std::invalid_argument);
}

TEST_CASE("lambda approximant at level 1 is gamma_p") {
  // gamma-variant: gamma_3(t) * gamma_1(t^3)^{-1} = 1 + 2t^2
  auto fam = builtin_family(Builtin::kExample1d);
  auto pair = hw::approximants(fam.f, MuSpec::interior(), 3, 1, 1, 9, true);
  CHECK(pair.lambda.at(0, 0).coeff(0) == 1);
  CHECK(pair.lambda.at(0, 0).coeff(2) == 2);
  for (int k : {1, 3, 4, 5}) CHECK(pair.lambda.at(0, 0).coeff(k) == 0);
}

TEST_CASE("cauchy property and beta/gamma agreement of approximants") {
  auto f1 = builtin_family(Builtin::kExample1d);
  auto rep = hw::verify_limits(f1.f, MuSpec::interior(), 3, 3, 30);
  CHECK(rep.holds);

  auto fq = builtin_family(Builtin::kDworkQuartic);
  auto repq = hw::verify_limits(fq.f, MuSpec::interior(), 3, 2, 20);
  CHECK(repq.holds);

  auto leg = builtin_family(Builtin::kLegendre);
  auto repl = hw::verify_limits(leg.f, MuSpec::interior(), 5, 1, 12);
  CHECK(repl.holds);

  CHECK(!hw::verify_limits(f1.f, MuSpec::interior(), 3, 1, 12,
                           hw::PhiMode::kOnes, PerturbSpec{2})
             .holds);
}

TEST_CASE("legendre truncations") {
  auto f5 = hw::legendre_truncation(5, 1, 5);
  CHECK(f5.coeff(0) == 1);
  CHECK(f5.coeff(1) == 4);
  CHECK(f5.coeff(2) == 1);
  CHECK(f5.coeff(3) == 0);
  CHECK(f5.coeff(4) == 0);
  CHECK(hw::legendre_truncation(7, 1, 1).coeff(0) == 1);
  CHECK_THROWS_AS(hw::legendre_truncation(2, 1, 4), std::invalid_argument);
}

TEST_CASE("hasse-witt polynomial vs hypergeometric truncation mod p") {
  // G_p(z) == (-1)^{(p-1)/2} F_p(z) mod p on the Legendre family
  auto leg = builtin_family(Builtin::kLegendre);
  for (int64_t p : {3, 5, 7}) {
    auto fr = hw::embed_param_poly(leg.f, p, 1, static_cast<int>(p));
    auto sub = make_open_subset(newton_polytope(fr), MuSpec::interior());
    auto gp = hw::beta_matrix(fr, sub, static_cast<int>(p)).at(0, 0);
    auto fp = hw::legendre_truncation(p, 1, static_cast<int>(p))
                  .truncate_order(static_cast<int>(p));
    bool sign_minus = ((p - 1) / 2) % 2 == 1;
    auto expect = sign_minus ? -fp : fp;
    CHECK(gp == expect);
  }
}

TEST_CASE("point counts on the legendre family") {
  CHECK(hw::count_points_legendre(2, 5) == -2);
  CHECK(hw::count_points_legendre(2, 3) == 0);
  CHECK_THROWS_AS(hw::count_points_legendre(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(hw::count_points_legendre(0, 7), std::invalid_argument);
  // oracle at p=5, z0=3 computed by hand: a_5 = 2
  CHECK(hw::count_points_legendre(3, 5) == 2);
}

TEST_CASE("unit roots on the legendre family") {
  auto r1 = hw::unit_root_legendre(2, 5, 1);
  CHECK(r1.lambda_trunc->value() == 3);
  CHECK(r1.agree);
  auto r2 = hw::unit_root_legendre(2, 5, 2);
  CHECK(r2.lambda_trunc->value() == 13);
  CHECK(r2.lambda_hensel->value() == 13);
  CHECK(r2.agree);
  CHECK(*r2.a_p == -2);
  // supersingular point rejected
  CHECK_THROWS_AS(hw::unit_root_legendre(2, 3, 1), std::domain_error);
  CHECK_THROWS_AS(hw::unit_root_legendre(1, 5, 1), std::invalid_argument);

  // two lifts of the same residue give the same answer
  auto ra = hw::unit_root_legendre(2, 5, 2);
  auto rb = hw::unit_root_legendre(7, 5, 2);
  CHECK(ra.lambda_trunc->value() == rb.lambda_trunc->value());
}

TEST_CASE("unit root from a constant-term series") {
  // p = 5, t0 = 1: gamma_5(1) = 1 + 2 + 1 = 4 is a unit mod 5
  auto r1 = hw::unit_root_ct_series(poly_1d(), 1, 5, 1);
  auto r2 = hw::unit_root_ct_series(poly_1d(), 1, 5, 2);
  CHECK(r1.lambda_trunc.has_value());
  // Cauchy: s = 2 refines s = 1
  CHECK(r2.lambda_trunc->reduce(1) == *r1.lambda_trunc);
  // lift independence mod p^2
  auto r3 = hw::unit_root_ct_series(poly_1d(), 6, 5, 2);
  CHECK(*r3.lambda_trunc == *r2.lambda_trunc);
}
