// Acceptance suite: one pass/fail line per criterion. All congruences are
// exact (tolerance zero) at the stated truncations. Exit code 0 iff every
// criterion passes.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "dworkcong/ahyp.hpp"
#include "dworkcong/builtins.hpp"
#include "dworkcong/hwdwork.hpp"

using namespace dwork;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& what, double limit_s,
               const std::function<bool(std::string&)>& body) {
  auto t0 = Clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (limit_s > 0 && secs > limit_s) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("runtime ") +
              std::to_string(secs) + "s exceeds " + std::to_string(limit_s) +
              "s";
  }
  std::printf("[%s] criterion %2d: %s (%.2fs)%s\n", ok ? "PASS" : "FAIL",
              number, what.c_str(), secs,
              detail.empty() ? "" : ("  -- " + detail).c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

bool all_ordinary_z0(int64_t p, const std::function<bool(int64_t)>& body) {
  bool ok = true;
  for (int64_t z0 = 2; z0 < p; ++z0) {
    if (hw::count_points_legendre(z0, p) % p == 0) continue;  // supersingular
    ok = ok && body(z0);
  }
  return ok;
}

}  // namespace

int main() {
  // 1. beta_p == gamma_p mod p across the builtin inputs
  criterion(1, "beta_p(mu) == gamma_p(mu) mod p for all builtins, p in {3,5,7}",
            10.0, [](std::string& detail) {
              bool ok = true;
              for (int64_t p : {3, 5, 7}) {
                for (Builtin bt :
                     {Builtin::kExample1d, Builtin::kDworkQuartic,
                      Builtin::kLegendre, Builtin::kSection6}) {
                  auto fam = builtin_family(bt);
                  auto fr = hw::embed_param_poly(fam.f, p, 1,
                                                 static_cast<int>(p) + 1);
                  auto sub =
                      make_open_subset(newton_polytope(fr), MuSpec::interior());
                  auto bp = hw::beta_matrix(fr, sub, static_cast<int>(p));
                  auto gp = hw::gamma_matrix(fr, sub, static_cast<int>(p),
                                             hw::PhiMode::kOnes);
                  if (!(bp == gp)) {
                    ok = false;
                    detail = builtin_name(bt) + " p=" + std::to_string(p);
                  }
                }
              }
              return ok;
            });

  // 2. Mellit-Vlasenko congruence
  criterion(2, "Dwork congruence for q(t): p in {3,5}, s in {1,2,3}, T=3p^s",
            60.0, [](std::string& detail) {
              bool ok = true;
              for (Builtin bt : {Builtin::kExample1d, Builtin::kDworkQuartic}) {
                auto g = builtin_ct_generator(bt);
                for (int64_t p : {3, 5}) {
                  for (int s : {1, 2, 3}) {
                    int T = 3 * static_cast<int>(pow_int(Int(p), s));
                    auto rep = hw::verify_mev(g, p, s, T);
                    if (!rep.holds) {
                      ok = false;
                      detail = rep.summary();
                    }
                  }
                }
              }
              return ok;
            });

  // 3. the any-m variant, m = 2 p^s
  criterion(3, "any-m congruence: dwork-quartic, p=5, m in {10,50}, T=60",
            60.0, [](std::string& detail) {
              auto g = builtin_ct_generator(Builtin::kDworkQuartic);
              bool ok = true;
              for (int m : {10, 50}) {
                auto rep = hw::verify_any_m(g, 5, m, 60);
                if (!rep.holds) {
                  ok = false;
                  detail = rep.summary();
                }
              }
              return ok;
            });

  // 4. derivative congruence at m = p^s
  criterion(4, "derivative congruence: same grid as criterion 2 with m=p^s",
            60.0, [](std::string& detail) {
              bool ok = true;
              for (Builtin bt : {Builtin::kExample1d, Builtin::kDworkQuartic}) {
                auto g = builtin_ct_generator(bt);
                for (int64_t p : {3, 5}) {
                  for (int s : {1, 2, 3}) {
                    int ps = static_cast<int>(pow_int(Int(p), s));
                    auto rep = hw::verify_derivative(g, p, ps, 3 * ps);
                    if (!rep.holds) {
                      ok = false;
                      detail = rep.summary();
                    }
                  }
                }
              }
              return ok;
            });

  // 5. unit roots on the Legendre family
  criterion(5, "unit roots: point counts, Hensel lifts, truncation quotients",
            30.0, [](std::string& detail) {
              bool ok = true;
              if (hw::count_points_legendre(2, 5) != -2) {
                ok = false;
                detail = "a_5(2) != -2";
              }
              auto r1 = hw::unit_root_legendre(2, 5, 1);
              auto r2 = hw::unit_root_legendre(2, 5, 2);
              if (r1.lambda_trunc->value() != 3 ||
                  r2.lambda_trunc->value() != 13 || !r1.agree || !r2.agree) {
                ok = false;
                detail = "p=5 z0=2 quotients";
              }
              for (int64_t p : {3, 5, 7}) {
                bool sub = all_ordinary_z0(p, [&](int64_t z0) {
                  auto r = hw::unit_root_legendre(z0, p, 2);
                  return r.agree;
                });
                if (!sub) {
                  ok = false;
                  detail = "agreement mod p^2 failed at p=" + std::to_string(p);
                }
              }
              return ok;
            });

  // 6. the limit does not depend on the chosen lift
  criterion(6, "lift independence of the truncation quotient, s <= 2", 30.0,
            [](std::string& detail) {
              bool ok = true;
              for (int64_t p : {3, 5, 7}) {
                bool sub = all_ordinary_z0(p, [&](int64_t z0) {
                  for (int s : {1, 2}) {
                    auto a = hw::unit_root_legendre(z0, p, s);
                    auto b = hw::unit_root_legendre(z0 + p, p, s);
                    auto c2 = hw::unit_root_legendre(z0 + 2 * p * p, p, s);
                    if (!(*a.lambda_trunc == *b.lambda_trunc) ||
                        !(*a.lambda_trunc == *c2.lambda_trunc))
                      return false;
                  }
                  return true;
                });
                if (!sub) {
                  ok = false;
                  detail = "p=" + std::to_string(p);
                }
              }
              return ok;
            });

  // 7. the two construction routes agree exactly over Z
  criterion(7, "psi~_m: lattice enumeration == constant-term oracle, m <= 7",
            60.0, [](std::string& detail) {
              auto ctx = std::make_shared<AContext>(section6_config());
              std::vector<int> all = {0, 1, 2, 3, 4};
              for (int m = 1; m <= 7; ++m) {
                auto enu = ahyp::psi_tilde_exact(*ctx, all, m, 1000);
                auto orc = ahyp::psi_tilde_ct_oracle(*ctx, m);
                if (!(enu == orc)) {
                  detail = "m=" + std::to_string(m);
                  return false;
                }
              }
              return true;
            });

  // 8. golden series entries of the section-6 matrix
  criterion(8, "section-6 golden vectors of psi~", 10.0,
            [](std::string& detail) {
              auto ctx = std::make_shared<AContext>(section6_config());
              std::vector<int> all = {0, 1, 2, 3, 4};
              auto psi = ahyp::psi_tilde_exact(*ctx, all, 100, 8);
              for (int32_t s = 0; s <= 4; ++s) {
                ExponentVec key{0, s, s, static_cast<int32_t>(-2 * s), 0};
                if (psi[3][3][key] !=
                    binomial(static_cast<unsigned>(2 * s),
                             static_cast<unsigned>(s))) {
                  detail = "entry (4,4) at s=" + std::to_string(s);
                  return false;
                }
              }
              if (psi[3][3].size() != 5) {
                detail = "entry (4,4) has stray keys";
                return false;
              }
              if (psi[4][4].at(ExponentVec{2, 1, 1, 0, -4}) != 12 ||
                  psi[4][4].at(ExponentVec{1, 0, 0, 1, -2}) != 2) {
                detail = "entry (5,5) coefficients";
                return false;
              }
              for (int i : {0, 1, 2}) {
                for (int j = 0; j < 5; ++j) {
                  ahyp::ExactEntry expect;
                  if (i == j) expect[ExponentVec::zeros(5)] = 1;
                  if (!(psi[static_cast<size_t>(j)][static_cast<size_t>(i)] ==
                        expect)) {
                    detail = "columns 1..3 not identity";
                    return false;
                  }
                }
              }
              return true;
            });

  // 9. truncation stability of the main congruence
  criterion(9, "truncation stability: 1x1 s<=2 at weight 6; 5x5 s=1 at "
               "weight 3; all five delta quotients",
            300.0, [](std::string& detail) {
              auto ctx = std::make_shared<AContext>(section6_config());
              auto one = ahyp::verify_truncation_stability(
                  ctx, MuSpec::interior(), 3, 2, 18);
              if (!one.holds) {
                detail = one.failure ? one.failure->where : "1x1 failed";
                return false;
              }
              auto five = ahyp::verify_truncation_stability(
                  ctx, MuSpec::all(), 3, 1, 9);
              if (!five.holds) {
                detail = five.failure ? five.failure->where : "5x5 failed";
                return false;
              }
              return true;
            });

  // 10. negative controls: every verifier locates a bumped coefficient
  criterion(10, "negative controls for every verifier", 120.0,
            [](std::string& detail) {
              auto g = builtin_ct_generator(Builtin::kExample1d);
              auto fam = builtin_family(Builtin::kExample1d);
              auto ctx = std::make_shared<AContext>(section6_config());
              struct Case {
                std::string name;
                CongruenceReport rep;
              };
              std::vector<Case> cases;
              cases.push_back(
                  {"mev", hw::verify_mev(g, 3, 1, 18, PerturbSpec{2})});
              cases.push_back(
                  {"any-m", hw::verify_any_m(g, 3, 6, 18, PerturbSpec{4})});
              cases.push_back({"deriv", hw::verify_derivative(
                                            g, 3, 9, 18, PerturbSpec{3})});
              cases.push_back(
                  {"limits", hw::verify_limits(fam.f, MuSpec::interior(), 3, 1,
                                               12, hw::PhiMode::kOnes,
                                               PerturbSpec{2})});
              cases.push_back(
                  {"main5", ahyp::verify_truncation_stability(
                                ctx, MuSpec::interior(), 3, 1, 9,
                                PerturbSpec{1})});
              for (const auto& c : cases) {
                if (c.rep.holds || !c.rep.failure) {
                  detail = c.name + " missed the perturbation";
                  return false;
                }
              }
#ifdef DWORKCONG_CLI_PATH
              // exit code 1 with a located failure through the CLI as well
              std::string cmd = std::string(DWORKCONG_CLI_PATH) +
                                " verify mev --builtin example-1d --p 3 --s 1"
                                " --T 18 --perturb 2 > /dev/null 2>&1";
              int rc = std::system(cmd.c_str());
              if (!WIFEXITED(rc) || WEXITSTATUS(rc) != 1) {
                detail = "CLI exit code for a perturbed fixture";
                return false;
              }
#endif
              return true;
            });

  // 11. Gamma* identities and coefficient integrality
  criterion(11, "Gamma* identities and psi~ integrality invariants", 5.0,
            [](std::string& detail) {
              for (int n = -20; n <= 20; ++n) {
                if (n != 0 &&
                    ahyp::gamma_star(n + 1) != Rat(n) * ahyp::gamma_star(n)) {
                  detail = "functional equation at n=" + std::to_string(n);
                  return false;
                }
                int sign = n <= 0 ? -1 : 1;
                int par = (n - 1) % 2 == 0 ? 1 : -1;
                if (ahyp::gamma_star(n) * ahyp::gamma_star(1 - n) !=
                    Rat(sign * par)) {
                  detail = "reflection at n=" + std::to_string(n);
                  return false;
                }
              }
              // integrality is asserted inside the construction; build a
              // sizeable instance so the assertion actually runs
              auto ctx = std::make_shared<AContext>(section6_config());
              auto psi =
                  ahyp::psi_tilde_exact(*ctx, {0, 1, 2, 3, 4}, 12, 11);
              return !psi.empty();
            });

  if (g_failures) {
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
