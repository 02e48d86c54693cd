// Acceptance suite: one line per criterion, every tolerance pinned in code.
// Exit status 0 iff every criterion passes within its time budget.

#include "a4link/elliptic.hpp"
#include "a4link/framework.hpp"
#include "a4link/linking.hpp"
#include "a4link/spectral.hpp"
#include "a4link/trajectory.hpp"
#include "a4link/unipoly.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace a4link;

namespace {

int g_failures = 0;

#define REQUIRE(cond)                                                             \
    do {                                                                          \
        if (!(cond)) throw std::runtime_error("requirement failed: " #cond);      \
    } while (0)

void criterion(int number, const std::string& title, double budget_seconds,
               const std::function<void()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string failure;
    try {
        body();
    } catch (const std::exception& e) {
        failure = e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (failure.empty() && elapsed > budget_seconds)
        failure = "time budget exceeded (" + std::to_string(elapsed) + " s > " +
                  std::to_string(budget_seconds) + " s)";
    if (failure.empty()) {
        std::printf("PASS criterion %2d: %s (%.3f s)\n", number, title.c_str(), elapsed);
    } else {
        std::printf("FAIL criterion %2d: %s (%.3f s): %s\n", number, title.c_str(), elapsed,
                    failure.c_str());
        ++g_failures;
    }
}

MPoly xvar() { return MPoly::var(xy_vars(), 0); }
MPoly yvar() { return MPoly::var(xy_vars(), 1); }

} // namespace

int main() {
    criterion(1, "determinant identity det Omega = 8(x^2y+3x^2-xy-3y^2-3x-3y), exact", 1.0, [] {
        MPoly det = derive_spectral_cubic();
        MPoly x = xvar(), y = yvar();
        MPoly expected =
            BigRational(8) * (x * x * y + 3 * (x * x) - x * y - 3 * (y * y) - 3 * x - 3 * y);
        REQUIRE(det == expected);
    });

    criterion(2, "distinguished point: p0 = (0,5/3,5/3), tau = 1/2, R1 = R2 = 1/6, exact", 1.0, [] {
        auto p0 = p0_polynomial();
        std::vector<BigRational> pt{BigRational(1, 2), BigRational(-1, 3)};
        REQUIRE(p0[0].eval<BigRational>(pt).is_zero());
        REQUIRE(p0[1].eval<BigRational>(pt) == BigRational(5, 3));
        REQUIRE(p0[2].eval<BigRational>(pt) == BigRational(5, 3));
        auto pars = intersection_params_at(BigRational(1, 2), BigRational(-1, 3));
        REQUIRE(pars.tau == BigRational(1, 2));
        REQUIRE(pars.r1 == BigRational(1, 6));
        REQUIRE(pars.r2 == BigRational(1, 6));
    });

    criterion(3, "resultant reproduction for N_tau, D_tau, N1 by exact expansion", 10.0, [] {
        const auto& f = IntersectionFormulas::instance();
        const MPoly& d8 = SpectralCurve::instance().d8;
        MPoly x = xvar();
        MPoly expected_ntau = BigRational(-384) * (x * (x - 3) * (x + 2) * (x - 1).pow(3));
        MPoly expected_dtau = BigRational(48) * ((x - 3) * (2 * x - 1) * (x - 1).pow(2));
        MPoly quartic = 3 * x.pow(4) - 20 * x.pow(3) + 7 * (x * x) + 4 * x - 3;
        MPoly expected_n1 =
            BigRational(98304) * (x * (x - 3).pow(4) * (x - 1).pow(7) * quartic);
        REQUIRE(resultant(d8, f.N_tau, 1) == expected_ntau);
        REQUIRE(resultant(d8, f.D_tau, 1) == expected_dtau);
        REQUIRE(resultant(d8, f.N1, 1) == expected_n1);
    });

    criterion(4, "persistence certificate verdict, x = 1/2 pole attributed to the other branch",
              60.0, [] {
                  CertificateReport cert = persistence_certificate();
                  REQUIRE(cert.verdict);
                  const auto& f = IntersectionFormulas::instance();
                  REQUIRE(f.D_tau.eval<BigRational>({BigRational(1, 2), BigRational(-3, 4)})
                              .is_zero());
                  REQUIRE(f.D_tau.eval<BigRational>({BigRational(1, 2), BigRational(-1, 3)}) ==
                          BigRational(-5, 3));
                  const auto& dtau = cert.function("D_tau");
                  REQUIRE(dtau.roots_in_01.size() == 1);
                  REQUIRE(dtau.roots_in_01[0].exact);
                  REQUIRE(dtau.roots_in_01[0].lo == BigRational(1, 2));
                  REQUIRE(!dtau.roots_in_01[0].on_stable_branch);
                  for (const auto& fn : cert.functions) REQUIRE(fn.sign_constant);
              });

    criterion(5, "4x4 linking matrix: |off-diagonal| = 1 on x = 0.05..0.95 and exact x = 1/2",
              10.0, [] {
                  LinkingOptions opt;
                  opt.margin = 1e-6; // every numeric crossing decision clears this margin
                  for (int i = 1; i <= 19; ++i) {
                      double x = 0.05 * i;
                      LinkingMatrix m = linking_matrix(realize_stable(x), opt);
                      for (int a = 0; a < 4; ++a)
                          for (int b = 0; b < 4; ++b)
                              REQUIRE(std::abs(m[static_cast<size_t>(a)][static_cast<size_t>(b)]) ==
                                      (a == b ? 0 : 1));
                  }
                  LinkingMatrix m =
                      linking_matrix(realize_at(BigRational(1, 2), BigRational(-1, 3)));
                  for (int a = 0; a < 4; ++a)
                      for (int b = 0; b < 4; ++b)
                          REQUIRE(std::abs(m[static_cast<size_t>(a)][static_cast<size_t>(b)]) ==
                                  (a == b ? 0 : 1));
              });

    criterion(6, "elliptic arithmetic: image point, identity mod d, torsion Z/2 x Z/6, u = 6",
              30.0, [] {
                  EllipticPoint img = birational_map(BigRational(1, 2), BigRational(-1, 3));
                  REQUIRE(img.U == BigRational(-276));
                  REQUIRE(img.V == BigRational(12960));
                  REQUIRE(BigInt(12960) * 12960 == BigInt(167961600));
                  REQUIRE(verify_birational_identity());
                  TorsionGroup tg = torsion_subgroup();
                  REQUIRE(tg.elements.size() == 12);
                  REQUIRE(tg.structure.first == 2);
                  REQUIRE(tg.structure.second == 6);
                  ModelInvariantsReport inv = model_invariants_check();
                  REQUIRE(inv.c4_E == BigRational(14224));
                  REQUIRE(inv.c4_E0 == BigRational(18434304));
                  REQUIRE(inv.c6_E == BigRational(-1536832));
                  REQUIRE(inv.c6_E0 == BigRational(-71702433792));
                  REQUIRE(inv.scale_u == BigRational(6));
                  REQUIRE(inv.isomorphic);
              });

    criterion(7, "rational point catalogue and the remark's root coincidence", 5.0, [] {
        const auto& cat = rational_points(); // membership verified exactly inside
        REQUIRE(cat.affine.size() == 9);
        REQUIRE(cat.infinite.size() == 3);
        RemarkReport rep = remark_check(persistence_certificate());
        REQUIRE(rep.pattern_holds);
        REQUIRE(rep.roots_subset_of_point_xs);
        REQUIRE(rep.half_only_via_D_tau);
    });

    criterion(8, "trajectory: G(1/3,1/36) = 0, symmetric septic, singular points, identity mod d",
              60.0, [] {
                  const auto& tc = TrajectoryCurves::instance();
                  REQUIRE(tc.G.eval<BigRational>({BigRational(1, 3), BigRational(1, 36)})
                              .is_zero());
                  REQUIRE(tc.K.total_degree() == 7);
                  const VarList UV{"u", "v"};
                  REQUIRE(tc.K == tc.K.subst({MPoly::var(UV, 1), MPoly::var(UV, 0)}));
                  REQUIRE(singular_point_check(BigRational(0), BigRational(0)));
                  REQUIRE(singular_point_check(BigRational(2, 3), BigRational(2, 3)));
                  REQUIRE(verify_G_identity_on_curve(200));
                  auto pts = trajectory_samples(500);
                  REQUIRE(pts.size() == 500);
                  for (const auto& p : pts) REQUIRE(p.k_residual < 1e-9);
              });

    criterion(9, "figure regression: (R1,R2)(0.02) = (0.006622864, 0.006801155) to 1e-6", 1.0, [] {
        auto pars = intersection_params_at(0.02, branch_y_numeric(0.02, Branch::stable));
        REQUIRE(std::fabs(pars.r1 - 0.006622864) < 1e-6);
        REQUIRE(std::fabs(pars.r2 - 0.006801155) < 1e-6);
    });

    criterion(10, "property suites: kernel algebra, homomorphism table, equilibrium residuals",
              120.0, [] {
                  // resultant = 0 iff gcd nonconstant, and the scaling law
                  std::mt19937 rng(20250811);
                  std::uniform_int_distribution<int> cdist(-4, 4), ddist(1, 4);
                  const VarList& XY = xy_vars();
                  auto rand_poly = [&] {
                      MPoly p(XY);
                      int deg = ddist(rng);
                      for (int k = 0; k <= deg; ++k)
                          p.set_coeff({k, 0}, BigRational(cdist(rng)));
                      return p;
                  };
                  int informative = 0;
                  for (int it = 0; it < 60; ++it) {
                      MPoly f = rand_poly(), g = rand_poly();
                      if (f.degree_in(0) < 1 || g.degree_in(0) < 1) continue;
                      bool gcd_nonconst =
                          udeg(ugcd(ufrom_mpoly(f, 0), ufrom_mpoly(g, 0))) > 0;
                      REQUIRE(resultant(f, g, 0).is_zero() == gcd_nonconst);
                      BigRational c(ddist(rng));
                      REQUIRE(resultant(c * f, g, 0) ==
                              c.pow(static_cast<unsigned long>(g.degree_in(0))) *
                                  resultant(f, g, 0));
                      ++informative;
                  }
                  REQUIRE(informative > 20);

                  // Sturm vs a brute-force grid scan
                  MPoly x = xvar();
                  MPoly f = (x - 1) * (2 * x - 3) * (x + 2) * (5 * x + 1);
                  auto iso = sturm_isolate(f, Interval(BigRational(-3), BigRational(3)));
                  REQUIRE(iso.size() == 4);
                  UPoly uf = ufrom_mpoly(f, 0);
                  int sign_changes = 0;
                  int last_sign = 0;
                  for (int i = 0; i <= 60000; ++i) {
                      double t = -3 + 6.0 * i / 60000;
                      double cur = ueval(uf, t);
                      int s = cur > 0 ? 1 : (cur < 0 ? -1 : 0);
                      if (s != 0) {
                          if (last_sign != 0 && s != last_sign) ++sign_changes;
                          last_sign = s;
                      }
                  }
                  REQUIRE(sign_changes == 4);

                  // homomorphism table, exhaustively
                  const A4& g4 = A4::instance();
                  for (int a = 0; a < 12; ++a)
                      for (int b = 0; b < 12; ++b)
                          REQUIRE(g4.rho(a) * g4.rho(b) == g4.rho(g4.mul(a, b)));

                  // equilibrium at 200 samples across the arc
                  for (int i = 1; i <= 200; ++i) {
                      double xs = i / 201.0;
                      REQUIRE(equilibrium_residual(realize_stable(xs)) < 1e-9);
                  }
              });

    if (g_failures == 0) {
        std::printf("acceptance: all 10 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
    return 1;
}
