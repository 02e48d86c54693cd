#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "a4link/trajectory.hpp"

#include "a4link/linking.hpp"
#include "a4link/spectral.hpp"

#include <cmath>
#include <sstream>

using namespace a4link;

TEST_CASE("G vanishes at the distinguished symmetric coordinates") {
    // independent term-by-term oracle for G(1/3, 1/36): coefficients paired
    // with (s-exponent, p-exponent), evaluated with plain rational arithmetic
    struct Term { long c; unsigned es, ep; };
    const Term terms[] = {
        {3, 7, 0},  {-7, 6, 0}, {-6, 5, 1}, {-1, 5, 0}, {8, 4, 1},
        {3, 3, 2},  {5, 4, 0},  {28, 3, 1}, {-1, 2, 2}, {-3, 3, 0},
        {-24, 2, 1}, {-24, 1, 2}, {1, 2, 0}, {12, 1, 1}, {-4, 0, 1},
    };
    BigRational s(1, 3), p(1, 36), acc(0);
    for (const auto& t : terms) acc += BigRational(t.c) * s.pow(t.es) * p.pow(t.ep);
    CHECK(acc.is_zero());

    // and the transcribed polynomial agrees
    const auto& tc = TrajectoryCurves::instance();
    CHECK(tc.G.eval<BigRational>({s, p}).is_zero());
    CHECK(static_cast<size_t>(std::distance(std::begin(terms), std::end(terms))) ==
          tc.G.terms().size());
}

TEST_CASE("K is a symmetric septic with the expected lowest-order part") {
    const auto& tc = TrajectoryCurves::instance();
    CHECK(tc.K.total_degree() == 7);

    const VarList UV{"u", "v"};
    MPoly u = MPoly::var(UV, 0), v = MPoly::var(UV, 1);
    CHECK(tc.K == tc.K.subst({v, u})); // K(u,v) = K(v,u)

    // no constant or linear part; the quadratic part is exactly (u-v)^2
    MPoly low(UV);
    for (const auto& [e, c] : tc.K.terms()) {
        int deg = e[0] + e[1];
        CHECK(deg >= 2);
        if (deg == 2) low.set_coeff(e, c);
    }
    CHECK(low == (u - v) * (u - v));

    // K is not divisible by (u - v): the locus is not the diagonal
    CHECK(!divides(u - v, tc.K));

    CHECK(tc.K.eval<BigRational>({BigRational(0), BigRational(0)}).is_zero());
    CHECK(tc.K.eval<BigRational>({BigRational(1, 6), BigRational(1, 6)}).is_zero());
}

TEST_CASE("singular points of K") {
    CHECK(singular_point_check(BigRational(0), BigRational(0)));
    CHECK(singular_point_check(BigRational(2, 3), BigRational(2, 3)));

    // the distinguished point lies on K but is smooth: gradient (1/48, 1/48)
    CHECK(!singular_point_check(BigRational(1, 6), BigRational(1, 6)));
    const auto& tc = TrajectoryCurves::instance();
    CHECK(tc.K.derivative(0).eval<BigRational>({BigRational(1, 6), BigRational(1, 6)}) ==
          BigRational(1, 48));
    CHECK(tc.K.derivative(1).eval<BigRational>({BigRational(1, 6), BigRational(1, 6)}) ==
          BigRational(1, 48));

    // a generic on-curve sample is not singular either
    CHECK(!singular_point_check(BigRational(1), BigRational(1)));
}

TEST_CASE("on-curve identity, symbolically and numerically") {
    CHECK(verify_G_identity_on_curve(200));

    // a couple of spot residuals directly
    const auto& tc = TrajectoryCurves::instance();
    for (double x : {0.3, 0.77}) {
        auto pars = intersection_params_at(x, branch_y_numeric(x, Branch::stable));
        double g = tc.G.eval<double>({pars.r1 + pars.r2, pars.r1 * pars.r2});
        CHECK(std::fabs(g) < 1e-9);
    }
}

TEST_CASE("trajectory samples") {
    auto pts = trajectory_samples(501);
    REQUIRE(pts.size() == 501);

    // grid includes the exact midpoint x = 251/502 = 1/2 -> (1/6, 1/6)
    const auto& mid = pts[250];
    CHECK(mid.x == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(mid.u == doctest::Approx(1.0 / 6).epsilon(1e-12));
    CHECK(mid.v == doctest::Approx(1.0 / 6).epsilon(1e-12));

    for (const auto& p : pts) {
        CHECK(p.k_residual < 1e-9);
        CHECK(p.u > 0);
        CHECK(p.v > 0);
        CHECK(p.u + p.v < 1);
    }

    // endpoints approach (0,0)
    CHECK(pts.front().u < 0.01);
    CHECK(pts.front().v < 0.01);
    CHECK(pts.back().u < 0.01);
    CHECK(pts.back().v < 0.01);

    CHECK_THROWS_AS(trajectory_samples(1), DomainError);
}

TEST_CASE("CSV export") {
    auto pts = trajectory_samples(10);
    std::string csv = trajectory_csv(pts);
    std::istringstream is(csv);
    std::string line;
    std::getline(is, line);
    CHECK(line == "x,y,u,v,K_residual");
    int rows = 0;
    while (std::getline(is, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 10);
    CHECK(csv == trajectory_csv(pts)); // deterministic
}
