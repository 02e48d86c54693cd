#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "a4link/linking.hpp"

#include <cmath>

using namespace a4link;

namespace {

MPoly X() { return MPoly::var(xy_vars(), 0); }
MPoly Y() { return MPoly::var(xy_vars(), 1); }

// Expanded denominator and numerators as printed in the figure source;
// independent transcription used to pin the factored forms.
MPoly den_expanded() {
    MPoly x = X(), y = Y();
    return 8 * (x.pow(5) * y) + 6 * (x.pow(3) * y.pow(3)) - 60 * (x.pow(4) * y) -
           12 * (x.pow(3) * y.pow(2)) - 45 * (x.pow(2) * y.pow(3)) - 12 * x.pow(4) +
           162 * (x.pow(3) * y) + 33 * (x.pow(2) * y.pow(2)) + 117 * (x * y.pow(3)) +
           60 * x.pow(3) - 167 * (x.pow(2) * y) + 51 * (x * y.pow(2)) - 105 * y.pow(3) -
           93 * x.pow(2) + 75 * (x * y) - 153 * y.pow(2) + 45 * x - 99 * y - 27;
}

MPoly numR1_expanded() {
    MPoly x = X(), y = Y();
    return 8 * x.pow(6) + 20 * (x.pow(5) * y) - 14 * (x.pow(4) * y.pow(2)) -
           17 * (x.pow(3) * y.pow(3)) + 9 * (x.pow(2) * y.pow(4)) - 36 * x.pow(5) -
           132 * (x.pow(4) * y) + 39 * (x.pow(3) * y.pow(2)) + 108 * (x.pow(2) * y.pow(3)) -
           36 * (x * y.pow(4)) + 18 * x.pow(4) + 285 * (x.pow(3) * y) +
           66 * (x.pow(2) * y.pow(2)) - 210 * (x * y.pow(3)) + 27 * y.pow(4) + 85 * x.pow(3) -
           200 * (x.pow(2) * y) - 220 * (x * y.pow(2)) + 119 * y.pow(3) - 111 * x.pow(2) -
           18 * (x * y) + 129 * y.pow(2) + 36 * x + 45 * y;
}

MPoly numR2_expanded() {
    MPoly x = X(), y = Y();
    return BigRational(-8) * x.pow(6) + 4 * (x.pow(5) * y) + 30 * (x.pow(4) * y.pow(2)) -
           5 * (x.pow(3) * y.pow(3)) - 9 * (x.pow(2) * y.pow(4)) + 36 * x.pow(5) -
           171 * (x.pow(3) * y.pow(2)) - 15 * (x.pow(2) * y.pow(3)) + 54 * (x * y.pow(4)) -
           54 * x.pow(4) - 87 * (x.pow(3) * y) + 297 * (x.pow(2) * y.pow(2)) +
           135 * (x * y.pow(3)) - 72 * y.pow(4) + 23 * x.pow(3) + 239 * (x.pow(2) * y) -
           93 * (x * y.pow(2)) - 196 * y.pow(3) + 48 * x.pow(2) - 147 * (x * y) -
           144 * y.pow(2) - 45 * x - 36 * y;
}

} // namespace

TEST_CASE("factored forms expand to the plotted polynomials") {
    const auto& f = IntersectionFormulas::instance(); // Cramer re-derivation runs here
    CHECK(f.D == den_expanded());
    CHECK(f.N1 == numR1_expanded());
    CHECK(f.N2 == numR2_expanded());

    // leading y^3 coefficient of Q1 in x is 9x - 27
    auto coeffs = f.Q1.coeffs_in(1);
    REQUIRE(coeffs.size() == 4);
    CHECK(coeffs[3] == 9 * X() - 27);
}

TEST_CASE("intersection parameters at the distinguished point") {
    auto pars = intersection_params_at(BigRational(1, 2), BigRational(-1, 3));
    CHECK(pars.tau == BigRational(1, 2));
    CHECK(pars.r1 == BigRational(1, 6));
    CHECK(pars.r2 == BigRational(1, 6));
    CHECK(pars.cls == CrossingClass::interior_crossing);

    // supporting values
    const auto& f = IntersectionFormulas::instance();
    std::vector<BigRational> pt{BigRational(1, 2), BigRational(-1, 3)};
    CHECK(f.N_tau.eval<BigRational>(pt) == BigRational(-5, 6));
    CHECK(f.D_tau.eval<BigRational>(pt) == BigRational(-5, 3));

    // the other branch at x = 1/2 is a pole of tau: D_tau(1/2, -3/4) = 0
    CHECK(f.D_tau.eval<BigRational>({BigRational(1, 2), BigRational(-3, 4)}).is_zero());
    CHECK_THROWS_AS(intersection_params_at(BigRational(1, 2), BigRational(-3, 4)), PoleError);
    try {
        intersection_params_at(BigRational(1, 2), BigRational(-3, 4));
    } catch (const PoleError& e) {
        CHECK(e.denominator == "D_tau");
    }
}

TEST_CASE("exact parameters at a quadratic-irrational point") {
    QuadValue y = branch_y_exact(BigRational(1, 3), Branch::stable);
    auto pars = intersection_params_at(BigRational(1, 3), y);
    CHECK(pars.cls == CrossingClass::interior_crossing);
    CHECK(pars.tau.sign() > 0);
    CHECK((QuadValue(1) - pars.tau).sign() > 0);
    // numeric agreement with the double pipeline
    auto nd = intersection_params_at(1.0 / 3, branch_y_numeric(1.0 / 3, Branch::stable));
    CHECK(pars.tau.to_double() == doctest::Approx(nd.tau).epsilon(1e-12));
    CHECK(pars.r1.to_double() == doctest::Approx(nd.r1).epsilon(1e-12));
}

TEST_CASE("figure-grid regression at x = 0.02") {
    double y = branch_y_numeric(0.02, Branch::stable);
    auto pars = intersection_params_at(0.02, y);
    CHECK(std::fabs(pars.r1 - 0.006622864) < 1e-6);
    CHECK(std::fabs(pars.r2 - 0.006801155) < 1e-6);
}

TEST_CASE("formulas agree with the direct linear-system solve") {
    for (int i = 1; i <= 200; ++i) {
        double x = i / 201.0;
        auto direct = intersection_params_direct(x);
        auto formula = intersection_params_at(x, branch_y_numeric(x, Branch::stable));
        CHECK(std::fabs(direct.tau - formula.tau) < 1e-9);
        CHECK(std::fabs(direct.r1 - formula.r1) < 1e-9);
        CHECK(std::fabs(direct.r2 - formula.r2) < 1e-9);
    }
}

TEST_CASE("interior crossing along the whole stable arc") {
    for (int i = 1; i <= 200; ++i) {
        double x = i / 201.0;
        auto pars = intersection_params_at(x, branch_y_numeric(x, Branch::stable));
        CHECK(pars.cls == CrossingClass::interior_crossing);
        CHECK(pars.tau > 0);
        CHECK(pars.tau < 1);
        CHECK(pars.r1 > 0);
        CHECK(pars.r2 > 0);
        CHECK(pars.r1 + pars.r2 < 1);
    }
}

TEST_CASE("swap symmetry of the trajectory locus") {
    // the involution x -> 1-x exchanges (R1, R2); grid points pair up exactly
    const int n = 500;
    std::vector<std::pair<double, double>> vals(n + 1);
    for (int i = 1; i <= n; ++i) {
        double x = static_cast<double>(i) / (n + 1);
        auto pars = intersection_params_at(x, branch_y_numeric(x, Branch::stable));
        vals[static_cast<size_t>(i)] = {pars.r1, pars.r2};
    }
    for (int i = 1; i <= n; ++i) {
        auto [r1, r2] = vals[static_cast<size_t>(i)];
        auto [s1, s2] = vals[static_cast<size_t>(n + 1 - i)];
        CHECK(std::fabs(r1 - s2) < 1e-3);
        CHECK(std::fabs(r2 - s1) < 1e-3);
    }
}

TEST_CASE("hopf pair at the distinguished point, exactly") {
    Framework<BigRational> fw = realize_at(BigRational(1, 2), BigRational(-1, 3));
    // triangle 0 contains node 0 (p0); find the triangle of rho(c1) p0
    const A4& g = A4::instance();
    int tri_a = -1, tri_b = -1;
    for (int t = 0; t < 4; ++t) {
        for (int k = 0; k < 3; ++k) {
            if (fw.triangles[static_cast<size_t>(t)][static_cast<size_t>(k)] == g.identity()) tri_a = t;
            if (fw.triangles[static_cast<size_t>(t)][static_cast<size_t>(k)] == g.c1()) tri_b = t;
        }
    }
    REQUIRE(tri_a >= 0);
    REQUIRE(tri_b >= 0);
    REQUIRE(tri_a != tri_b);
    int lk = triangle_pair_linking(fw, tri_a, tri_b);
    CHECK(std::abs(lk) == 1);

    CHECK_THROWS_AS(triangle_pair_linking(fw, tri_a, tri_a), DomainError);
    CHECK_THROWS_AS(triangle_pair_linking(fw, 0, 5), DomainError);

    LinkingMatrix m = linking_matrix(fw);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i == j)
                CHECK(m[static_cast<size_t>(i)][static_cast<size_t>(j)] == 0);
            else
                CHECK(std::abs(m[static_cast<size_t>(i)][static_cast<size_t>(j)]) == 1);
        }
}

TEST_CASE("linking numerics across the arc") {
    // symmetry of the pair function at x = 0.3
    Framework<double> fw03 = realize_stable(0.3);
    CHECK(triangle_pair_linking(fw03, 0, 2) == triangle_pair_linking(fw03, 2, 0));

    for (double x : {0.1, 0.5, 0.9}) {
        Framework<double> fw = realize_stable(x);
        LinkingOptions opt;
        opt.margin = 1e-6; // every decision must clear a generous margin
        LinkingMatrix m = linking_matrix(fw, opt);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                if (i == j)
                    CHECK(m[static_cast<size_t>(i)][static_cast<size_t>(j)] == 0);
                else
                    CHECK(std::abs(m[static_cast<size_t>(i)][static_cast<size_t>(j)]) == 1);
            }
    }

    // exact linking at the quadratic-irrational point x = 1/3
    Framework<QuadValue> fq = realize_at(BigRational(1, 3), branch_y_exact(BigRational(1, 3), Branch::stable));
    LinkingMatrix mq = linking_matrix(fq);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) CHECK(std::abs(mq[static_cast<size_t>(i)][static_cast<size_t>(j)]) == 1);

    // 200-sample stability of the linking matrix
    for (int i = 1; i <= 200; ++i) {
        double x = i / 201.0;
        LinkingMatrix m = linking_matrix(realize_stable(x));
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                if (a != b) CHECK(std::abs(m[static_cast<size_t>(a)][static_cast<size_t>(b)]) == 1);
    }
}

TEST_CASE("degenerate configurations are rejected, not rounded") {
    // two triangles sharing a vertex
    Framework<double> fw = realize_stable(0.4);
    fw.nodes[static_cast<size_t>(fw.triangles[1][0])] = fw.nodes[static_cast<size_t>(fw.triangles[0][0])];
    CHECK_THROWS_AS(triangle_pair_linking(fw, 0, 1), DegenerateConfiguration);
}

TEST_CASE("persistence certificate: verdict and per-function records") {
    CertificateReport cert = persistence_certificate();
    CHECK(cert.verdict);
    CHECK(cert.disc_positive_on_01);
    REQUIRE(cert.functions.size() == 7);

    const auto& ntau = cert.function("N_tau");
    CHECK(ntau.paper_factorization_matches.has_value());
    CHECK(*ntau.paper_factorization_matches);
    CHECK(ntau.factorization_global_sign == 1);
    CHECK(ntau.roots_in_01.empty());
    CHECK(ntau.sign_at_half == -1);
    CHECK(ntau.value_at_half == BigRational(-5, 6));
    CHECK(ntau.rational_roots_all ==
          std::vector<BigRational>{BigRational(-2), BigRational(0), BigRational(1), BigRational(3)});

    const auto& dtau = cert.function("D_tau");
    CHECK(*dtau.paper_factorization_matches);
    REQUIRE(dtau.roots_in_01.size() == 1);
    CHECK(dtau.roots_in_01[0].exact);
    CHECK(dtau.roots_in_01[0].lo == BigRational(1, 2));
    CHECK(!dtau.roots_in_01[0].on_stable_branch);
    CHECK(dtau.roots_in_01[0].note.find("other branch") != std::string::npos);
    CHECK(dtau.value_at_half == BigRational(-5, 3));
    CHECK(dtau.sign_constant);
    CHECK(dtau.rational_roots_all ==
          std::vector<BigRational>{BigRational(1, 2), BigRational(1), BigRational(3)});

    const auto& n1 = cert.function("N1");
    CHECK(*n1.paper_factorization_matches);
    CHECK(n1.roots_in_01.empty());
    CHECK(n1.value_at_half == BigRational(-125, 216));

    const auto& dm = cert.function("D-N1-N2");
    CHECK(!dm.paper_factorization_matches.has_value());
    REQUIRE(dm.roots_in_01.size() == 1);
    CHECK(dm.roots_in_01[0].lo == BigRational(1, 2));
    CHECK(!dm.roots_in_01[0].on_stable_branch);
    CHECK(dm.has_factor_D_tau);
    CHECK(dm.value_at_half == BigRational(-125, 54));

    // every tracked function is strictly negative at the anchor, so
    // tau = N_tau/D_tau > 0, R1 > 0, R2 > 0, tau < 1, R1+R2 < 1 throughout
    for (const auto& f : cert.functions) {
        CHECK(f.sign_at_half == -1);
        CHECK(f.sign_constant);
    }

    // serialization carries the spec'd keys
    Json j = cert.to_json();
    CHECK(j.at("verdict").get<bool>());
    CHECK(j.at("functions").size() == 7);
    CHECK(j.at("functions").at(0).at("name").get<std::string>() == "N_tau");
    CHECK(j.at("functions").at(0).at("sign_at_half").get<std::string>() == "-");
    CHECK(j.at("functions").at(1).at("roots_in_01").at(0).at("lo").get<std::string>() == "1/2");
}

TEST_CASE("certificate roots bracket sign changes when refined") {
    CertificateReport cert = persistence_certificate();
    for (const auto& f : cert.functions) {
        UPoly res = ufrom_mpoly(f.resultant, 0);
        UPoly sf = squarefree_part(res);
        for (const auto& r : f.roots_in_01) {
            if (r.exact) {
                CHECK(ueval(res, r.lo).is_zero());
            } else {
                IsolatingInterval iv{r.lo, r.hi, 1};
                auto refined = refine_root(sf, iv, BigRational(1, 1000000000000L));
                if (!refined.is_exact())
                    CHECK(ueval(sf, refined.lo).sign() * ueval(sf, refined.hi).sign() < 0);
            }
        }
    }
}

TEST_CASE("interval certification decides an irrational sample root") {
    // synthetic resultant with the irrational root sqrt(1/2) inside (0,1)
    MPoly x = X();
    MPoly res = 2 * (x * x) - 1;
    UPoly res_u = ufrom_mpoly(res, 0);
    auto roots = sturm_isolate(res_u, Interval(BigRational(0), BigRational(1)));
    REQUIRE(roots.size() == 1);
    REQUIRE(!roots[0].is_exact());

    const auto& f = IntersectionFormulas::instance();
    RootRecord rec = certify_root_on_stable_branch(roots[0], squarefree_part(res_u), f.D_tau);
    CHECK(rec.decided);
    CHECK(!rec.on_stable_branch);
    CHECK(rec.stable_value.front() == '-'); // D_tau < 0 on the arc
}

TEST_CASE("remark: resultant roots coincide with rational-point x-coordinates") {
    CertificateReport cert = persistence_certificate();
    RemarkReport rep = remark_check(cert);
    CHECK(rep.pattern_holds);
    CHECK(rep.roots_subset_of_point_xs);
    CHECK(rep.half_only_via_D_tau);
    CHECK(rep.union_of_roots ==
          std::vector<BigRational>{BigRational(-2), BigRational(0), BigRational(1, 2), BigRational(1),
                                   BigRational(3)});

    // 1/2 appears exactly in the records of the D_tau-divisible denominators
    for (const auto& [name, roots] : rep.roots_by_function) {
        bool has_half =
            std::find(roots.begin(), roots.end(), BigRational(1, 2)) != roots.end();
        bool is_dtau_multiple = (name == "D_tau" || name == "D" || name == "D-N1-N2");
        CHECK(has_half == is_dtau_multiple);
    }
}
