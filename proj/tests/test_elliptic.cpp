#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "a4link/elliptic.hpp"
#include "a4link/spectral.hpp"
#include "a4link/unipoly.hpp"

#include <algorithm>
#include <map>

using namespace a4link;

TEST_CASE("distinguished point maps to (-276, 12960)") {
    EllipticPoint p = birational_map(BigRational(1, 2), BigRational(-1, 3));
    CHECK(!p.infinity);
    CHECK(p.U == BigRational(-276));
    CHECK(p.V == BigRational(12960));

    // on-model identity with plain integer arithmetic as the oracle:
    // 12960^2 = (-276)^3 - 384048*(-276) + 82988928
    BigInt lhs = BigInt(12960) * 12960;
    BigInt rhs = BigInt(-276) * (-276) * (-276) - BigInt(-384048) * 276 + BigInt(82988928);
    CHECK(lhs == BigInt(167961600));
    CHECK(lhs == rhs);
}

TEST_CASE("all nine rational points map; the exceptional line is clear") {
    BigRational min_den_abs;
    bool first = true;
    for (const auto& [x, y] : rational_points().affine) {
        EllipticPoint p = birational_map(x, y); // verifies the E0 equation
        CHECK(!p.infinity);
        BigRational den = (2 * x - 3 * y - 3).abs();
        if (first || den < min_den_abs) min_den_abs = den;
        first = false;
    }
    CHECK(min_den_abs == BigRational(1, 4)); // attained at (1/2, -3/4)

    // a point on the exceptional line 2x - 3y - 3 = 0
    CHECK_THROWS_AS(birational_map(BigRational(0), BigRational(-1), false), PoleError);
}

TEST_CASE("birational identity holds as a polynomial divisibility") {
    CHECK(verify_birational_identity());

    // independent transcription: the cleared numerator vanishes at (3,3)
    const VarList& XY = xy_vars();
    MPoly x = MPoly::var(XY, 0), y = MPoly::var(XY, 1);
    MPoly L = 2 * x - 3 * y - 3;
    MPoly NU = 1176 * x - 468 * y - 468;
    MPoly NV = BigRational(15552) * (x + y - 1);
    MPoly num = NV * NV * L - NU.pow(3) - BigRational(-384048) * (NU * L * L) -
                BigRational(82988928) * L.pow(3);
    CHECK(!num.is_zero());
    CHECK(num.eval<BigRational>({BigRational(3), BigRational(3)}).is_zero());
    CHECK(divides(SpectralCurve::instance().d8, num));
}

TEST_CASE("group law basics") {
    EllipticPoint p = EllipticPoint::affine(BigRational(-276), BigRational(12960));
    EllipticPoint o = EllipticPoint::identity();
    CHECK(ec_add(p, o) == p);
    CHECK(ec_add(o, p) == p);
    CHECK(ec_add(p, ec_neg(p)) == o);

    // doubling a 2-torsion point gives the identity
    EllipticPoint t2 = EllipticPoint::affine(BigRational(-708), BigRational(0));
    CHECK(ec_add(t2, t2) == o);

    // the distinguished image has order exactly 6
    CHECK(ec_order(p) == 6);
    CHECK(ec_mul(6, p) == o);
    CHECK(!(ec_mul(3, p) == o));
    CHECK(!(ec_mul(2, p) == o));

    // scalar multiplication is iterated addition, and negation inverts it
    CHECK(ec_mul(3, p) == ec_add(p, ec_add(p, p)));
    CHECK(ec_mul(-2, p) == ec_neg(ec_add(p, p)));
    CHECK(ec_mul(0, p) == o);

    // a point off the model is rejected
    CHECK_THROWS_AS(EllipticPoint::affine(BigRational(1), BigRational(1)), VerificationError);
}

TEST_CASE("torsion subgroup structure") {
    TorsionGroup tg = torsion_subgroup();
    CHECK(tg.elements.size() == 12);
    CHECK(tg.structure == std::pair<int, int>(2, 6));
    CHECK(tg.distinguished.U == BigRational(-276));
    CHECK(tg.distinguished_order == 6);

    // order multiset of Z/2 x Z/6: {1, 2,2,2, 3,3, 6,6,6,6,6,6}
    std::map<int, int> order_count;
    for (const auto& p : tg.elements) ++order_count[ec_order(p)];
    CHECK(order_count[1] == 1);
    CHECK(order_count[2] == 3);
    CHECK(order_count[3] == 2);
    CHECK(order_count[6] == 6);

    // the three 2-torsion abscissas are the rational roots of the cubic
    // (independent rational-root scan)
    UPoly cubic{BigRational(82988928), BigRational(-384048), BigRational(0), BigRational(1)};
    auto roots = rational_roots(cubic);
    CHECK(roots == std::vector<BigRational>{BigRational(-708), BigRational(264), BigRational(444)});
    for (const auto& r : roots) {
        EllipticPoint t = EllipticPoint::affine(r, BigRational(0));
        CHECK(std::find(tg.elements.begin(), tg.elements.end(), t) != tg.elements.end());
    }

    // exactly two closure-only points, the negatives of mapped ones
    REQUIRE(tg.without_affine_preimage.size() == 2);
    CHECK(tg.without_affine_preimage[0] == EllipticPoint::affine(BigRational(156), BigRational(-5184)));
    CHECK(tg.without_affine_preimage[1] == EllipticPoint::affine(BigRational(588), BigRational(7776)));

    // closed under negation
    for (const auto& p : tg.elements)
        CHECK(std::find(tg.elements.begin(), tg.elements.end(), ec_neg(p)) != tg.elements.end());
}

TEST_CASE("group axioms hold exhaustively on the torsion set") {
    TorsionGroup tg = torsion_subgroup();
    const auto& els = tg.elements;
    for (const auto& p : els)
        for (const auto& q : els) {
            EllipticPoint pq = ec_add(p, q);
            CHECK(pq == ec_add(q, p));
            // closure
            CHECK(std::find(els.begin(), els.end(), pq) != els.end());
        }
    for (const auto& p : els)
        for (const auto& q : els)
            for (const auto& r : els)
                CHECK(ec_add(ec_add(p, q), r) == ec_add(p, ec_add(q, r)));
}

TEST_CASE("model invariants and the Q-isomorphism") {
    ModelInvariantsReport inv = model_invariants_check();
    CHECK(inv.c4_E == BigRational(14224));
    CHECK(inv.c6_E == BigRational(-1536832));
    CHECK(inv.disc_E == BigRational(298598400));
    CHECK(inv.c4_E0 == BigRational(18434304));
    CHECK(inv.c6_E0 == BigRational(-71702433792));
    CHECK(inv.disc_E0 == BigRational(BigInt("649983722677862400")));
    CHECK(inv.scale_u == BigRational(6));
    CHECK(inv.isomorphic);

    // b-invariants of the long model, from the standard formulas
    const auto& E = model_E();
    CHECK(E.b2() == BigRational(196));
    CHECK(E.b4() == BigRational(1008));
    CHECK(E.b6() == BigRational(5184));
    CHECK(E.c4() * E.c4() * E.c4() - E.c6() * E.c6() == 1728 * E.discriminant());

    // scale factor oracle: 6^4 * 14224 and 6^6 * (-1536832)
    CHECK(BigInt(1296) * 14224 == BigInt(18434304));
    CHECK(BigInt(46656) * BigInt(-1536832) == BigInt("-71702433792"));
}

TEST_CASE("torsion report serialization") {
    Json j = torsion_subgroup().to_json();
    CHECK(j.at("points").size() == 12);
    CHECK(j.at("points").at(0).is_null()); // the identity
    CHECK(j.at("structure").at(0).get<int>() == 2);
    CHECK(j.at("structure").at(1).get<int>() == 6);
    CHECK(j.at("distinguished_image").at(0).get<std::string>() == "-276");
    CHECK(j.at("distinguished_image").at(1).get<std::string>() == "12960");
    CHECK(j.at("model").at("a").at(0).get<long>() == -384048);
    CHECK(j.at("model").at("a").at(1).get<long>() == 82988928);
}
