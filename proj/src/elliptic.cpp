#include "a4link/elliptic.hpp"

#include "a4link/errors.hpp"
#include "a4link/mpoly.hpp"
#include "a4link/spectral.hpp"

#include <algorithm>
#include <set>

namespace a4link {

namespace {
const BigRational kA(-384048);
const BigRational kB(82988928);
} // namespace

const WeierstrassModel& model_E() {
    static const WeierstrassModel m{BigRational(2), BigRational(48), BigRational(72),
                                    BigRational(432), BigRational(0)};
    return m;
}

const WeierstrassModel& model_E0() {
    static const WeierstrassModel m{BigRational(0), BigRational(0), BigRational(0), kA, kB};
    return m;
}

static bool on_E0(const BigRational& u, const BigRational& v) {
    return v * v == u * u * u + kA * u + kB;
}

EllipticPoint EllipticPoint::affine(BigRational u, BigRational v) {
    if (!on_E0(u, v))
        throw VerificationError("EllipticPoint: (" + u.str() + ", " + v.str() +
                                ") does not satisfy E0");
    EllipticPoint p;
    p.infinity = false;
    p.U = std::move(u);
    p.V = std::move(v);
    return p;
}

EllipticPoint ec_neg(const EllipticPoint& p) {
    if (p.infinity) return p;
    EllipticPoint r = p;
    r.V = -r.V;
    return r;
}

EllipticPoint ec_add(const EllipticPoint& p, const EllipticPoint& q) {
    if (p.infinity) return q;
    if (q.infinity) return p;
    if (p.U == q.U && p.V == -q.V) return EllipticPoint::identity();
    BigRational lambda;
    if (p.U == q.U) {
        // doubling; V = 0 was handled above as p + (-p)
        lambda = (3 * (p.U * p.U) + kA) / (2 * p.V);
    } else {
        lambda = (q.V - p.V) / (q.U - p.U);
    }
    BigRational x3 = lambda * lambda - p.U - q.U;
    BigRational y3 = lambda * (p.U - x3) - p.V;
    EllipticPoint r;
    r.infinity = false;
    r.U = std::move(x3);
    r.V = std::move(y3);
    return r;
}

EllipticPoint ec_mul(long k, const EllipticPoint& p) {
    if (k < 0) return ec_mul(-k, ec_neg(p));
    EllipticPoint acc = EllipticPoint::identity();
    EllipticPoint base = p;
    while (k > 0) {
        if (k & 1) acc = ec_add(acc, base);
        k >>= 1;
        if (k > 0) base = ec_add(base, base);
    }
    return acc;
}

int ec_order(const EllipticPoint& p, int bound) {
    EllipticPoint acc = p;
    for (int k = 1; k <= bound; ++k) {
        if (acc.infinity) return k;
        acc = ec_add(acc, p);
    }
    return 0;
}

EllipticPoint birational_map(const BigRational& x, const BigRational& y, bool pt_on_curve) {
    BigRational den = 2 * x - 3 * y - 3;
    if (den.is_zero())
        throw PoleError("2x-3y-3", "(" + x.str() + ", " + y.str() + ")");
    BigRational u = (1176 * x - 468 * y - 468) / den;
    BigRational v = 15552 * (x + y - 1) / den;
    if (pt_on_curve) return EllipticPoint::affine(std::move(u), std::move(v)); // verifies E0
    EllipticPoint p;
    p.infinity = false;
    p.U = std::move(u);
    p.V = std::move(v);
    return p;
}

bool verify_birational_identity() {
    const VarList& XY = xy_vars();
    MPoly X = MPoly::var(XY, 0), Y = MPoly::var(XY, 1);
    MPoly L = 2 * X - 3 * Y - 3;
    MPoly NU = 1176 * X - 468 * Y - 468;
    MPoly NV = BigRational(15552) * (X + Y - 1);
    // numerator of V^2 - U^3 - kA U - kB over L^3
    MPoly num = NV * NV * L - NU.pow(3) - kA * (NU * L * L) - kB * L.pow(3);
    if (num.is_zero()) throw VerificationError("birational identity: cleared numerator is zero");
    const MPoly& d8 = SpectralCurve::instance().d8;
    MPoly q;
    if (!divides(d8, num, &q)) {
        auto [quot, rem] = div_rem(num, d8, 1);
        throw VerificationError("birational identity: numerator not divisible by d8; remainder " +
                                rem.str());
    }
    return true;
}

TorsionGroup torsion_subgroup() {
    const auto& catalog = rational_points();
    std::set<EllipticPoint> mapped;
    for (const auto& [x, y] : catalog.affine) mapped.insert(birational_map(x, y));

    std::set<EllipticPoint> closure = mapped;
    closure.insert(EllipticPoint::identity());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<EllipticPoint> cur(closure.begin(), closure.end());
        for (const auto& p : cur) {
            if (closure.insert(ec_neg(p)).second) grew = true;
            for (const auto& q : cur)
                if (closure.insert(ec_add(p, q)).second) grew = true;
        }
        if (closure.size() > 16)
            throw VerificationError("torsion closure exceeded 16 elements");
    }

    TorsionGroup tg;
    tg.elements.assign(closure.begin(), closure.end());
    if (tg.elements.size() != 12)
        throw VerificationError("torsion closure has " + std::to_string(tg.elements.size()) +
                                " elements, expected 12");

    // structure: exponent 6 and full 2-torsion force Z/2 x Z/6
    int two_torsion = 0, max_order = 0;
    const BigRational disc = model_E0().discriminant();
    for (const auto& p : tg.elements) {
        int ord = ec_order(p);
        if (ord == 0) throw VerificationError("torsion element of unexpectedly large order");
        max_order = std::max(max_order, ord);
        if (ord <= 2) ++two_torsion; // counts the identity as well
        if (!p.infinity) {
            // Nagell-Lutz: integral coordinates, and V = 0 or V^2 | disc
            if (!p.U.is_integer() || !p.V.is_integer())
                throw VerificationError("torsion point with non-integral coordinates");
            if (!p.V.is_zero()) {
                BigInt v2 = p.V.num() * p.V.num();
                if (!(disc.is_integer() && disc.num() % v2 == 0))
                    throw VerificationError("torsion point fails the Nagell-Lutz divisibility");
            }
        }
    }
    if (max_order != 6 || two_torsion != 4)
        throw VerificationError("torsion group is not Z/2 x Z/6: exponent " +
                                std::to_string(max_order) + ", 2-torsion count " +
                                std::to_string(two_torsion));
    tg.structure = {2, 6};

    tg.distinguished = birational_map(BigRational(1, 2), BigRational(-1, 3));
    tg.distinguished_order = ec_order(tg.distinguished);
    for (const auto& p : tg.elements)
        if (!p.infinity && !mapped.count(p)) tg.without_affine_preimage.push_back(p);
    return tg;
}

Json TorsionGroup::to_json() const {
    Json out;
    out["model"] = Json{{"a", {-384048, 82988928}}};
    Json pts = Json::array();
    for (const auto& p : elements) {
        if (p.infinity)
            pts.push_back(nullptr); // the identity (point at infinity)
        else
            pts.push_back({p.U.str(), p.V.str()});
    }
    out["points"] = std::move(pts);
    out["structure"] = {structure.first, structure.second};
    out["distinguished_image"] = {distinguished.U.str(), distinguished.V.str()};
    out["distinguished_order"] = distinguished_order;
    Json extra = Json::array();
    for (const auto& p : without_affine_preimage) extra.push_back({p.U.str(), p.V.str()});
    out["points_without_affine_preimage"] = std::move(extra);
    return out;
}

ModelInvariantsReport model_invariants_check() {
    const auto& E = model_E();
    const auto& E0 = model_E0();
    ModelInvariantsReport r;
    r.c4_E = E.c4();
    r.c6_E = E.c6();
    r.disc_E = E.discriminant();
    r.c4_E0 = E0.c4();
    r.c6_E0 = E0.c6();
    r.disc_E0 = E0.discriminant();

    auto check_c4c6 = [](const BigRational& c4, const BigRational& c6, const BigRational& disc,
                         const char* which) {
        if (!(c4 * c4 * c4 - c6 * c6 == 1728 * disc))
            throw VerificationError(std::string("model invariants: c4^3 - c6^2 != 1728 disc for ") +
                                    which);
        if (disc.is_zero())
            throw VerificationError(std::string("model invariants: singular model ") + which);
    };
    check_c4c6(r.c4_E, r.c6_E, r.disc_E, "E");
    check_c4c6(r.c4_E0, r.c6_E0, r.disc_E0, "E0");

    // find rational u with c4(E0) = u^4 c4(E) and c6(E0) = u^6 c6(E)
    BigRational ratio4 = r.c4_E0 / r.c4_E;   // u^4
    BigRational ratio6 = r.c6_E0 / r.c6_E;   // u^6
    BigRational u2 = ratio6 / ratio4;        // u^2
    if (u2.sign() <= 0 || !u2.is_perfect_square())
        throw VerificationError("model invariants: no rational scale factor");
    BigRational u = u2.sqrt_exact();
    if (!(u.pow(4) == ratio4 && u.pow(6) == ratio6))
        throw VerificationError("model invariants: scale factor fails the c4/c6 equations");
    r.scale_u = u;
    r.isomorphic = true;
    return r;
}

Json ModelInvariantsReport::to_json() const {
    Json out;
    out["E"] = Json{{"c4", c4_E.str()}, {"c6", c6_E.str()}, {"disc", disc_E.str()}};
    out["E0"] = Json{{"c4", c4_E0.str()}, {"c6", c6_E0.str()}, {"disc", disc_E0.str()}};
    out["scale_u"] = scale_u.str();
    out["isomorphic"] = isomorphic;
    return out;
}

} // namespace a4link
