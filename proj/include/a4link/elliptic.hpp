#ifndef A4LINK_ELLIPTIC_HPP
#define A4LINK_ELLIPTIC_HPP

#include "a4link/io.hpp"
#include "a4link/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace a4link {

/// Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 with
/// the standard derived quantities.
struct WeierstrassModel {
    BigRational a1, a2, a3, a4, a6;

    BigRational b2() const { return a1 * a1 + 4 * a2; }
    BigRational b4() const { return 2 * a4 + a1 * a3; }
    BigRational b6() const { return a3 * a3 + 4 * a6; }
    BigRational b8() const {
        return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * (a3 * a3) - a4 * a4;
    }
    BigRational c4() const { return b2() * b2() - 24 * b4(); }
    BigRational c6() const {
        return -(b2() * b2() * b2()) + 36 * (b2() * b4()) - 216 * b6();
    }
    BigRational discriminant() const {
        BigRational B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
        return -(B2 * B2 * B8) - 8 * (B4 * B4 * B4) - 27 * (B6 * B6) + 9 * (B2 * B4 * B6);
    }
};

/// The two models of the spectral elliptic curve:
///   E:  Y^2 + 2XY + 72Y = X^3 + 48X^2 + 432X
///   E0: V^2 = U^3 - 384048 U + 82988928
const WeierstrassModel& model_E();
const WeierstrassModel& model_E0();

/// Point of E0: identity (at infinity) or an affine pair verified on-model.
struct EllipticPoint {
    bool infinity = true;
    BigRational U, V;

    static EllipticPoint identity() { return EllipticPoint{}; }
    static EllipticPoint affine(BigRational u, BigRational v); // verifies the E0 equation
    friend bool operator==(const EllipticPoint& a, const EllipticPoint& b) {
        if (a.infinity || b.infinity) return a.infinity == b.infinity;
        return a.U == b.U && a.V == b.V;
    }
    friend bool operator<(const EllipticPoint& a, const EllipticPoint& b) {
        if (a.infinity != b.infinity) return a.infinity; // identity sorts first
        if (a.infinity) return false;
        return a.U != b.U ? a.U < b.U : a.V < b.V;
    }
};

/// Chord-tangent group law on E0, exact rational arithmetic.
EllipticPoint ec_neg(const EllipticPoint& p);
EllipticPoint ec_add(const EllipticPoint& p, const EllipticPoint& q);
EllipticPoint ec_mul(long k, const EllipticPoint& p);
/// Order of a point, searched up to `bound` (0 past the bound).
int ec_order(const EllipticPoint& p, int bound = 16);

/// Image of a spectral-curve point under
///   U = (1176x - 468y - 468)/(2x - 3y - 3),
///   V = 15552(x + y - 1)/(2x - 3y - 3);
/// throws PoleError on the exceptional line 2x - 3y - 3 = 0. When
/// `pt_on_curve` the result is verified to satisfy E0 exactly.
EllipticPoint birational_map(const BigRational& x, const BigRational& y, bool pt_on_curve = true);

/// Polynomial identity: the numerator of V^2 - U^3 + 384048 U - 82988928
/// after clearing (2x-3y-3)^3 is divisible by d8. Returns true; throws
/// VerificationError with the residual on failure.
bool verify_birational_identity();

struct TorsionGroup {
    std::vector<EllipticPoint> elements; // sorted, identity first
    std::pair<int, int> structure;       // (m, n) meaning Z/m x Z/n
    EllipticPoint distinguished;         // image of (1/2, -1/3)
    int distinguished_order = 0;
    std::vector<EllipticPoint> without_affine_preimage; // closure-only points
    Json to_json() const;
};

/// Closure of the mapped rational points under the group law; certifies 12
/// elements with structure Z/2 x Z/6 and Nagell-Lutz integrality of every
/// affine element.
TorsionGroup torsion_subgroup();

struct ModelInvariantsReport {
    BigRational c4_E, c6_E, disc_E;
    BigRational c4_E0, c6_E0, disc_E0;
    BigRational scale_u; // c4(E0) = u^4 c4(E), c6(E0) = u^6 c6(E)
    bool isomorphic = false;
    Json to_json() const;
};

/// Computes both models' invariants, checks c4^3 - c6^2 = 1728 disc for each,
/// and certifies the Q-isomorphism by exhibiting the scale factor.
ModelInvariantsReport model_invariants_check();

} // namespace a4link

#endif
