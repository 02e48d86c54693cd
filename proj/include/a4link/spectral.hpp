#ifndef A4LINK_SPECTRAL_HPP
#define A4LINK_SPECTRAL_HPP

#include "a4link/mpoly.hpp"
#include "a4link/quadext.hpp"
#include "a4link/rational.hpp"

#include <array>
#include <utility>
#include <vector>

namespace a4link {

// Variable order (x, y) used by the whole spectral family.
const VarList& xy_vars();

/// The equilibrium-stress cubic and companions:
///   d      = x^2 y + 3x^2 - xy - 3y^2 - 3x - 3y
///   d8     = 8 d   (the determinant of the stress matrix)
///   disc_x = x^4 - 2x^3 + 31x^2 - 30x + 9  (discriminant of d in y, up to
///            a constant; strictly positive on [0,1])
struct SpectralCurve {
    MPoly d, d8, disc_x;

    // Builds the transcribed polynomials and certifies:
    //  - det Omega computed symbolically equals d8 (hard check),
    //  - disc_x has no real root in [0,1] (Sturm) and disc_x(1/2) > 0.
    static const SpectralCurve& instance();
};

/// Symbolic determinant of the stress matrix; must equal d8 exactly.
/// Throws VerificationError on mismatch with the transcribed expansion.
MPoly derive_spectral_cubic();

enum class Branch { stable, other };

/// Solve d(x,y) = 0 as a quadratic in y. The stable branch is
/// g(x) = (x^2 - x - 3 + sqrt(disc_x)) / 6; `other` takes the minus root.
/// Numeric relative error < 1e-12; the exact form is a QuadValue that
/// collapses to a rational whenever disc_x(x) is a rational square.
double branch_y_numeric(double x, Branch which);
QuadValue branch_y_exact(const BigRational& x, Branch which);

/// A point of the stress-parameter family. Exact points satisfy d = 0
/// exactly; numeric points to 1e-9 relative.
struct StressPoint {
    bool exact = false;
    BigRational xq, yq;
    double xd = 0, yd = 0;

    static StressPoint exact_point(BigRational x, BigRational y); // verifies d = 0
    static StressPoint numeric(double x, double y);               // verifies |d| small
    static StressPoint on_stable_branch(double x);

    double x_as_double() const { return exact ? xq.to_double() : xd; }
    double y_as_double() const { return exact ? yq.to_double() : yd; }
};

/// The twelve rational points of the projective cubic: nine affine pairs and
/// three points at infinity of the standard homogenization. Every membership
/// is verified exactly at construction (VerificationError otherwise).
struct RationalPointCatalog {
    std::vector<std::pair<BigRational, BigRational>> affine; // 9 points
    std::vector<std::array<int, 3>> infinite;                // 3 points (x:y:z)
};
const RationalPointCatalog& rational_points();

/// Strictly inside the stable arc: 0 < x < 1, -1/3 <= y < 0, and y is the
/// stable-branch value at x (exactly for exact points, 1e-9 for numeric).
bool is_stable(const StressPoint& pt);

} // namespace a4link

#endif
