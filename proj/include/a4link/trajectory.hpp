#ifndef A4LINK_TRAJECTORY_HPP
#define A4LINK_TRAJECTORY_HPP

#include "a4link/mpoly.hpp"
#include "a4link/rational.hpp"

#include <string>
#include <vector>

namespace a4link {

/// The trajectory curve of the strut-triangle intersection point in
/// symmetric coordinates s = u+v, p = uv:
///   G(s,p) the transcribed polynomial, K(u,v) = G(u+v, uv) the symmetric
///   septic. Symmetry and degree are asserted at construction.
struct TrajectoryCurves {
    MPoly G; // in (s, p)
    MPoly K; // in (u, v)

    static const TrajectoryCurves& instance();
};

/// On-curve identity: substituting s = (N1+N2)/D, p = N1 N2 / D^2 into G and
/// clearing D^7 yields a polynomial divisible by d (reduction modulo d with
/// respect to y leaves zero). Also spot-checks |G| < 1e-9 at `samples`
/// numeric stable-branch points. Throws VerificationError with the residual
/// on symbolic failure.
bool verify_G_identity_on_curve(int samples = 200);

/// True iff K and both partial derivatives vanish exactly at (u, v).
bool singular_point_check(const BigRational& u, const BigRational& v);

struct TrajectoryPoint {
    double x, y;   // stress parameters on the stable branch
    double u, v;   // (R1, R2)
    double k_residual;
};

/// n stable-branch samples of (u,v) = (R1,R2), x on a uniform open grid
/// x_i = i/(n+1); every K-residual must be < 1e-9 (relative to the largest
/// monomial magnitude).
std::vector<TrajectoryPoint> trajectory_samples(int n);

/// CSV with header x,y,u,v,K_residual (17 significant digits).
std::string trajectory_csv(const std::vector<TrajectoryPoint>& pts);

} // namespace a4link

#endif
