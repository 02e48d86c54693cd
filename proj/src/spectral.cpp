#include "a4link/spectral.hpp"

#include "a4link/framework.hpp"
#include "a4link/unipoly.hpp"

#include <cmath>

namespace a4link {

const VarList& xy_vars() {
    static const VarList v{"x", "y"};
    return v;
}

MPoly derive_spectral_cubic() {
    auto omega = stress_matrix();
    std::vector<std::vector<MPoly>> m(3, std::vector<MPoly>(3));
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) m[i][j] = omega[i][j];
    MPoly det = det_bareiss(std::move(m));

    const VarList& XY = xy_vars();
    MPoly X = MPoly::var(XY, 0), Y = MPoly::var(XY, 1);
    MPoly d = X * X * Y + 3 * (X * X) - X * Y - 3 * (Y * Y) - 3 * X - 3 * Y;
    MPoly d8 = BigRational(8) * d;
    if (!(det == d8))
        throw VerificationError("derive_spectral_cubic: det Omega != 8(x^2 y + 3x^2 - xy - 3y^2 - 3x - 3y); got " +
                                det.str());
    return det;
}

const SpectralCurve& SpectralCurve::instance() {
    static const SpectralCurve curve = [] {
        const VarList& XY = xy_vars();
        MPoly X = MPoly::var(XY, 0), Y = MPoly::var(XY, 1);
        SpectralCurve c;
        c.d = X * X * Y + 3 * (X * X) - X * Y - 3 * (Y * Y) - 3 * X - 3 * Y;
        c.d8 = derive_spectral_cubic(); // hard-checks against 8*d
        if (!(c.d8 == BigRational(8) * c.d)) throw VerificationError("SpectralCurve: d8 != 8d");
        MPoly X2 = X * X;
        c.disc_x = X2 * X2 - 2 * (X2 * X) + 31 * X2 - 30 * X + 9;
        // transcription check: disc_x is the y-discriminant of d up to the
        // constant (-3)^2... d = -3y^2 + (x^2-x-3)y + (3x^2-3x), so
        // disc = (x^2-x-3)^2 + 12(3x^2-3x) must equal disc_x exactly.
        MPoly b = X2 - X - 3, cc = 3 * X2 - 3 * X;
        if (!(b * b + 12 * cc == c.disc_x))
            throw VerificationError("SpectralCurve: disc_x transcription mismatch");
        // positivity certificate on [0,1]: no real roots there, positive at 1/2
        auto roots = sturm_isolate(c.disc_x, Interval(BigRational(-1, 100), BigRational(101, 100)));
        if (!roots.empty())
            throw VerificationError("SpectralCurve: disc_x unexpectedly vanishes near [0,1]");
        BigRational at_half = c.disc_x.eval<BigRational>({BigRational(1, 2), BigRational(0)});
        if (!(at_half == BigRational(25, 16)))
            throw VerificationError("SpectralCurve: disc_x(1/2) != 25/16");
        return c;
    }();
    return curve;
}

double branch_y_numeric(double x, Branch which) {
    if (which == Branch::stable && (x < 0 || x > 1))
        throw DomainError("branch_y: stable branch requires 0 <= x <= 1");
    double disc = ((x - 2) * x * x + 31 * x - 30) * x + 9;
    double root = std::sqrt(disc);
    double quad = x * x - x - 3;
    return which == Branch::stable ? (quad + root) / 6 : (quad - root) / 6;
}

QuadValue branch_y_exact(const BigRational& x, Branch which) {
    if (which == Branch::stable && (x.sign() < 0 || x > BigRational(1)))
        throw DomainError("branch_y: stable branch requires 0 <= x <= 1");
    const auto& curve = SpectralCurve::instance();
    BigRational disc = curve.disc_x.eval<BigRational>({x, BigRational(0)});
    if (disc.sign() < 0) throw DomainError("branch_y: negative discriminant");
    BigRational quad = x * x - x - 3;
    BigRational sixth(1, 6);
    QuadValue root = QuadValue(BigRational(0), which == Branch::stable ? sixth : -sixth, disc);
    return QuadValue(quad * sixth) + root;
}

StressPoint StressPoint::exact_point(BigRational x, BigRational y) {
    const auto& curve = SpectralCurve::instance();
    if (!curve.d.eval<BigRational>({x, y}).is_zero())
        throw DomainError("StressPoint: (" + x.str() + ", " + y.str() + ") is not on the curve");
    StressPoint pt;
    pt.exact = true;
    pt.xq = std::move(x);
    pt.yq = std::move(y);
    pt.xd = pt.xq.to_double();
    pt.yd = pt.yq.to_double();
    return pt;
}

StressPoint StressPoint::numeric(double x, double y) {
    const auto& curve = SpectralCurve::instance();
    double dv = curve.d.eval<double>({x, y});
    double scale = std::max({1.0, std::fabs(x), std::fabs(y)});
    if (std::fabs(dv) > 1e-9 * scale * scale * scale)
        throw DomainError("StressPoint: numeric point too far from the curve");
    StressPoint pt;
    pt.exact = false;
    pt.xd = x;
    pt.yd = y;
    return pt;
}

StressPoint StressPoint::on_stable_branch(double x) {
    return numeric(x, branch_y_numeric(x, Branch::stable));
}

const RationalPointCatalog& rational_points() {
    static const RationalPointCatalog catalog = [] {
        RationalPointCatalog c;
        auto Q = [](long n, long d = 1) { return BigRational(n, d); };
        c.affine = {
            {Q(1), Q(0)},      {Q(3), Q(3)},   {Q(1, 2), Q(-1, 3)},
            {Q(0), Q(0)},      {Q(-2), Q(3)},  {Q(3), Q(-2)},
            {Q(1), Q(-1)},     {Q(1, 2), Q(-3, 4)}, {Q(-2), Q(-2)},
        };
        c.infinite = {{0, 1, 0}, {1, 0, 0}, {0, -1, 1}};

        const auto& curve = SpectralCurve::instance();
        for (const auto& [x, y] : c.affine)
            if (!curve.d.eval<BigRational>({x, y}).is_zero())
                throw VerificationError("rational_points: (" + x.str() + ", " + y.str() +
                                        ") fails d = 0");
        // projective closure x^2 y + 3 x^2 z - xyz - 3 y^2 z - 3 x z^2 - 3 y z^2
        const VarList XYZ{"x", "y", "z"};
        MPoly X = MPoly::var(XYZ, 0), Y = MPoly::var(XYZ, 1), Z = MPoly::var(XYZ, 2);
        MPoly dh = X * X * Y + 3 * (X * X * Z) - X * Y * Z - 3 * (Y * Y * Z) - 3 * (X * Z * Z) -
                   3 * (Y * Z * Z);
        for (const auto& p : c.infinite) {
            BigRational v = dh.eval<BigRational>({BigRational(p[0]), BigRational(p[1]), BigRational(p[2])});
            if (!v.is_zero())
                throw VerificationError("rational_points: infinite point fails the projective closure");
        }
        return c;
    }();
    return catalog;
}

bool is_stable(const StressPoint& pt) {
    if (pt.exact) {
        if (!(pt.xq.sign() > 0 && pt.xq < BigRational(1))) return false;
        if (!(pt.yq >= BigRational(-1, 3) && pt.yq.sign() < 0)) return false;
        QuadValue g = branch_y_exact(pt.xq, Branch::stable);
        return g.is_rational() && g.to_rational() == pt.yq;
    }
    if (!(pt.xd > 0 && pt.xd < 1)) return false;
    if (!(pt.yd >= -1.0 / 3 - 1e-9 && pt.yd < 0)) return false;
    double g = branch_y_numeric(pt.xd, Branch::stable);
    return std::fabs(pt.yd - g) <= 1e-9 * std::max(1.0, std::fabs(g));
}

} // namespace a4link
