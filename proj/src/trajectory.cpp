#include "a4link/trajectory.hpp"

#include "a4link/io.hpp"
#include "a4link/linking.hpp"
#include "a4link/spectral.hpp"

#include <cmath>
#include <sstream>

namespace a4link {

const TrajectoryCurves& TrajectoryCurves::instance() {
    static const TrajectoryCurves tc = [] {
        const VarList SP{"s", "p"};
        MPoly S = MPoly::var(SP, 0), Pp = MPoly::var(SP, 1);
        TrajectoryCurves t;
        t.G = 3 * S.pow(7) - 7 * S.pow(6) - 6 * (S.pow(5) * Pp) - S.pow(5) + 8 * (S.pow(4) * Pp) +
              3 * (S.pow(3) * Pp.pow(2)) + 5 * S.pow(4) + 28 * (S.pow(3) * Pp) -
              S.pow(2) * Pp.pow(2) - 3 * S.pow(3) - 24 * (S.pow(2) * Pp) - 24 * (S * Pp.pow(2)) +
              S.pow(2) + 12 * (S * Pp) - 4 * Pp;

        const VarList UV{"u", "v"};
        MPoly U = MPoly::var(UV, 0), V = MPoly::var(UV, 1);
        t.K = t.G.subst({U + V, U * V});

        // hard checks: symmetry and total degree 7
        MPoly K_swapped = t.K.subst({MPoly::var(UV, 1), MPoly::var(UV, 0)});
        if (!(t.K == K_swapped))
            throw VerificationError("TrajectoryCurves: K(u,v) != K(v,u)");
        if (t.K.total_degree() != 7)
            throw VerificationError("TrajectoryCurves: deg K = " +
                                    std::to_string(t.K.total_degree()) + ", expected 7");
        return t;
    }();
    return tc;
}

bool verify_G_identity_on_curve(int samples) {
    const auto& f = IntersectionFormulas::instance();
    const auto& curve = SpectralCurve::instance();
    const auto& tc = TrajectoryCurves::instance();
    const size_t yvar = 1;

    // work in Q[x,y]/(d): reduce every operand and every product modulo d
    auto red = [&](const MPoly& g) { return div_rem(g, curve.d, yvar).second; };
    MPoly S1 = red(f.N1 + f.N2);   // numerator of s = (N1+N2)/D
    MPoly P1 = red(f.N1 * f.N2);   // numerator of p over D^2
    MPoly Dm = red(f.D);

    // precompute reduced powers
    std::vector<MPoly> s_pow{MPoly::constant(xy_vars(), BigRational(1))};
    std::vector<MPoly> p_pow{MPoly::constant(xy_vars(), BigRational(1))};
    std::vector<MPoly> d_pow{MPoly::constant(xy_vars(), BigRational(1))};
    for (int i = 1; i <= 7; ++i) {
        s_pow.push_back(red(s_pow.back() * S1));
        p_pow.push_back(red(p_pow.back() * P1));
        d_pow.push_back(red(d_pow.back() * Dm));
    }

    MPoly acc(xy_vars());
    for (const auto& [e, c] : tc.G.terms()) {
        int a = e[0], b = e[1];
        int dpow = 7 - a - 2 * b;
        if (dpow < 0)
            throw VerificationError("verify_G_identity: G has weight above 7");
        MPoly term = c * red(red(s_pow[static_cast<size_t>(a)] * p_pow[static_cast<size_t>(b)]) *
                             d_pow[static_cast<size_t>(dpow)]);
        acc += term;
    }
    MPoly residual = red(acc);
    if (!residual.is_zero())
        throw VerificationError("verify_G_identity: reduced numerator nonzero: " + residual.str());

    // numeric spot check along the stable branch
    for (int i = 1; i <= samples; ++i) {
        double x = static_cast<double>(i) / (samples + 1);
        double y = branch_y_numeric(x, Branch::stable);
        auto pars = intersection_params_at(x, y);
        double s = pars.r1 + pars.r2, p = pars.r1 * pars.r2;
        double g = tc.G.eval<double>({s, p});
        if (std::fabs(g) > 1e-9)
            throw VerificationError("verify_G_identity: numeric residual " + fmt17(g) + " at x = " +
                                    fmt17(x));
    }
    return true;
}

bool singular_point_check(const BigRational& u, const BigRational& v) {
    const auto& tc = TrajectoryCurves::instance();
    std::vector<BigRational> pt{u, v};
    if (!tc.K.eval<BigRational>(pt).is_zero()) return false;
    if (!tc.K.derivative(0).eval<BigRational>(pt).is_zero()) return false;
    if (!tc.K.derivative(1).eval<BigRational>(pt).is_zero()) return false;
    return true;
}

std::vector<TrajectoryPoint> trajectory_samples(int n) {
    if (n < 2) throw DomainError("trajectory_samples: need at least 2 samples");
    const auto& tc = TrajectoryCurves::instance();
    // scale for the relative residual: largest |monomial| over the sampled box
    double kscale = 0;
    for (const auto& [e, c] : tc.K.terms()) kscale = std::max(kscale, std::fabs(c.to_double()));

    std::vector<TrajectoryPoint> out;
    out.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        double x = static_cast<double>(i) / (n + 1);
        double y = branch_y_numeric(x, Branch::stable);
        auto pars = intersection_params_at(x, y);
        TrajectoryPoint tp;
        tp.x = x;
        tp.y = y;
        tp.u = pars.r1;
        tp.v = pars.r2;
        tp.k_residual = std::fabs(tc.K.eval<double>({tp.u, tp.v})) / kscale;
        out.push_back(tp);
    }
    return out;
}

std::string trajectory_csv(const std::vector<TrajectoryPoint>& pts) {
    std::ostringstream os;
    os << "x,y,u,v,K_residual\n";
    for (const auto& p : pts)
        os << fmt17(p.x) << "," << fmt17(p.y) << "," << fmt17(p.u) << "," << fmt17(p.v) << ","
           << fmt17(p.k_residual) << "\n";
    return os.str();
}

} // namespace a4link
