#include "a4link/linking.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace a4link {

namespace {

Vec3<MPoly> apply_poly(const RepMatrix& m, const std::array<MPoly, 3>& v) {
    auto row = [&](size_t i) {
        return BigRational(m.m[i][0]) * v[0] + BigRational(m.m[i][1]) * v[1] +
               BigRational(m.m[i][2]) * v[2];
    };
    return {row(0), row(1), row(2)};
}

MPoly poly_det3(const Vec3<MPoly>& c0, const Vec3<MPoly>& c1, const Vec3<MPoly>& c2) {
    std::vector<std::vector<MPoly>> m{{c0.x, c1.x, c2.x}, {c0.y, c1.y, c2.y}, {c0.z, c1.z, c2.z}};
    return det_bareiss(std::move(m));
}

} // namespace

const IntersectionFormulas& IntersectionFormulas::instance() {
    static const IntersectionFormulas f = [] {
        const VarList& XY = xy_vars();
        MPoly X = MPoly::var(XY, 0), Y = MPoly::var(XY, 1);
        MPoly X2 = X * X, Y2 = Y * Y, XYp = X * Y;

        IntersectionFormulas f;
        f.N_tau = (Y - X) * (2 * X + 3 * Y + 1);
        f.D_tau = 2 * XYp - 5 * Y - 3;
        f.P = 4 * X2.pow(2) + 3 * (X2 * Y2) - 20 * (X2 * X) - 6 * (X2 * Y) - 15 * (X * Y2) +
              31 * X2 + 6 * XYp + 21 * Y2 - 15 * X + 18 * Y + 9;
        f.Q1 = -4 * X2.pow(2) - 12 * (X2 * XYp) + X2 * Y2 + 9 * (X * Y2 * Y) + 8 * (X2 * X) +
               42 * (X2 * Y) + 10 * (X * Y2) - 27 * (Y2 * Y) + 17 * X2 - 15 * XYp - 38 * Y2 -
               12 * X - 15 * Y;
        f.Q2 = 4 * X2.pow(2) - 4 * (X2 * XYp) - 13 * (X2 * Y2) + 9 * (X * Y2 * Y) - 8 * (X2 * X) +
               2 * (X2 * Y) + 44 * (X * Y2) - 18 * (Y2 * Y) + 7 * X2 + 29 * XYp - 49 * Y2 + 6 * X -
               36 * Y - 9;
        f.N1 = (Y - 2 * X + 3) * (X - 1) * f.Q1;
        f.N2 = -((2 * X2 + XYp - 5 * X - 4 * Y) * f.Q2);
        f.D = f.D_tau * f.P;

        // independent derivation: Cramer's rule on the intersection system
        //   tau*F + (1-tau)*E = B + R1(A-B) + R2(C-B)
        // with the strut segment oriented from E = rho(c1 s)p0 toward
        // F = rho(c1 s^2)p0; the displayed equation with the opposite
        // orientation produces 1 - tau.
        const A4& g = A4::instance();
        const auto p0 = p0_polynomial();
        auto rho_of = [&](std::initializer_list<int> word) {
            RepMatrix m = RepMatrix::identity();
            for (int w : word) m = m * g.rho(w);
            return m;
        };
        Vec3<MPoly> A = apply_poly(rho_of({}), p0);
        Vec3<MPoly> B = apply_poly(rho_of({g.s()}), p0);
        Vec3<MPoly> C = apply_poly(rho_of({g.s(), g.s()}), p0);
        Vec3<MPoly> E = apply_poly(rho_of({g.c1(), g.s()}), p0);
        Vec3<MPoly> F = apply_poly(rho_of({g.c1(), g.s(), g.s()}), p0);

        Vec3<MPoly> col0 = F - E, col1 = B - A, col2 = B - C, rhs = B - E;
        MPoly detM = poly_det3(col0, col1, col2);
        MPoly det_t = poly_det3(rhs, col1, col2);
        MPoly det_1 = poly_det3(col0, rhs, col2);
        MPoly det_2 = poly_det3(col0, col1, rhs);

        const MPoly& d8 = SpectralCurve::instance().d8;
        if (!(detM == BigRational(-16) * f.D))
            throw VerificationError("intersection formulas: det M != -16*D; got " + detM.str());
        MPoly tau_residual = det_t * f.D_tau - f.N_tau * detM;
        if (!tau_residual.is_zero())
            throw VerificationError("intersection formulas: tau cross-identity residual " +
                                    tau_residual.str());
        MPoly r1_residual = det_1 * f.D - f.N1 * detM;
        if (!divides(d8, r1_residual))
            throw VerificationError("intersection formulas: R1 residual not divisible by d8: " +
                                    r1_residual.str());
        MPoly r2_residual = det_2 * f.D - f.N2 * detM;
        if (!divides(d8, r2_residual))
            throw VerificationError("intersection formulas: R2 residual not divisible by d8: " +
                                    r2_residual.str());
        return f;
    }();
    return f;
}

const char* crossing_class_name(CrossingClass c) {
    switch (c) {
        case CrossingClass::interior_crossing: return "interior-crossing";
        case CrossingClass::boundary: return "boundary";
        default: return "miss";
    }
}

namespace {

template <class T>
CrossingClass classify(const T& tau, const T& r1, const T& r2, const T& one) {
    const T quantities[5] = {tau, one - tau, r1, r2, one - r1 - r2};
    bool any_zero = false, any_negative = false;
    for (const T& q : quantities) {
        int s = q.sign();
        if (s == 0) any_zero = true;
        if (s < 0) any_negative = true;
    }
    if (any_negative) return CrossingClass::miss;
    if (any_zero) return CrossingClass::boundary;
    return CrossingClass::interior_crossing;
}

template <class T>
IntersectionParams<T> params_exact_impl(const T& x, const T& y) {
    const auto& f = IntersectionFormulas::instance();
    std::vector<T> pt{x, y};
    T dtau = f.D_tau.template eval<T>(pt);
    if (dtau.is_zero()) {
        std::ostringstream os;
        os << "exact point";
        throw PoleError("D_tau", os.str());
    }
    T dd = f.D.template eval<T>(pt);
    if (dd.is_zero()) throw PoleError("D", "exact point");
    IntersectionParams<T> out;
    out.tau = f.N_tau.template eval<T>(pt) / dtau;
    out.r1 = f.N1.template eval<T>(pt) / dd;
    out.r2 = f.N2.template eval<T>(pt) / dd;
    out.cls = classify(out.tau, out.r1, out.r2, T(1));
    return out;
}

} // namespace

IntersectionParams<BigRational> intersection_params_at(const BigRational& x, const BigRational& y) {
    return params_exact_impl<BigRational>(x, y);
}

IntersectionParams<QuadValue> intersection_params_at(const BigRational& x, const QuadValue& y) {
    return params_exact_impl<QuadValue>(QuadValue(x), y);
}

IntersectionParams<double> intersection_params_at(double x, double y) {
    const auto& f = IntersectionFormulas::instance();
    std::vector<double> pt{x, y};
    double dtau = f.D_tau.eval<double>(pt);
    double dd = f.D.eval<double>(pt);
    if (dtau == 0) throw PoleError("D_tau", "x=" + fmt17(x));
    if (dd == 0) throw PoleError("D", "x=" + fmt17(x));
    IntersectionParams<double> out;
    out.tau = f.N_tau.eval<double>(pt) / dtau;
    out.r1 = f.N1.eval<double>(pt) / dd;
    out.r2 = f.N2.eval<double>(pt) / dd;
    double q[5] = {out.tau, 1 - out.tau, out.r1, out.r2, 1 - out.r1 - out.r2};
    bool any_zero = false, any_neg = false;
    for (double v : q) {
        if (v == 0) any_zero = true;
        if (v < 0) any_neg = true;
    }
    out.cls = any_neg ? CrossingClass::miss
            : any_zero ? CrossingClass::boundary : CrossingClass::interior_crossing;
    return out;
}

IntersectionParams<double> intersection_params_direct(double x) {
    const A4& g = A4::instance();
    Framework<double> fw = realize_stable(x);
    auto node = [&](int idx) { return fw.nodes[static_cast<size_t>(idx)]; };
    int ss = g.mul(g.s(), g.s());
    Vec3<double> A = node(g.identity());
    Vec3<double> B = node(g.s());
    Vec3<double> C = node(ss);
    Vec3<double> E = node(g.mul(g.c1(), g.s()));
    Vec3<double> F = node(g.mul(g.c1(), ss));

    Vec3<double> c0 = F - E, c1v = B - A, c2v = B - C, rhs = B - E;
    auto det3 = [](const Vec3<double>& a, const Vec3<double>& b, const Vec3<double>& c) {
        return dot(a, cross(b, c));
    };
    double dm = det3(c0, c1v, c2v);
    if (dm == 0) throw DegenerateConfiguration("intersection system singular");
    IntersectionParams<double> out;
    out.tau = det3(rhs, c1v, c2v) / dm;
    out.r1 = det3(c0, rhs, c2v) / dm;
    out.r2 = det3(c0, c1v, rhs) / dm;
    double q[5] = {out.tau, 1 - out.tau, out.r1, out.r2, 1 - out.r1 - out.r2};
    out.cls = std::all_of(std::begin(q), std::end(q), [](double v) { return v > 0; })
                  ? CrossingClass::interior_crossing
                  : CrossingClass::miss;
    return out;
}

// --- linking numbers --------------------------------------------------------

namespace {

/// Signed crossing count of triangle b's edges through the closed disk of
/// triangle a, all predicates exact.
template <class T>
int linking_exact_impl(const Framework<T>& fw, int a, int b) {
    if (a == b) throw DomainError("triangle_pair_linking: a == b");
    if (a < 0 || a > 3 || b < 0 || b > 3) throw DomainError("triangle_pair_linking: triangle id out of range");
    auto at = [&](int t, int k) { return fw.nodes[static_cast<size_t>(fw.triangles[static_cast<size_t>(t)][static_cast<size_t>(k)])]; };
    const Vec3<T> A0 = at(a, 0), A1 = at(a, 1), A2 = at(a, 2);
    const Vec3<T> e1 = A1 - A0, e2 = A2 - A0;
    const Vec3<T> n = cross(e1, e2);
    const T n2 = norm2(n);
    if (n2.is_zero()) throw DegenerateConfiguration("triangle a is degenerate");

    // barycentric coordinates (1-u-v, u, v) of the projection of R
    auto bary = [&](const Vec3<T>& R) {
        Vec3<T> w = R - A0;
        T u = dot(cross(w, e2), n) / n2;
        T v = dot(cross(e1, w), n) / n2;
        return std::pair<T, T>(u, v);
    };
    auto in_closed = [&](const Vec3<T>& R) {
        auto [u, v] = bary(R);
        return u.sign() >= 0 && v.sign() >= 0 && (T(1) - u - v).sign() >= 0;
    };

    int total = 0;
    const Vec3<T> bv[3] = {at(b, 0), at(b, 1), at(b, 2)};
    for (int k = 0; k < 3; ++k) {
        const Vec3<T>& P = bv[k];
        const Vec3<T>& Q = bv[(k + 1) % 3];
        T hP = dot(n, P - A0), hQ = dot(n, Q - A0);
        int sP = hP.sign(), sQ = hQ.sign();
        if (sP == 0 && sQ == 0)
            throw DegenerateConfiguration("edge of b lies in the plane of a");
        if (sP == 0 || sQ == 0) {
            const Vec3<T>& V = sP == 0 ? P : Q;
            if (in_closed(V))
                throw DegenerateConfiguration("vertex of b touches the closed disk of a");
            continue; // touches the plane strictly outside the disk
        }
        if (sP == sQ) continue;
        T t = hP / (hP - hQ); // in (0,1) since signs differ
        Vec3<T> R = P + t * (Q - P);
        auto [u, v] = bary(R);
        T l0 = T(1) - u - v;
        int su = u.sign(), sv = v.sign(), s0 = l0.sign();
        if (su > 0 && sv > 0 && s0 > 0) {
            total += sQ; // sign of (edge direction . normal) = sign(hQ - hP) = sQ
        } else if (su == 0 || sv == 0 || s0 == 0) {
            throw DegenerateConfiguration("edge of b crosses the boundary of a's disk");
        }
    }
    return total;
}

int linking_numeric_impl(const Framework<double>& fw, int a, int b, const LinkingOptions& opt) {
    if (a == b) throw DomainError("triangle_pair_linking: a == b");
    if (a < 0 || a > 3 || b < 0 || b > 3) throw DomainError("triangle_pair_linking: triangle id out of range");
    auto at = [&](int t, int k) { return fw.nodes[static_cast<size_t>(fw.triangles[static_cast<size_t>(t)][static_cast<size_t>(k)])]; };
    const Vec3<double> A0 = at(a, 0), A1 = at(a, 1), A2 = at(a, 2);
    const Vec3<double> e1 = A1 - A0, e2 = A2 - A0;
    const Vec3<double> n = cross(e1, e2);
    const double n2 = norm2(n);
    const double nn = std::sqrt(n2);
    if (nn == 0) throw DegenerateConfiguration("triangle a is degenerate");

    auto bary = [&](const Vec3<double>& R) {
        Vec3<double> w = R - A0;
        double u = dot(cross(w, e2), n) / n2;
        double v = dot(cross(e1, w), n) / n2;
        return std::pair<double, double>(u, v);
    };

    const double m = opt.margin;
    int total = 0;
    const Vec3<double> bv[3] = {at(b, 0), at(b, 1), at(b, 2)};
    for (int k = 0; k < 3; ++k) {
        const Vec3<double>& P = bv[k];
        const Vec3<double>& Q = bv[(k + 1) % 3];
        double hP = dot(n, P - A0), hQ = dot(n, Q - A0);
        double hscaleP = nn * std::max(1e-300, norm(P - A0));
        double hscaleQ = nn * std::max(1e-300, norm(Q - A0));
        bool zP = std::fabs(hP) <= m * hscaleP;
        bool zQ = std::fabs(hQ) <= m * hscaleQ;
        if (zP && zQ)
            throw DegenerateConfiguration("edge of b lies in the plane of a (within margin)");
        if (zP || zQ) {
            const Vec3<double>& V = zP ? P : Q;
            auto [u, v] = bary(V);
            double l0 = 1 - u - v;
            if (u < -m || v < -m || l0 < -m) continue; // clearly outside the disk
            throw DegenerateConfiguration("vertex of b within margin of a's closed disk");
        }
        if ((hP > 0) == (hQ > 0)) continue;
        double t = hP / (hP - hQ);
        Vec3<double> R = P + t * (Q - P);
        auto [u, v] = bary(R);
        double l0 = 1 - u - v;
        if (u > m && v > m && l0 > m) {
            total += hQ > 0 ? 1 : -1;
        } else if (u < -m && v < -m && l0 < -m) {
            continue;
        } else if (u < -m || v < -m || l0 < -m) {
            continue; // clearly outside in at least one coordinate
        } else {
            throw DegenerateConfiguration("crossing within margin of a's disk boundary");
        }
    }
    return total;
}

template <class FW>
LinkingMatrix linking_matrix_impl(const FW& fw, auto&& pair_fn) {
    LinkingMatrix m{};
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            int lij = pair_fn(fw, i, j);
            int lji = pair_fn(fw, j, i);
            if (lij != lji)
                throw VerificationError("linking matrix asymmetry at pair (" + std::to_string(i) +
                                        "," + std::to_string(j) + ")");
            m[static_cast<size_t>(i)][static_cast<size_t>(j)] = lij;
            m[static_cast<size_t>(j)][static_cast<size_t>(i)] = lij;
        }
    }
    return m;
}

} // namespace

int triangle_pair_linking(const Framework<double>& fw, int a, int b, const LinkingOptions& opt) {
    return linking_numeric_impl(fw, a, b, opt);
}
int triangle_pair_linking(const Framework<BigRational>& fw, int a, int b) {
    return linking_exact_impl(fw, a, b);
}
int triangle_pair_linking(const Framework<QuadValue>& fw, int a, int b) {
    return linking_exact_impl(fw, a, b);
}

LinkingMatrix linking_matrix(const Framework<double>& fw, const LinkingOptions& opt) {
    return linking_matrix_impl(fw, [&](const Framework<double>& f, int i, int j) {
        return triangle_pair_linking(f, i, j, opt);
    });
}
LinkingMatrix linking_matrix(const Framework<BigRational>& fw) {
    return linking_matrix_impl(fw, [](const Framework<BigRational>& f, int i, int j) {
        return triangle_pair_linking(f, i, j);
    });
}
LinkingMatrix linking_matrix(const Framework<QuadValue>& fw) {
    return linking_matrix_impl(fw, [](const Framework<QuadValue>& f, int i, int j) {
        return triangle_pair_linking(f, i, j);
    });
}

// --- persistence certificate ------------------------------------------------

namespace {

struct TrackedFunction {
    std::string name;
    const MPoly* poly;
    // expected resultant factorization when the source states one
    std::optional<MPoly> stated;
};

MPoly stated_res_N_tau() {
    const VarList& XY = xy_vars();
    MPoly X = MPoly::var(XY, 0);
    return BigRational(-384) * (X * (X - 3) * (X + 2) * (X - 1).pow(3));
}
MPoly stated_res_D_tau() {
    const VarList& XY = xy_vars();
    MPoly X = MPoly::var(XY, 0);
    return BigRational(48) * ((X - 3) * (2 * X - 1) * (X - 1).pow(2));
}
MPoly stated_res_N1() {
    const VarList& XY = xy_vars();
    MPoly X = MPoly::var(XY, 0);
    MPoly quartic = 3 * X.pow(4) - 20 * X.pow(3) + 7 * (X * X) + 4 * X - 3;
    return BigRational(98304) * (X * (X - 3).pow(4) * (X - 1).pow(7) * quartic);
}

/// Decide whether F vanishes at (r, g(r)) for a rational root r: reduce to
/// exact arithmetic in Q(sqrt(disc(r))).
RootRecord decide_rational_root(const BigRational& r, const MPoly& F) {
    RootRecord rec;
    rec.lo = rec.hi = r;
    rec.exact = true;
    QuadValue y_stable = branch_y_exact(r, Branch::stable);
    QuadValue val = F.eval<QuadValue>({QuadValue(r), y_stable});
    rec.on_stable_branch = val.is_zero();
    rec.stable_value = val.str();
    QuadValue y_other = branch_y_exact(r, Branch::other);
    QuadValue val_other = F.eval<QuadValue>({QuadValue(r), y_other});
    if (rec.on_stable_branch)
        rec.note = "vanishes on the stable branch";
    else if (val_other.is_zero())
        rec.note = "vanishes only on the other branch (y = " + y_other.str() + ")";
    else
        rec.note = "resultant root not realized on either real branch at this x";
    return rec;
}

} // namespace

RootRecord certify_root_on_stable_branch(IsolatingInterval iv, const UPoly& res_squarefree,
                                         const MPoly& F) {
    const auto& curve = SpectralCurve::instance();
    RootRecord rec;
    rec.exact = false;
    for (int iter = 0; iter < 64; ++iter) {
        Interval X{iv.lo, iv.hi};
        Interval discI = interval_eval(curve.disc_x, std::vector<Interval>{X, Interval(BigRational(0))});
        if (discI.lo.sign() >= 0) {
            unsigned prec = 32 + 4 * static_cast<unsigned>(iter);
            Interval sq = sqrt_enclosure(discI, prec);
            Interval Y = (X * X - X - Interval(BigRational(3)) + sq) * Interval(BigRational(1, 6));
            Interval FI = interval_eval(F, std::vector<Interval>{X, Y});
            if (FI.sign() != 0) {
                rec.lo = iv.lo;
                rec.hi = iv.hi;
                rec.decided = true;
                rec.on_stable_branch = false;
                rec.stable_value = std::string(FI.sign() > 0 ? "+" : "-") + " (interval [" +
                                   FI.lo.str() + ", " + FI.hi.str() + "])";
                rec.note = "sign decided by interval arithmetic";
                return rec;
            }
        }
        iv = refine_root(res_squarefree, iv, (iv.hi - iv.lo) / BigRational(2));
        if (iv.is_exact()) {
            // bisection landed on the root exactly: it was rational after all
            return decide_rational_root(iv.lo, F);
        }
    }
    rec.lo = iv.lo;
    rec.hi = iv.hi;
    rec.decided = false;
    rec.on_stable_branch = true; // unknown: conservatively not certified
    rec.note = "refinement budget exhausted";
    return rec;
}

CertificateReport persistence_certificate() {
    const auto& f = IntersectionFormulas::instance();
    const auto& curve = SpectralCurve::instance();

    MPoly dtau_minus_ntau = f.D_tau - f.N_tau;
    MPoly d_minus_n1n2 = f.D - f.N1 - f.N2;
    const std::vector<TrackedFunction> tracked{
        {"N_tau", &f.N_tau, stated_res_N_tau()},
        {"D_tau", &f.D_tau, stated_res_D_tau()},
        {"D_tau-N_tau", &dtau_minus_ntau, std::nullopt},
        {"N1", &f.N1, stated_res_N1()},
        {"N2", &f.N2, std::nullopt},
        {"D", &f.D, std::nullopt},
        {"D-N1-N2", &d_minus_n1n2, std::nullopt},
    };

    const BigRational half(1, 2), neg_third(-1, 3);
    CertificateReport report;
    report.disc_positive_on_01 = true; // certified in SpectralCurve::instance()

    for (const auto& tf : tracked) {
        FunctionRecord rec;
        rec.name = tf.name;
        rec.resultant = resultant(curve.d8, *tf.poly, 1); // eliminate y

        if (tf.stated) {
            if (rec.resultant == *tf.stated) {
                rec.paper_factorization_matches = true;
            } else if (rec.resultant == -*tf.stated) {
                rec.paper_factorization_matches = true;
                rec.factorization_global_sign = -1;
            } else {
                throw VerificationError("persistence_certificate: resultant of " + tf.name +
                                        " does not match the stated factorization: got " +
                                        rec.resultant.str());
            }
        }

        UPoly res_u = ufrom_mpoly(rec.resultant, 0);
        rec.rational_roots_all = rational_roots(res_u);
        rec.has_factor_D_tau = divides(f.D_tau, *tf.poly);

        auto roots = sturm_isolate(res_u, Interval(BigRational(0), BigRational(1)));
        UPoly res_sf = squarefree_part(res_u);
        bool all_clear = true;
        for (const auto& iv : roots) {
            RootRecord rr = iv.is_exact() ? decide_rational_root(iv.lo, *tf.poly)
                                          : certify_root_on_stable_branch(iv, res_sf, *tf.poly);
            if (!rr.decided || rr.on_stable_branch) all_clear = false;
            rec.roots_in_01.push_back(std::move(rr));
        }

        rec.value_at_half = tf.poly->eval<BigRational>({half, neg_third});
        rec.sign_at_half = rec.value_at_half.sign();
        if (rec.sign_at_half == 0) all_clear = false; // anchor itself vanishes: no sign to certify
        rec.sign_constant = all_clear;
        report.functions.push_back(std::move(rec));
    }

    report.verdict = report.disc_positive_on_01 &&
                     std::all_of(report.functions.begin(), report.functions.end(),
                                 [](const FunctionRecord& r) { return r.sign_constant; });
    return report;
}

const FunctionRecord& CertificateReport::function(const std::string& name) const {
    for (const auto& f : functions)
        if (f.name == name) return f;
    throw DomainError("CertificateReport: unknown function " + name);
}

Json CertificateReport::to_json() const {
    Json out;
    Json fns = Json::array();
    for (const auto& f : functions) {
        Json jf;
        jf["name"] = f.name;
        Json coeffs = Json::array();
        for (const auto& c : ufrom_mpoly(f.resultant, 0)) coeffs.push_back(c.str());
        jf["resultant"] = std::move(coeffs); // ascending powers of x
        if (f.paper_factorization_matches.has_value())
            jf["paper_factorization_matches"] = *f.paper_factorization_matches;
        else
            jf["paper_factorization_matches"] = nullptr;
        jf["factorization_global_sign"] = f.factorization_global_sign;
        Json roots = Json::array();
        for (const auto& r : f.roots_in_01) {
            Json jr;
            jr["lo"] = r.lo.str();
            jr["hi"] = r.hi.str();
            jr["exact"] = r.exact;
            jr["decided"] = r.decided;
            jr["on_stable_branch"] = r.on_stable_branch;
            jr["stable_value"] = r.stable_value;
            jr["note"] = r.note;
            roots.push_back(std::move(jr));
        }
        jf["roots_in_01"] = std::move(roots);
        jf["sign_at_half"] = f.sign_at_half > 0 ? "+" : (f.sign_at_half < 0 ? "-" : "0");
        jf["value_at_half"] = f.value_at_half.str();
        jf["has_factor_D_tau"] = f.has_factor_D_tau;
        Json rr = Json::array();
        for (const auto& r : f.rational_roots_all) rr.push_back(r.str());
        jf["rational_roots"] = std::move(rr);
        fns.push_back(std::move(jf));
    }
    out["functions"] = std::move(fns);
    out["disc_positive_on_01"] = disc_positive_on_01;
    out["verdict"] = verdict;
    return out;
}

RemarkReport remark_check(const CertificateReport& cert) {
    RemarkReport rep;
    const std::vector<BigRational> point_xs{BigRational(0), BigRational(1, 2), BigRational(1),
                                            BigRational(-2), BigRational(3)};
    const BigRational half(1, 2);
    rep.roots_subset_of_point_xs = true;
    rep.half_only_via_D_tau = true;
    for (const auto& f : cert.functions) {
        rep.roots_by_function.emplace_back(f.name, f.rational_roots_all);
        for (const auto& r : f.rational_roots_all) {
            if (std::find(rep.union_of_roots.begin(), rep.union_of_roots.end(), r) ==
                rep.union_of_roots.end())
                rep.union_of_roots.push_back(r);
            if (std::find(point_xs.begin(), point_xs.end(), r) == point_xs.end())
                rep.roots_subset_of_point_xs = false;
            if (r == half) {
                // 1/2 must come only from functions carrying the D_tau factor,
                // none of which vanish at the stable-branch point (1/2,-1/3)
                if (!f.has_factor_D_tau || f.sign_at_half == 0) rep.half_only_via_D_tau = false;
            }
        }
    }
    std::sort(rep.union_of_roots.begin(), rep.union_of_roots.end());
    rep.pattern_holds = rep.roots_subset_of_point_xs && rep.half_only_via_D_tau;
    return rep;
}

Json RemarkReport::to_json() const {
    Json out;
    Json per = Json::array();
    for (const auto& [name, roots] : roots_by_function) {
        Json jf;
        jf["name"] = name;
        Json jr = Json::array();
        for (const auto& r : roots) jr.push_back(r.str());
        jf["rational_roots"] = std::move(jr);
        per.push_back(std::move(jf));
    }
    out["roots_by_function"] = std::move(per);
    Json ju = Json::array();
    for (const auto& r : union_of_roots) ju.push_back(r.str());
    out["union_of_roots"] = std::move(ju);
    out["roots_subset_of_point_xs"] = roots_subset_of_point_xs;
    out["half_only_via_D_tau"] = half_only_via_D_tau;
    out["pattern_holds"] = pattern_holds;
    return out;
}

} // namespace a4link
