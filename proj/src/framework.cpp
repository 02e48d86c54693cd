#include "a4link/framework.hpp"

#include "a4link/io.hpp"
#include "a4link/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace a4link {

std::array<std::array<MPoly, 3>, 3> stress_matrix() {
    const VarList& XY = xy_vars();
    const A4& g = A4::instance();
    MPoly X = MPoly::var(XY, 0), Y = MPoly::var(XY, 1);
    MPoly one = MPoly::constant(XY, BigRational(1));

    auto pair_sum = [&](int elem) {
        const RepMatrix a = g.rho(elem);
        const RepMatrix b = g.rho(g.inv(elem));
        std::array<std::array<int, 3>, 3> s{};
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j) s[i][j] = a.m[i][j] + b.m[i][j];
        return s;
    };
    const auto sc1 = pair_sum(g.c1());
    const auto sc2 = pair_sum(g.c2());
    const auto ss = pair_sum(g.s());

    std::array<std::array<MPoly, 3>, 3> omega;
    for (size_t i = 0; i < 3; ++i) {
        for (size_t j = 0; j < 3; ++j) {
            MPoly e = BigRational(sc1[i][j]) * X + BigRational(sc2[i][j]) * (one - X) +
                      BigRational(ss[i][j]) * Y;
            if (i == j) e -= 2 * Y + 2;
            omega[i][j] = e;
        }
    }

    // the expected display, entry by entry
    auto lin = [&](long cx, long cy, long c0) { return BigRational(cx) * X + BigRational(cy) * Y + c0; };
    const std::array<std::array<MPoly, 3>, 3> expected{{
        {lin(0, -2, -2), lin(-2, 1, 1), lin(-2, -1, 1)},
        {lin(-2, 1, 1), lin(0, -2, -2), lin(0, -1, 1)},
        {lin(-2, -1, 1), lin(0, -1, 1), lin(0, -2, -2)},
    }};
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j)
            if (!(omega[i][j] == expected[i][j]))
                throw VerificationError("stress_matrix: entry (" + std::to_string(i + 1) + "," +
                                        std::to_string(j + 1) + ") does not match the display: got " +
                                        omega[i][j].str());
    return omega;
}

std::array<MPoly, 3> p0_polynomial() {
    const VarList& XY = xy_vars();
    MPoly X = MPoly::var(XY, 0), Y = MPoly::var(XY, 1);
    MPoly X2 = X * X, Y2 = Y * Y, XYp = X * Y;
    return {
        -2 * XYp + 3 * Y2 - 6 * X + 2 * Y + 3,
        -4 * X2 - 4 * XYp + 3 * Y2 + 4 * X + 10 * Y + 3,
        4 * X2 - 3 * Y2 - 4 * X + 3,
    };
}

template <class T>
Vec3<T> kernel_vector(std::array<std::array<T, 3>, 3> m) {
    // exact Gauss-Jordan elimination to reduced row echelon form
    size_t rank = 0;
    for (size_t col = 0; col < 3 && rank < 3; ++col) {
        size_t piv = rank;
        while (piv < 3 && m[piv][col].is_zero()) ++piv;
        if (piv == 3) continue;
        std::swap(m[piv], m[rank]);
        for (size_t r = 0; r < 3; ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            T f = m[r][col] / m[rank][col];
            for (size_t c = 0; c < 3; ++c) m[r][c] = m[r][c] - f * m[rank][c];
        }
        ++rank;
    }
    if (rank == 3) throw DomainError("not on spectral curve");
    // find a free column and back-substitute
    std::array<bool, 3> is_pivot_col{false, false, false};
    std::array<int, 3> pivot_row_of_col{-1, -1, -1};
    size_t row = 0;
    for (size_t col = 0; col < 3 && row < rank; ++col) {
        if (!m[row][col].is_zero()) {
            is_pivot_col[col] = true;
            pivot_row_of_col[col] = static_cast<int>(row);
            ++row;
        }
    }
    size_t free_col = 0;
    while (free_col < 3 && is_pivot_col[free_col]) ++free_col;
    std::array<T, 3> v{T(0), T(0), T(0)};
    v[free_col] = T(1);
    for (size_t col = 0; col < 3; ++col) {
        if (!is_pivot_col[col]) continue;
        size_t r = static_cast<size_t>(pivot_row_of_col[col]);
        v[col] = T(0) - m[r][free_col] / m[r][col];
    }
    return {v[0], v[1], v[2]};
}

template Vec3<BigRational> kernel_vector<BigRational>(std::array<std::array<BigRational, 3>, 3>);
template Vec3<QuadValue> kernel_vector<QuadValue>(std::array<std::array<QuadValue, 3>, 3>);

namespace {

Vec3<BigRational> normalize_primitive(Vec3<BigRational> v) {
    std::array<BigRational*, 3> comp{&v.x, &v.y, &v.z};
    BigInt num_gcd(0), den_lcm(1);
    for (auto* c : comp) {
        if (c->is_zero()) continue;
        BigInt g;
        mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), c->num().get_mpz_t());
        num_gcd = g;
        BigInt d = c->den();
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
    }
    if (sgn(num_gcd) == 0) return v; // zero vector
    BigRational scale{den_lcm, num_gcd};
    for (auto* c : comp) *c *= scale;
    for (auto* c : comp) {
        if (c->is_zero()) continue;
        if (c->sign() < 0)
            for (auto* k : comp) *k = -*k;
        break;
    }
    return v;
}

Vec3<QuadValue> normalize_first_one(Vec3<QuadValue> v) {
    std::array<QuadValue*, 3> comp{&v.x, &v.y, &v.z};
    for (auto* c : comp) {
        if (c->is_zero()) continue;
        QuadValue inv = QuadValue(1) / *c;
        for (auto* k : comp) *k = *k * inv;
        break;
    }
    return v;
}

template <class T>
std::array<std::array<T, 3>, 3> eval_stress(const T& x, const T& y) {
    static const auto omega = stress_matrix();
    std::array<std::array<T, 3>, 3> m;
    std::vector<T> pt{x, y};
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) m[i][j] = omega[i][j].template eval<T>(pt);
    return m;
}

template <class T>
Vec3<T> eval_p0(const T& x, const T& y) {
    static const auto p0 = p0_polynomial();
    std::vector<T> pt{x, y};
    return {p0[0].template eval<T>(pt), p0[1].template eval<T>(pt), p0[2].template eval<T>(pt)};
}

} // namespace

Vec3<BigRational> null_vector_exact(const BigRational& x, const BigRational& y) {
    if (!SpectralCurve::instance().d.eval<BigRational>({x, y}).is_zero())
        throw DomainError("not on spectral curve");
    Vec3<BigRational> v = eval_p0<BigRational>(x, y);
    if (v.x.is_zero() && v.y.is_zero() && v.z.is_zero())
        v = kernel_vector(eval_stress<BigRational>(x, y));
    return normalize_primitive(std::move(v));
}

Vec3<QuadValue> null_vector_exact(const BigRational& x, const QuadValue& y) {
    if (y.is_rational()) {
        Vec3<BigRational> v = null_vector_exact(x, y.to_rational());
        return {QuadValue(v.x), QuadValue(v.y), QuadValue(v.z)};
    }
    QuadValue xq{x};
    if (!SpectralCurve::instance().d.eval<QuadValue>({xq, y}).is_zero())
        throw DomainError("not on spectral curve");
    Vec3<QuadValue> v = eval_p0<QuadValue>(xq, y);
    if (v.x.is_zero() && v.y.is_zero() && v.z.is_zero())
        v = kernel_vector(eval_stress<QuadValue>(xq, y));
    return normalize_first_one(std::move(v));
}

Vec3<double> null_vector_numeric(double x, double y) {
    Vec3<double> v = eval_p0<double>(x, y);
    double n = norm(v);
    auto rows = eval_stress<double>(x, y);
    double scale = 0;
    for (const auto& r : rows)
        for (double e : r) scale = std::max(scale, std::fabs(e));
    if (n <= 1e-12 * std::max(1.0, scale)) {
        // p0 degenerates: take the kernel direction as a cross product of rows
        Vec3<double> r0{rows[0][0], rows[0][1], rows[0][2]};
        Vec3<double> r1{rows[1][0], rows[1][1], rows[1][2]};
        Vec3<double> r2{rows[2][0], rows[2][1], rows[2][2]};
        v = cross(r0, r1);
        if (norm(v) < 1e-12 * std::max(1.0, scale)) v = cross(r0, r2);
        if (norm(v) < 1e-12 * std::max(1.0, scale)) v = cross(r1, r2);
        n = norm(v);
        if (n == 0) throw DomainError("not on spectral curve");
    }
    double inv = 1.0 / n;
    v = {v.x * inv, v.y * inv, v.z * inv};
    for (double c : {v.x, v.y, v.z}) {
        if (std::fabs(c) < 1e-12) continue;
        if (c < 0) v = {-v.x, -v.y, -v.z};
        break;
    }
    return v;
}

const char* edge_kind_name(EdgeKind k) {
    switch (k) {
        case EdgeKind::strut: return "strut";
        case EdgeKind::cable_c1: return "cable_c1";
        default: return "cable_c2";
    }
}

namespace {

template <class T>
Framework<T> realize_impl(const T& x, const T& y, Vec3<T> p0n, bool boundary) {
    const A4& g = A4::instance();
    Framework<T> fw;
    fw.x = x;
    fw.y = y;
    fw.boundary = boundary;
    for (int i = 0; i < A4::order; ++i)
        fw.nodes[static_cast<size_t>(i)] = apply(g.rho(i), p0n);
    size_t e = 0;
    auto add_edges = [&](int gen, EdgeKind kind) {
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < A4::order; ++a) {
            int b = g.mul(a, gen);
            pairs.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(pairs.begin(), pairs.end());
        for (auto [i, j] : pairs) fw.edges[e++] = {i, j, kind};
    };
    add_edges(g.s(), EdgeKind::strut);
    add_edges(g.c1(), EdgeKind::cable_c1);
    add_edges(g.c2(), EdgeKind::cable_c2);
    fw.triangles = g.strut_triangles();
    return fw;
}

} // namespace

Framework<BigRational> realize_at(const BigRational& x, const BigRational& y) {
    const auto& curve = SpectralCurve::instance();
    if (!curve.d.eval<BigRational>({x, y}).is_zero())
        throw DomainError("realize_at: point is not on the spectral curve");
    bool boundary = x.is_zero() || x == BigRational(1);
    return realize_impl<BigRational>(x, y, null_vector_exact(x, y), boundary);
}

Framework<QuadValue> realize_at(const BigRational& x, const QuadValue& y) {
    if (y.is_rational()) {
        Framework<BigRational> fq = realize_at(x, y.to_rational());
        Framework<QuadValue> fw;
        fw.x = QuadValue(fq.x);
        fw.y = QuadValue(fq.y);
        fw.boundary = fq.boundary;
        for (size_t i = 0; i < 12; ++i)
            fw.nodes[i] = {QuadValue(fq.nodes[i].x), QuadValue(fq.nodes[i].y), QuadValue(fq.nodes[i].z)};
        for (size_t i = 0; i < 36; ++i)
            fw.edges[i] = {fq.edges[i].i, fq.edges[i].j, fq.edges[i].kind};
        fw.triangles = fq.triangles;
        return fw;
    }
    const auto& curve = SpectralCurve::instance();
    QuadValue xq{x};
    if (!curve.d.eval<QuadValue>({xq, y}).is_zero())
        throw DomainError("realize_at: point is not on the spectral curve");
    bool boundary = x.is_zero() || x == BigRational(1);
    return realize_impl<QuadValue>(xq, y, null_vector_exact(x, y), boundary);
}

Framework<double> realize_at(double x, double y) {
    const auto& curve = SpectralCurve::instance();
    double dval = curve.d.eval<double>({x, y});
    double scale = std::max({1.0, std::fabs(x), std::fabs(y)});
    if (std::fabs(dval) > 1e-9 * scale * scale * scale)
        throw DomainError("realize_at: point is not on the spectral curve (numeric)");
    bool boundary = x == 0.0 || x == 1.0;
    return realize_impl<double>(x, y, null_vector_numeric(x, y), boundary);
}

Framework<double> realize_stable(double x) {
    if (x < 0 || x > 1) throw DomainError("realize_stable: x outside [0,1]");
    return realize_at(x, branch_y_numeric(x, Branch::stable));
}

double equilibrium_residual(const Framework<double>& fw) {
    std::array<Vec3<double>, 12> acc{};
    for (const auto& e : fw.edges) {
        double w = fw.stress(e.kind);
        Vec3<double> pij = fw.nodes[static_cast<size_t>(e.j)] - fw.nodes[static_cast<size_t>(e.i)];
        acc[static_cast<size_t>(e.i)] = acc[static_cast<size_t>(e.i)] + w * pij;
        acc[static_cast<size_t>(e.j)] = acc[static_cast<size_t>(e.j)] - w * pij;
    }
    double scale = 0, worst = 0;
    for (const auto& p : fw.nodes) scale = std::max(scale, norm(p));
    for (const auto& r : acc) worst = std::max(worst, norm(r));
    return scale > 0 ? worst / scale : worst;
}

namespace {
template <class T>
bool equilibrium_exact_impl(const Framework<T>& fw) {
    std::array<Vec3<T>, 12> acc{};
    for (const auto& e : fw.edges) {
        T w = fw.stress(e.kind);
        Vec3<T> pij = fw.nodes[static_cast<size_t>(e.j)] - fw.nodes[static_cast<size_t>(e.i)];
        acc[static_cast<size_t>(e.i)] = acc[static_cast<size_t>(e.i)] + w * pij;
        acc[static_cast<size_t>(e.j)] = acc[static_cast<size_t>(e.j)] - w * pij;
    }
    for (const auto& r : acc)
        if (!(r.x.is_zero() && r.y.is_zero() && r.z.is_zero())) return false;
    return true;
}
} // namespace

bool equilibrium_exact(const Framework<BigRational>& fw) { return equilibrium_exact_impl(fw); }
bool equilibrium_exact(const Framework<QuadValue>& fw) { return equilibrium_exact_impl(fw); }

namespace {

double as_double(double v) { return v; }
double as_double(const BigRational& v) { return v.to_double(); }
double as_double(const QuadValue& v) { return v.to_double(); }

std::string scalar_json(double v) { return fmt17(v); }
std::string scalar_json(const BigRational& v) { return v.str(); }
std::string scalar_json(const QuadValue& v) { return v.str(); }

template <class T>
std::string export_obj_impl(const Framework<T>& fw, const char* normalization) {
    std::ostringstream os;
    os << "# a4 tensegrity, x = " << scalar_json(fw.x) << ", y = " << scalar_json(fw.y) << "\n";
    os << "# normalization: " << normalization << "\n";
    for (const auto& p : fw.nodes)
        os << "v " << fmt17(as_double(p.x)) << " " << fmt17(as_double(p.y)) << " "
           << fmt17(as_double(p.z)) << "\n";
    for (const auto& e : fw.edges)
        os << "l " << e.i + 1 << " " << e.j + 1 << " # " << edge_kind_name(e.kind) << "\n";
    return os.str();
}

template <class T>
std::string export_json_impl(const Framework<T>& fw, bool exact, const char* normalization) {
    Json j;
    if (exact) {
        j["x"] = scalar_json(fw.x);
        j["y"] = scalar_json(fw.y);
    } else {
        j["x"] = as_double(fw.x);
        j["y"] = as_double(fw.y);
    }
    j["exact"] = exact;
    j["boundary"] = fw.boundary;
    j["normalization"] = normalization;
    Json nodes = Json::array();
    for (const auto& p : fw.nodes)
        nodes.push_back({as_double(p.x), as_double(p.y), as_double(p.z)});
    j["nodes"] = std::move(nodes);
    Json edges = Json::array();
    for (const auto& e : fw.edges) {
        Json je;
        je["i"] = e.i;
        je["j"] = e.j;
        je["kind"] = edge_kind_name(e.kind);
        if (exact)
            je["stress"] = scalar_json(fw.stress(e.kind));
        else
            je["stress"] = as_double(fw.stress(e.kind));
        edges.push_back(std::move(je));
    }
    j["edges"] = std::move(edges);
    Json tris = Json::array();
    for (const auto& t : fw.triangles) tris.push_back({t[0], t[1], t[2]});
    j["triangles"] = std::move(tris);
    return j.dump(2) + "\n";
}

} // namespace

std::string export_obj(const Framework<double>& fw) { return export_obj_impl(fw, "unit"); }
std::string export_obj(const Framework<BigRational>& fw) { return export_obj_impl(fw, "primitive"); }
std::string export_obj(const Framework<QuadValue>& fw) { return export_obj_impl(fw, "first-coordinate-one"); }
std::string export_json(const Framework<double>& fw) { return export_json_impl(fw, false, "unit"); }
std::string export_json(const Framework<BigRational>& fw) { return export_json_impl(fw, true, "primitive"); }
std::string export_json(const Framework<QuadValue>& fw) { return export_json_impl(fw, true, "first-coordinate-one"); }

Framework<double> framework_from_json(const std::string& text) {
    Json j = Json::parse(text);
    Framework<double> fw;
    fw.x = j.at("x").get<double>();
    fw.y = j.at("y").get<double>();
    fw.boundary = j.at("boundary").get<bool>();
    for (size_t i = 0; i < 12; ++i) {
        const auto& n = j.at("nodes").at(i);
        fw.nodes[i] = {n.at(0).get<double>(), n.at(1).get<double>(), n.at(2).get<double>()};
    }
    for (size_t i = 0; i < 36; ++i) {
        const auto& e = j.at("edges").at(i);
        std::string kind = e.at("kind").get<std::string>();
        EdgeKind k = kind == "strut" ? EdgeKind::strut
                   : kind == "cable_c1" ? EdgeKind::cable_c1 : EdgeKind::cable_c2;
        fw.edges[i] = {e.at("i").get<int>(), e.at("j").get<int>(), k};
    }
    for (size_t t = 0; t < 4; ++t) {
        const auto& tt = j.at("triangles").at(t);
        fw.triangles[t] = {tt.at(0).get<int>(), tt.at(1).get<int>(), tt.at(2).get<int>()};
    }
    return fw;
}

} // namespace a4link
