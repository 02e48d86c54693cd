#ifndef A4LINK_FRAMEWORK_HPP
#define A4LINK_FRAMEWORK_HPP

#include "a4link/geom.hpp"
#include "a4link/group.hpp"
#include "a4link/mpoly.hpp"
#include "a4link/quadext.hpp"
#include "a4link/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace a4link {

/// Symbolic 3x3 stress matrix in the variables (x, y), assembled from the
/// representation as x(rho(c1)+rho(c1^-1)) + (1-x)(rho(c2)+rho(c2^-1)) +
/// y(rho(s)+rho(s^-1)) - 2(1+y)I, and checked entry-by-entry against the
/// expected display. Throws VerificationError on mismatch.
std::array<std::array<MPoly, 3>, 3> stress_matrix();

/// The distinguished kernel polynomial p0(x,y); Omega * p0 vanishes
/// identically modulo the spectral cubic (checked in tests by divisibility).
std::array<MPoly, 3> p0_polynomial();

/// Exact kernel vector of a 3x3 matrix over an exact field (BigRational or
/// QuadValue). Returns a single basis vector of the kernel (the matrix here
/// always has a 1-dimensional kernel on the curve); throws DomainError with
/// "not on spectral curve" when the matrix is nonsingular.
template <class T>
Vec3<T> kernel_vector(std::array<std::array<T, 3>, 3> m);

/// Null vector at an exact curve point: evaluates p0 and falls back to exact
/// elimination when the polynomial vanishes (it does at (3,3) and (1,-1)).
/// Result normalized: rational case to a primitive integer vector with first
/// nonzero coordinate positive; quadratic-irrational case scaled so the
/// first nonzero coordinate is 1.
Vec3<BigRational> null_vector_exact(const BigRational& x, const BigRational& y);
Vec3<QuadValue> null_vector_exact(const BigRational& x, const QuadValue& y);
/// Numeric variant: unit Euclidean norm, first (relatively) nonzero
/// coordinate positive; falls back to a row cross product when p0 degenerates.
Vec3<double> null_vector_numeric(double x, double y);

enum class EdgeKind { strut, cable_c1, cable_c2 };
const char* edge_kind_name(EdgeKind k);

/// A realized 12-node tensegrity: node positions are the A4-orbit of the
/// normalized null vector; struts join g to gs (four disjoint triangles),
/// cables join g to g*c1 (stress x) and g to g*c2 (stress 1-x).
template <class T>
struct Framework {
    T x{}, y{};
    bool boundary = false; // x at 0 or 1: realization kept, flagged unstable
    std::array<Vec3<T>, 12> nodes{};
    struct Edge {
        int i = 0, j = 0;
        EdgeKind kind = EdgeKind::strut;
    };
    std::array<Edge, 36> edges{};
    std::array<std::array<int, 3>, 4> triangles{};

    T stress(EdgeKind k) const {
        switch (k) {
            case EdgeKind::strut: return y;
            case EdgeKind::cable_c1: return x;
            default: return T(1) - x;
        }
    }
};

/// Realize at an explicit on-curve point. Exact instantiations verify
/// d(x,y) = 0 exactly; the double instantiation checks it to 1e-9 relative.
Framework<BigRational> realize_at(const BigRational& x, const BigRational& y);
Framework<QuadValue> realize_at(const BigRational& x, const QuadValue& y);
Framework<double> realize_at(double x, double y);

/// Realize on the stable branch, 0 <= x <= 1 (endpoints flagged boundary).
Framework<double> realize_stable(double x);

/// Max equilibrium residual over nodes, relative to the largest node norm.
double equilibrium_residual(const Framework<double>& fw);
/// Exact equilibrium check: every node's stress-weighted edge sum vanishes.
bool equilibrium_exact(const Framework<BigRational>& fw);
bool equilibrium_exact(const Framework<QuadValue>& fw);

/// Wavefront OBJ with `v` lines for the 12 nodes and `l` lines for the 36
/// edges, each edge tagged `# strut` / `# cable_c1` / `# cable_c2`.
std::string export_obj(const Framework<double>& fw);
std::string export_obj(const Framework<BigRational>& fw);
std::string export_obj(const Framework<QuadValue>& fw);

/// Deterministic JSON (17 significant digits for floats); exact frameworks
/// serialize x, y and stresses as exact strings, nodes as floats.
std::string export_json(const Framework<double>& fw);
std::string export_json(const Framework<BigRational>& fw);
std::string export_json(const Framework<QuadValue>& fw);

/// Parse the numeric JSON form back (for round-trip checks).
Framework<double> framework_from_json(const std::string& text);

} // namespace a4link

#endif
