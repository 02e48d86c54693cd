#ifndef A4LINK_LINKING_HPP
#define A4LINK_LINKING_HPP

#include "a4link/framework.hpp"
#include "a4link/io.hpp"
#include "a4link/mpoly.hpp"
#include "a4link/quadext.hpp"
#include "a4link/spectral.hpp"
#include "a4link/unipoly.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace a4link {

/// Canonical numerators/denominators of the strut-triangle intersection
/// parameters on the curve:
///   tau = N_tau / D_tau,  R1 = N1 / D,  R2 = N2 / D,  D = D_tau * P,
///   N1 = (-2x+y+3)(x-1) Q1,  N2 = -(2x^2+xy-5x-4y) Q2.
struct IntersectionFormulas {
    MPoly N_tau, D_tau, N1, N2, D, P, Q1, Q2;

    // Transcribes the closed forms, then re-derives the parameters from the
    // intersection linear system by Cramer's rule over the polynomial ring
    // and verifies the cross-multiplied differences vanish modulo d8 (the
    // tau identity holds exactly; det M = -16 D exactly). Throws
    // VerificationError with the residual attached on any mismatch.
    static const IntersectionFormulas& instance();
};

enum class CrossingClass { interior_crossing, boundary, miss };
const char* crossing_class_name(CrossingClass c);

template <class T>
struct IntersectionParams {
    T tau{}, r1{}, r2{};
    CrossingClass cls = CrossingClass::miss;
};

/// Evaluate the canonical rational functions at a curve point; throws
/// PoleError naming the vanishing denominator.
IntersectionParams<BigRational> intersection_params_at(const BigRational& x, const BigRational& y);
IntersectionParams<QuadValue> intersection_params_at(const BigRational& x, const QuadValue& y);
IntersectionParams<double> intersection_params_at(double x, double y);

/// Independent numeric route: solve the 3x3 intersection system directly
/// from realized node coordinates (no canonical formulas involved).
IntersectionParams<double> intersection_params_direct(double x);

struct LinkingOptions {
    double margin = 1e-12; // relative margin below which a decision is degenerate
};

/// Linking number of strut triangles a and b (0..3): signed count of
/// transversal crossings of b's edges through the closed triangular disk of
/// a. Exact overloads decide every sign exactly; the numeric overload
/// requires every decision to clear the margin and throws
/// DegenerateConfiguration otherwise.
int triangle_pair_linking(const Framework<double>& fw, int a, int b, const LinkingOptions& opt = {});
int triangle_pair_linking(const Framework<BigRational>& fw, int a, int b);
int triangle_pair_linking(const Framework<QuadValue>& fw, int a, int b);

using LinkingMatrix = std::array<std::array<int, 4>, 4>;
LinkingMatrix linking_matrix(const Framework<double>& fw, const LinkingOptions& opt = {});
LinkingMatrix linking_matrix(const Framework<BigRational>& fw);
LinkingMatrix linking_matrix(const Framework<QuadValue>& fw);

/// One isolated root of a tracked resultant inside (0,1).
struct RootRecord {
    BigRational lo, hi;     // lo == hi for an exact rational root
    bool exact = false;
    bool decided = true;    // false: refinement budget exhausted
    bool on_stable_branch = false; // F vanishes at (root, g(root))
    std::string stable_value;      // exact value (rational roots) or enclosure note
    std::string note;
};

/// Per-function certificate record.
struct FunctionRecord {
    std::string name;
    MPoly resultant; // univariate in x
    std::optional<bool> paper_factorization_matches; // nullopt: none stated
    int factorization_global_sign = 1; // -1 if the match needed a global flip
    std::vector<RootRecord> roots_in_01;
    int sign_at_half = 0;          // sign of F(1/2, -1/3)
    BigRational value_at_half;
    bool sign_constant = false;    // certified constant sign on the open stable arc
    bool has_factor_D_tau = false;
    std::vector<BigRational> rational_roots_all; // over the whole real line
};

struct CertificateReport {
    std::vector<FunctionRecord> functions;
    bool disc_positive_on_01 = false;
    bool verdict = false;
    Json to_json() const;
    const FunctionRecord& function(const std::string& name) const;
};

/// The sign-persistence certificate for
///   {N_tau, D_tau, D_tau - N_tau, N1, N2, D, D - N1 - N2}.
CertificateReport persistence_certificate();

/// Interval-arithmetic branch membership for one isolated irrational root of
/// `res_squarefree` in (0,1): decides the sign of F at (root, g(root)) on the
/// stable branch, refining up to 64 bisections. Exposed for direct testing;
/// persistence_certificate uses it for every non-rational resultant root.
RootRecord certify_root_on_stable_branch(IsolatingInterval iv, const UPoly& res_squarefree,
                                         const MPoly& F);

/// The Remark's root-coincidence pattern over the computed resultants.
struct RemarkReport {
    std::vector<std::pair<std::string, std::vector<BigRational>>> roots_by_function;
    std::vector<BigRational> union_of_roots;
    bool roots_subset_of_point_xs = false; // union within {0, 1/2, 1, -2, 3}
    bool half_only_via_D_tau = false;      // root 1/2 only for D_tau-divisible functions
    bool pattern_holds = false;
    Json to_json() const;
};
RemarkReport remark_check(const CertificateReport& cert);

} // namespace a4link

#endif
