#ifndef A4LINK_UNIPOLY_HPP
#define A4LINK_UNIPOLY_HPP

#include "a4link/interval.hpp"
#include "a4link/mpoly.hpp"
#include "a4link/rational.hpp"

#include <vector>

namespace a4link {

/// Dense univariate polynomial over BigRational, coefficients ascending,
/// no trailing zeros (the zero polynomial is the empty vector).
using UPoly = std::vector<BigRational>;

UPoly utrim(UPoly p);
UPoly ufrom_mpoly(const MPoly& f, size_t var); // other variables must be absent
MPoly uto_mpoly(const UPoly& p, const VarList& vars, size_t var);
int udeg(const UPoly& p); // -1 for zero
BigRational ueval(const UPoly& p, const BigRational& x);
double ueval(const UPoly& p, double x);
UPoly uneg(const UPoly& p);
UPoly uadd(const UPoly& a, const UPoly& b);
UPoly usub(const UPoly& a, const UPoly& b);
UPoly umul(const UPoly& a, const UPoly& b);
UPoly uscale(const BigRational& c, const UPoly& p);
UPoly uderiv(const UPoly& p);
UPoly umonic(const UPoly& p);
std::pair<UPoly, UPoly> udivrem(const UPoly& a, const UPoly& b);
UPoly ugcd(UPoly a, UPoly b); // monic gcd; gcd(0,0) = 0

/// Integer-primitive version: clear denominators, divide by content, make
/// the leading coefficient positive.
std::vector<BigInt> uprimitive(const UPoly& p);

/// Square-free decomposition f = c * prod_i out[i].first^(out[i].second)
/// with pairwise-coprime square-free monic factors (Yun).
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f);
UPoly squarefree_part(const UPoly& f);

/// All rational roots with multiplicity ignored (rational-root theorem on
/// the primitive integer form; never a factoring engine).
std::vector<BigRational> rational_roots(const UPoly& f);

/// One isolated real root: either an exact rational point (lo == hi) or an
/// open interval (lo, hi) certified by Sturm counting to contain exactly one
/// distinct real root of the target polynomial.
struct IsolatingInterval {
    BigRational lo, hi;
    int multiplicity = 1;
    bool is_exact() const { return lo == hi; }
};

/// Sturm chain of a (square-free) polynomial.
std::vector<UPoly> sturm_chain(const UPoly& f);
/// Number of sign variations at x over the chain (zeros skipped).
int sign_variations_at(const std::vector<UPoly>& chain, const BigRational& x);
/// Distinct real roots of square-free f in the open interval (lo, hi);
/// pre: f(lo) != 0, f(hi) != 0.
int sturm_count_open(const std::vector<UPoly>& chain, const BigRational& lo, const BigRational& hi);

/// Isolate every distinct real root of f in the open window (window.lo,
/// window.hi). Exact rational roots come back as degenerate intervals;
/// irrational roots as disjoint open intervals each containing exactly one
/// root and no rational root. Multiplicities via the square-free
/// decomposition.
std::vector<IsolatingInterval> sturm_isolate(const MPoly& f, const Interval& window);
std::vector<IsolatingInterval> sturm_isolate(const UPoly& f, const Interval& window);

/// Shrink an isolating interval of f (square-free) by repeated bisection
/// until hi - lo <= width. Exact intervals pass through unchanged.
IsolatingInterval refine_root(const UPoly& f, IsolatingInterval iv, const BigRational& width);

} // namespace a4link

#endif
