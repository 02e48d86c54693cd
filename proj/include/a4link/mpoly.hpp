#ifndef A4LINK_MPOLY_HPP
#define A4LINK_MPOLY_HPP

#include "a4link/errors.hpp"
#include "a4link/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace a4link {

using VarList = std::vector<std::string>;

/// Sparse multivariate polynomial over BigRational with a fixed, ordered
/// variable list. Terms map exponent vectors to nonzero coefficients;
/// zero-coefficient terms are pruned on every operation. Arithmetic between
/// two polynomials requires identical variable lists; conversion between
/// variable sets is explicit (in_vars).
class MPoly {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, BigRational>; // lex order on exponents

    MPoly() = default; // zero polynomial over the empty variable list
    explicit MPoly(VarList vars) : vars_(std::move(vars)) {}

    static MPoly constant(const VarList& vars, BigRational c);
    static MPoly var(const VarList& vars, size_t index, int power = 1);

    const VarList& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // pre: is_constant(); zero polynomial yields 0.
    BigRational constant_value() const;
    size_t var_index(const std::string& name) const; // throws DomainError if absent

    int total_degree() const;               // -1 for the zero polynomial
    int degree_in(size_t var) const;        // -1 for the zero polynomial
    BigRational coeff(const Exponents& e) const;
    void set_coeff(const Exponents& e, BigRational c);

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    friend MPoly operator*(const BigRational& c, const MPoly& p);
    friend MPoly operator*(long c, const MPoly& p) { return BigRational(c) * p; }
    friend MPoly operator+(MPoly a, const BigRational& c);
    friend MPoly operator+(MPoly a, long c) { return std::move(a) + BigRational(c); }
    friend MPoly operator-(MPoly a, long c) { return std::move(a) + BigRational(-c); }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    MPoly pow(unsigned e) const;
    MPoly derivative(size_t var) const;

    // Coefficients of *this viewed as univariate in `var`, ascending degree,
    // each an MPoly over the same variable list with exponent 0 in `var`.
    std::vector<MPoly> coeffs_in(size_t var) const;
    static MPoly from_coeffs_in(const VarList& vars, size_t var, std::vector<MPoly> coeffs);

    // Re-express over a new variable list; every used variable must be
    // present by name in `vars`.
    MPoly in_vars(const VarList& vars) const;

    // Evaluate with each variable bound to point[i]. Scalar must support
    // +, * and construction from BigRational (double uses to_double()).
    template <class Scalar>
    Scalar eval(const std::vector<Scalar>& point) const;

    // Substitute polynomials for the variables: point[i] replaces vars()[i].
    // All point entries must share one variable list, which becomes the
    // result's list.
    MPoly subst(const std::vector<MPoly>& point) const;

    // Deterministic human-readable form, terms in descending lex order.
    std::string str() const;

private:
    void prune(const Exponents& e);

    VarList vars_;
    TermMap terms_;
};

namespace detail {
inline BigRational scalar_from_rational(const BigRational& c, const BigRational*) { return c; }
inline double scalar_from_rational(const BigRational& c, const double*) { return c.to_double(); }
template <class S>
S scalar_from_rational(const BigRational& c, const S*) { return S(c); }
} // namespace detail

template <class Scalar>
Scalar MPoly::eval(const std::vector<Scalar>& point) const {
    if (point.size() != vars_.size())
        throw DomainError("MPoly::eval: wrong point dimension");
    Scalar acc = detail::scalar_from_rational(BigRational(0), static_cast<const Scalar*>(nullptr));
    for (const auto& [e, c] : terms_) {
        Scalar term = detail::scalar_from_rational(c, static_cast<const Scalar*>(nullptr));
        for (size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) term = term * point[i];
        acc = acc + term;
    }
    return acc;
}

/// Exact quotient numer/denom; nullopt when denom does not divide numer.
std::optional<MPoly> exact_quotient(const MPoly& numer, const MPoly& denom);

/// true iff f divides g; on success *quotient (if non-null) receives g/f.
bool divides(const MPoly& f, const MPoly& g, MPoly* quotient = nullptr);

/// Division with remainder of f by g viewed as univariate in `var`: returns
/// (q, r) with f = q*g + r and deg_var r < deg_var g. Requires the leading
/// var-coefficient of g to divide exactly at every step (always true when it
/// is a nonzero constant).
std::pair<MPoly, MPoly> div_rem(const MPoly& f, const MPoly& g, size_t var);

/// Determinant of a square matrix of polynomials by fraction-free
/// (division-exact) Bareiss elimination with row pivoting.
MPoly det_bareiss(std::vector<std::vector<MPoly>> m);

/// Resultant of f and g with respect to `var`: determinant of the Sylvester
/// matrix with the f rows first, computed fraction-free. If one input has
/// degree 0 in var, returns that constant-in-var polynomial raised to the
/// other's degree. Both inputs zero is an error.
MPoly resultant(const MPoly& f, const MPoly& g, size_t var);
MPoly resultant(const MPoly& f, const MPoly& g, const std::string& var);

} // namespace a4link

#endif
