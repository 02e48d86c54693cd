#include "a4link/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace a4link {

MPoly MPoly::constant(const VarList& vars, BigRational c) {
    MPoly p(vars);
    if (!c.is_zero()) p.terms_.emplace(Exponents(vars.size(), 0), std::move(c));
    return p;
}

MPoly MPoly::var(const VarList& vars, size_t index, int power) {
    if (index >= vars.size()) throw DomainError("MPoly::var: index out of range");
    if (power < 0) throw DomainError("MPoly::var: negative power");
    MPoly p(vars);
    Exponents e(vars.size(), 0);
    e[index] = power;
    p.terms_.emplace(std::move(e), BigRational(1));
    return p;
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

BigRational MPoly::constant_value() const {
    if (terms_.empty()) return BigRational(0);
    if (!is_constant()) throw DomainError("MPoly::constant_value: not constant");
    return terms_.begin()->second;
}

size_t MPoly::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    throw DomainError("MPoly: unknown variable " + name);
}

int MPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int k : e) s += k;
        d = std::max(d, s);
    }
    return d;
}

int MPoly::degree_in(size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

BigRational MPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigRational(0) : it->second;
}

void MPoly::set_coeff(const Exponents& e, BigRational c) {
    if (e.size() != vars_.size()) throw DomainError("MPoly::set_coeff: bad exponent size");
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_[e] = std::move(c);
}

void MPoly::prune(const Exponents& e) {
    auto it = terms_.find(e);
    if (it != terms_.end() && it->second.is_zero()) terms_.erase(it);
}

static void require_same_vars(const MPoly& a, const MPoly& b) {
    if (a.vars() != b.vars())
        throw DomainError("MPoly: incompatible variable lists (convert with in_vars)");
}

MPoly MPoly::operator-() const {
    MPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    require_same_vars(*this, o);
    for (const auto& [e, c] : o.terms_) {
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    require_same_vars(*this, o);
    for (const auto& [e, c] : o.terms_) {
        auto [it, fresh] = terms_.try_emplace(e, -c);
        if (!fresh) {
            it->second -= c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    require_same_vars(a, b);
    MPoly r(a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            MPoly::Exponents e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            auto [it, fresh] = r.terms_.try_emplace(e, ca * cb);
            if (!fresh) {
                it->second += ca * cb;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

MPoly operator*(const BigRational& c, const MPoly& p) {
    MPoly r(p.vars_);
    if (c.is_zero()) return r;
    for (const auto& [e, pc] : p.terms_) r.terms_.emplace(e, c * pc);
    return r;
}

MPoly operator+(MPoly a, const BigRational& c) {
    if (c.is_zero()) return a;
    MPoly::Exponents e(a.vars_.size(), 0);
    auto [it, fresh] = a.terms_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) a.terms_.erase(it);
    }
    return a;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly acc = MPoly::constant(vars_, BigRational(1));
    MPoly base = *this;
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return acc;
}

MPoly MPoly::derivative(size_t var) const {
    MPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents ne = e;
        ne[var] -= 1;
        r.terms_.emplace(std::move(ne), BigRational(e[var]) * c);
    }
    return r;
}

std::vector<MPoly> MPoly::coeffs_in(size_t var) const {
    int d = degree_in(var);
    std::vector<MPoly> out(static_cast<size_t>(d < 0 ? 0 : d + 1), MPoly(vars_));
    for (const auto& [e, c] : terms_) {
        Exponents ne = e;
        int k = ne[var];
        ne[var] = 0;
        out[static_cast<size_t>(k)].terms_.emplace(std::move(ne), c);
    }
    return out;
}

MPoly MPoly::from_coeffs_in(const VarList& vars, size_t var, std::vector<MPoly> coeffs) {
    MPoly r(vars);
    for (size_t k = 0; k < coeffs.size(); ++k) {
        for (const auto& [e, c] : coeffs[k].terms_) {
            if (e[var] != 0) throw DomainError("from_coeffs_in: coefficient uses main variable");
            Exponents ne = e;
            ne[var] = static_cast<int>(k);
            auto [it, fresh] = r.terms_.try_emplace(std::move(ne), c);
            if (!fresh) {
                it->second += c;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

MPoly MPoly::in_vars(const VarList& vars) const {
    std::vector<int> where(vars_.size(), -1);
    for (size_t i = 0; i < vars_.size(); ++i) {
        for (size_t j = 0; j < vars.size(); ++j)
            if (vars_[i] == vars[j]) { where[i] = static_cast<int>(j); break; }
    }
    MPoly r(vars);
    for (const auto& [e, c] : terms_) {
        Exponents ne(vars.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (where[i] < 0)
                throw DomainError("MPoly::in_vars: used variable " + vars_[i] + " missing from target");
            ne[static_cast<size_t>(where[i])] = e[i];
        }
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

MPoly MPoly::subst(const std::vector<MPoly>& point) const {
    if (point.size() != vars_.size()) throw DomainError("MPoly::subst: wrong arity");
    VarList tvars = point.empty() ? VarList{} : point.front().vars();
    for (const auto& p : point) require_same_vars(point.front(), p);
    MPoly acc(tvars);
    for (const auto& [e, c] : terms_) {
        MPoly term = MPoly::constant(tvars, c);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) term = term * point[i].pow(static_cast<unsigned>(e[i]));
        acc += term;
    }
    return acc;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // descending lex over exponent vectors
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        BigRational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool any_var = std::any_of(e.begin(), e.end(), [](int k) { return k > 0; });
        if (!any_var || !(a == BigRational(1))) {
            os << a.str();
            if (any_var) os << "*";
        }
        bool first_var = true;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

// --- division -------------------------------------------------------------

std::optional<MPoly> exact_quotient(const MPoly& numer, const MPoly& denom) {
    require_same_vars(numer, denom);
    if (denom.is_zero()) throw DomainError("exact_quotient: zero divisor");
    MPoly q(numer.vars());
    MPoly r = numer;
    const auto& dlead = *denom.terms().rbegin(); // largest lex term
    while (!r.is_zero()) {
        const auto& rlead = *r.terms().rbegin();
        MPoly::Exponents e(rlead.first.size());
        bool ok = true;
        for (size_t i = 0; i < e.size(); ++i) {
            e[i] = rlead.first[i] - dlead.first[i];
            if (e[i] < 0) { ok = false; break; }
        }
        if (!ok) return std::nullopt; // leading term not reducible: not an exact multiple
        MPoly t(numer.vars());
        t.set_coeff(e, rlead.second / dlead.second);
        q += t;
        r -= t * denom;
    }
    return q;
}

bool divides(const MPoly& f, const MPoly& g, MPoly* quotient) {
    auto q = exact_quotient(g, f);
    if (!q) return false;
    if (quotient) *quotient = std::move(*q);
    return true;
}

std::pair<MPoly, MPoly> div_rem(const MPoly& f, const MPoly& g, size_t var) {
    if (g.is_zero()) throw DomainError("div_rem: zero divisor");
    int dg = g.degree_in(var);
    auto gc = g.coeffs_in(var);
    const MPoly& lead = gc.back();
    MPoly q(f.vars());
    MPoly r = f;
    while (!r.is_zero() && r.degree_in(var) >= dg) {
        int dr = r.degree_in(var);
        MPoly rl = r.coeffs_in(var)[static_cast<size_t>(dr)];
        auto c = exact_quotient(rl, lead);
        if (!c)
            throw DomainError("div_rem: leading coefficient does not divide exactly");
        MPoly t = *c * MPoly::var(f.vars(), var, dr - dg);
        q += t;
        r -= t * g;
    }
    return {q, r};
}

// --- determinant and resultant ---------------------------------------------

MPoly det_bareiss(std::vector<std::vector<MPoly>> m) {
    const size_t n = m.size();
    if (n == 0) throw DomainError("det_bareiss: empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw DomainError("det_bareiss: not square");
    const VarList& vars = m[0][0].vars();
    MPoly prev = MPoly::constant(vars, BigRational(1));
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t piv = k;
        while (piv < n && m[piv][k].is_zero()) ++piv;
        if (piv == n) return MPoly(vars); // zero column below diagonal
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                MPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                auto q = exact_quotient(num, prev);
                if (!q) throw VerificationError("det_bareiss: fraction-free division failed");
                m[i][j] = std::move(*q);
            }
            m[i][k] = MPoly(vars);
        }
        prev = m[k][k];
        if (prev.is_zero()) return MPoly(vars);
    }
    MPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

MPoly resultant(const MPoly& f, const MPoly& g, size_t var) {
    require_same_vars(f, g);
    if (f.is_zero() && g.is_zero()) throw DomainError("undefined resultant");
    const VarList& vars = f.vars();
    int m = f.degree_in(var);
    int n = g.degree_in(var);
    if (m <= 0 && n <= 0) return MPoly::constant(vars, BigRational(1));
    if (m <= 0) {
        // f constant in var (possibly zero): Res = f^deg(g)
        MPoly base = f;
        return base.pow(static_cast<unsigned>(n));
    }
    if (n <= 0) {
        MPoly base = g;
        return base.pow(static_cast<unsigned>(m));
    }
    auto fc = f.coeffs_in(var);
    auto gc = g.coeffs_in(var);
    const size_t N = static_cast<size_t>(m + n);
    std::vector<std::vector<MPoly>> syl(N, std::vector<MPoly>(N, MPoly(vars)));
    // n rows of f coefficients (descending), then m rows of g coefficients
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k)
            syl[static_cast<size_t>(r)][static_cast<size_t>(r + k)] = fc[static_cast<size_t>(m - k)];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k)
            syl[static_cast<size_t>(n + r)][static_cast<size_t>(r + k)] = gc[static_cast<size_t>(n - k)];
    return det_bareiss(std::move(syl));
}

MPoly resultant(const MPoly& f, const MPoly& g, const std::string& var) {
    return resultant(f, g, f.var_index(var));
}

} // namespace a4link
