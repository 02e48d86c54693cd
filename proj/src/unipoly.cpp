#include "a4link/unipoly.hpp"

#include <algorithm>

namespace a4link {

UPoly utrim(UPoly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

UPoly ufrom_mpoly(const MPoly& f, size_t var) {
    int d = f.degree_in(var);
    UPoly out(static_cast<size_t>(d < 0 ? 0 : d + 1), BigRational(0));
    for (const auto& [e, c] : f.terms()) {
        for (size_t i = 0; i < e.size(); ++i)
            if (i != var && e[i] != 0)
                throw DomainError("ufrom_mpoly: polynomial is not univariate in the given variable");
        out[static_cast<size_t>(e[var])] = c;
    }
    return utrim(std::move(out));
}

MPoly uto_mpoly(const UPoly& p, const VarList& vars, size_t var) {
    MPoly r(vars);
    for (size_t k = 0; k < p.size(); ++k) {
        if (p[k].is_zero()) continue;
        MPoly::Exponents e(vars.size(), 0);
        e[var] = static_cast<int>(k);
        r.set_coeff(e, p[k]);
    }
    return r;
}

int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

BigRational ueval(const UPoly& p, const BigRational& x) {
    BigRational acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double ueval(const UPoly& p, double x) {
    double acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + it->to_double();
    return acc;
}

UPoly uneg(const UPoly& p) {
    UPoly r = p;
    for (auto& c : r) c = -c;
    return r;
}

UPoly uadd(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()), BigRational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return utrim(std::move(r));
}

UPoly usub(const UPoly& a, const UPoly& b) { return uadd(a, uneg(b)); }

UPoly umul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, BigRational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return utrim(std::move(r));
}

UPoly uscale(const BigRational& c, const UPoly& p) {
    if (c.is_zero()) return {};
    UPoly r = p;
    for (auto& x : r) x *= c;
    return r;
}

UPoly uderiv(const UPoly& p) {
    if (p.size() <= 1) return {};
    UPoly r(p.size() - 1, BigRational(0));
    for (size_t i = 1; i < p.size(); ++i) r[i - 1] = BigRational(static_cast<long>(i)) * p[i];
    return utrim(std::move(r));
}

UPoly umonic(const UPoly& p) {
    if (p.empty()) return {};
    return uscale(p.back().inverse(), p);
}

std::pair<UPoly, UPoly> udivrem(const UPoly& a, const UPoly& b) {
    if (b.empty()) throw DomainError("udivrem: division by zero polynomial");
    UPoly r = a;
    if (a.size() < b.size()) return {{}, std::move(r)};
    UPoly q(a.size() - b.size() + 1, BigRational(0));
    const BigRational inv_lead = b.back().inverse();
    for (size_t k = a.size(); k-- >= b.size();) {
        if (r.size() <= k || r[k].is_zero()) {
            if (k + 1 == b.size()) break;
            continue;
        }
        BigRational c = r[k] * inv_lead;
        q[k - b.size() + 1] = c;
        for (size_t i = 0; i < b.size(); ++i) r[k - b.size() + 1 + i] -= c * b[i];
        if (k + 1 == b.size()) break;
    }
    return {utrim(std::move(q)), utrim(std::move(r))};
}

UPoly ugcd(UPoly a, UPoly b) {
    a = utrim(std::move(a));
    b = utrim(std::move(b));
    while (!b.empty()) {
        auto [q, r] = udivrem(a, b);
        a = std::move(b);
        b = umonic(std::move(r)); // keeps coefficient growth in check
    }
    return a.empty() ? a : umonic(a);
}

std::vector<BigInt> uprimitive(const UPoly& p) {
    if (p.empty()) return {};
    BigInt lcm_den(1);
    for (const auto& c : p) {
        BigInt d = c.den();
        BigInt g;
        mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
        lcm_den = lcm_den / g * d;
    }
    std::vector<BigInt> out;
    out.reserve(p.size());
    BigInt content(0);
    for (const auto& c : p) {
        BigInt v = c.num() * (lcm_den / c.den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        out.push_back(v);
    }
    if (sgn(content) != 0)
        for (auto& v : out) v /= content;
    if (sgn(out.back()) < 0)
        for (auto& v : out) v = -v;
    return out;
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f) {
    std::vector<std::pair<UPoly, int>> out;
    UPoly p = utrim(f);
    if (udeg(p) <= 0) return out;
    p = umonic(p);
    // Yun's algorithm
    UPoly dp = uderiv(p);
    UPoly a = ugcd(p, dp);
    UPoly b = udivrem(p, a).first;
    UPoly c = udivrem(dp, a).first;
    UPoly d = usub(c, uderiv(b));
    int i = 1;
    while (udeg(b) > 0) {
        UPoly g = ugcd(b, d);
        if (udeg(g) > 0) out.emplace_back(g, i);
        b = udivrem(b, g).first;
        c = udivrem(d, g).first;
        d = usub(c, uderiv(b));
        ++i;
    }
    return out;
}

UPoly squarefree_part(const UPoly& f) {
    UPoly p = utrim(f);
    if (udeg(p) <= 0) return p;
    UPoly g = ugcd(p, uderiv(p));
    return udivrem(umonic(p), g).first;
}

static std::vector<BigInt> positive_divisors(const BigInt& n_in) {
    BigInt n = ::abs(n_in);
    std::vector<BigInt> divs;
    if (sgn(n) == 0) return divs;
    for (BigInt i(1); i * i <= n; ++i) {
        if (n % i == 0) {
            divs.push_back(i);
            BigInt other = n / i;
            if (other != i) divs.push_back(other);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::vector<BigRational> rational_roots(const UPoly& f) {
    std::vector<BigRational> roots;
    UPoly p = utrim(f);
    if (udeg(p) <= 0) return roots;
    // strip x^k: 0 is a root iff the constant term vanishes
    size_t shift = 0;
    while (shift < p.size() && p[shift].is_zero()) ++shift;
    if (shift > 0) {
        roots.emplace_back(0);
        p.erase(p.begin(), p.begin() + static_cast<long>(shift));
    }
    if (udeg(p) <= 0) return roots;
    std::vector<BigInt> zp = uprimitive(p);
    for (const BigInt& num : positive_divisors(zp.front())) {
        for (const BigInt& den : positive_divisors(zp.back())) {
            BigRational cand(num, den);
            if (ueval(p, cand).is_zero()) roots.push_back(cand);
            BigRational neg = -cand;
            if (ueval(p, neg).is_zero()) roots.push_back(neg);
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::vector<UPoly> sturm_chain(const UPoly& f) {
    std::vector<UPoly> chain;
    UPoly p0 = utrim(f);
    if (p0.empty()) return chain;
    chain.push_back(p0);
    UPoly p1 = uderiv(p0);
    while (!p1.empty()) {
        chain.push_back(p1);
        UPoly r = udivrem(chain[chain.size() - 2], p1).second;
        p1 = uneg(std::move(r));
    }
    return chain;
}

int sign_variations_at(const std::vector<UPoly>& chain, const BigRational& x) {
    int var = 0, last = 0;
    for (const auto& p : chain) {
        int s = ueval(p, x).sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

int sturm_count_open(const std::vector<UPoly>& chain, const BigRational& lo, const BigRational& hi) {
    return sign_variations_at(chain, lo) - sign_variations_at(chain, hi);
}

std::vector<IsolatingInterval> sturm_isolate(const MPoly& f, const Interval& window) {
    // locate the single used variable (default to slot 0 for constants)
    size_t var = 0;
    bool found = false;
    for (size_t i = 0; i < f.vars().size(); ++i) {
        if (f.degree_in(i) > 0) {
            if (found) throw DomainError("sturm_isolate: polynomial is multivariate");
            var = i;
            found = true;
        }
    }
    return sturm_isolate(ufrom_mpoly(f, var), window);
}

std::vector<IsolatingInterval> sturm_isolate(const UPoly& f, const Interval& window) {
    std::vector<IsolatingInterval> out;
    UPoly p = utrim(f);
    if (p.empty()) throw DomainError("sturm_isolate: zero polynomial");
    if (udeg(p) == 0) return out;
    if (!(window.lo < window.hi)) throw DomainError("sturm_isolate: empty window");

    auto factors = squarefree_decomposition(p);
    auto mult_of_rational = [&](const BigRational& r) {
        for (const auto& [g, m] : factors)
            if (ueval(g, r).is_zero()) return m;
        return 1;
    };

    // exact rational roots first
    std::vector<BigRational> rroots = rational_roots(p);
    UPoly h = squarefree_part(p);
    for (const auto& r : rroots) {
        // deflate regardless of window so the Sturm stage sees no rational roots
        UPoly lin{-r, BigRational(1)};
        h = udivrem(h, lin).first;
        if (window.lo < r && r < window.hi)
            out.push_back(IsolatingInterval{r, r, mult_of_rational(r)});
    }

    if (udeg(h) > 0) {
        auto chain = sturm_chain(h);
        // midpoint that is never a rational root of p (h itself has none)
        auto safe_mid = [&rroots](const BigRational& lo, const BigRational& hi) {
            BigRational mid = (lo + hi) / BigRational(2);
            while (std::find(rroots.begin(), rroots.end(), mid) != rroots.end())
                mid = (lo + mid) / BigRational(2);
            return mid;
        };
        struct Piece { BigRational lo, hi; int count; };
        std::vector<Piece> stack;
        int total = sturm_count_open(chain, window.lo, window.hi);
        if (total > 0) stack.push_back({window.lo, window.hi, total});
        while (!stack.empty()) {
            Piece pc = stack.back();
            stack.pop_back();
            if (pc.count == 1) {
                // shrink until the closed piece avoids every rational root of
                // p, so every square-free factor is nonzero at both endpoints
                BigRational lo = pc.lo, hi = pc.hi;
                auto touches_rational = [&] {
                    for (const auto& r : rroots)
                        if (lo <= r && r <= hi) return true;
                    return false;
                };
                while (touches_rational()) {
                    BigRational mid = safe_mid(lo, hi);
                    if (sturm_count_open(chain, lo, mid) == 1) hi = mid; else lo = mid;
                }
                IsolatingInterval iv{lo, hi, 1};
                for (const auto& [g, m] : factors) {
                    if (udeg(g) > 0 && sturm_count_open(sturm_chain(g), lo, hi) == 1) {
                        iv.multiplicity = m;
                        break;
                    }
                }
                out.push_back(std::move(iv));
            } else if (pc.count > 1) {
                BigRational mid = safe_mid(pc.lo, pc.hi);
                int left = sturm_count_open(chain, pc.lo, mid);
                if (left > 0) stack.push_back({pc.lo, mid, left});
                if (pc.count - left > 0) stack.push_back({mid, pc.hi, pc.count - left});
            }
        }
    }

    std::sort(out.begin(), out.end(),
              [](const IsolatingInterval& a, const IsolatingInterval& b) { return a.lo < b.lo; });
    return out;
}

IsolatingInterval refine_root(const UPoly& f, IsolatingInterval iv, const BigRational& width) {
    if (iv.is_exact()) return iv;
    auto chain = sturm_chain(f);
    while (iv.hi - iv.lo > width) {
        BigRational mid = (iv.lo + iv.hi) / BigRational(2);
        if (ueval(f, mid).is_zero()) {
            // landed exactly on the root
            iv.lo = iv.hi = mid;
            return iv;
        }
        if (sturm_count_open(chain, iv.lo, mid) == 1)
            iv.hi = mid;
        else
            iv.lo = mid;
    }
    return iv;
}

} // namespace a4link
