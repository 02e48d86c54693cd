#include "a4link/interval.hpp"

#include <algorithm>

namespace a4link {

Interval operator*(const Interval& a, const Interval& b) {
    BigRational c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
    BigRational lo = std::min(std::min(c1, c2), std::min(c3, c4));
    BigRational hi = std::max(std::max(c1, c2), std::max(c3, c4));
    return Interval(std::move(lo), std::move(hi));
}

Interval ipow(const Interval& a, unsigned e) {
    if (e == 0) return Interval(BigRational(1));
    if (e % 2 == 1 || a.lo.sign() >= 0) {
        return Interval(a.lo.pow(e), a.hi.pow(e));
    }
    if (a.hi.sign() <= 0) return Interval(a.hi.pow(e), a.lo.pow(e));
    // even power of a straddling interval
    return Interval(BigRational(0), std::max(a.lo.pow(e), a.hi.pow(e)));
}

Interval interval_eval(const MPoly& f, const std::vector<Interval>& box) {
    if (box.size() != f.vars().size()) throw DomainError("interval_eval: wrong box dimension");
    Interval acc(BigRational(0));
    for (const auto& [e, c] : f.terms()) {
        Interval term(c);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) term = term * ipow(box[i], static_cast<unsigned>(e[i]));
        acc = acc + term;
    }
    return acc;
}

Interval interval_eval(const MPoly& f, const std::map<std::string, Interval>& box) {
    std::vector<Interval> v;
    v.reserve(f.vars().size());
    for (const auto& name : f.vars()) {
        auto it = box.find(name);
        if (it == box.end()) throw DomainError("interval_eval: unassigned variable " + name);
        v.push_back(it->second);
    }
    return interval_eval(f, v);
}

BigRational sqrt_lower_bound(const BigRational& v, unsigned precision_bits) {
    if (v.sign() < 0) throw DomainError("sqrt_lower_bound: negative input");
    // floor(sqrt(v * 4^k)) / 2^k <= sqrt(v)
    BigInt scale = BigInt(1) << (2 * precision_bits);
    BigInt scaled = (v.num() * scale) / v.den(); // floor
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    return BigRational(root, BigInt(1) << precision_bits);
}

BigRational sqrt_upper_bound(const BigRational& v, unsigned precision_bits) {
    if (v.sign() < 0) throw DomainError("sqrt_upper_bound: negative input");
    BigInt scale = BigInt(1) << (2 * precision_bits);
    BigInt num = v.num() * scale;
    BigInt scaled = num / v.den();
    if (scaled * v.den() != num) scaled += 1; // ceil
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    if (root * root < scaled) root += 1; // ceil of the square root
    return BigRational(root, BigInt(1) << precision_bits);
}

Interval sqrt_enclosure(const Interval& v, unsigned precision_bits) {
    return Interval(sqrt_lower_bound(v.lo, precision_bits), sqrt_upper_bound(v.hi, precision_bits));
}

} // namespace a4link
