#ifndef A4LINK_INTERVAL_HPP
#define A4LINK_INTERVAL_HPP

#include "a4link/errors.hpp"
#include "a4link/mpoly.hpp"
#include "a4link/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace a4link {

/// Closed interval with exact rational endpoints. Because the endpoints are
/// rationals and all endpoint arithmetic is exact, the containment guarantee
/// is tightness-free: the true value of an evaluated expression always lies
/// inside the result.
struct Interval {
    BigRational lo, hi;

    Interval() : lo(0), hi(0) {}
    explicit Interval(const BigRational& point) : lo(point), hi(point) {}
    Interval(BigRational l, BigRational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw DomainError("Interval: lo > hi");
    }

    bool is_point() const { return lo == hi; }
    bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
    bool contains(const BigRational& v) const { return lo <= v && v <= hi; }
    BigRational width() const { return hi - lo; }
    BigRational midpoint() const { return (lo + hi) / BigRational(2); }
    // +1 / -1 when the sign is decided, 0 when the interval meets zero.
    int sign() const {
        if (lo.sign() > 0) return 1;
        if (hi.sign() < 0) return -1;
        return 0;
    }

    friend Interval operator+(const Interval& a, const Interval& b) {
        return Interval(a.lo + b.lo, a.hi + b.hi);
    }
    friend Interval operator-(const Interval& a, const Interval& b) {
        return Interval(a.lo - b.hi, a.hi - b.lo);
    }
    friend Interval operator-(const Interval& a) { return Interval(-a.hi, -a.lo); }
    friend Interval operator*(const Interval& a, const Interval& b);
};

Interval ipow(const Interval& a, unsigned e);

/// Outward enclosure of f over the box (variable name -> interval); exact
/// when every input interval is a point.
Interval interval_eval(const MPoly& f, const std::map<std::string, Interval>& box);
Interval interval_eval(const MPoly& f, const std::vector<Interval>& box);

/// Enclosure of sqrt over a nonnegative interval with dyadic endpoints of
/// precision 2^-precision_bits around the true values.
Interval sqrt_enclosure(const Interval& v, unsigned precision_bits);
BigRational sqrt_lower_bound(const BigRational& v, unsigned precision_bits);
BigRational sqrt_upper_bound(const BigRational& v, unsigned precision_bits);

} // namespace a4link

#endif
