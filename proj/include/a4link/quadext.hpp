#ifndef A4LINK_QUADEXT_HPP
#define A4LINK_QUADEXT_HPP

#include "a4link/errors.hpp"
#include "a4link/rational.hpp"

#include <string>

namespace a4link {

/// Exact element a + b*sqrt(D) of the real quadratic extension Q(sqrt(D)),
/// D a fixed nonnegative rational. When D is a perfect square the value is
/// folded into the rational part on construction, so b != 0 implies sqrt(D)
/// is irrational. Two operands must live over the same D unless one of them
/// is rational. Signs are decided exactly, never by floating point.
class QuadValue {
public:
    QuadValue() : a_(0), b_(0), d_(0) {}
    QuadValue(BigRational rational) : a_(std::move(rational)), b_(0), d_(0) {}
    QuadValue(long n) : a_(n), b_(0), d_(0) {}
    QuadValue(BigRational a, BigRational b, BigRational d);

    static QuadValue sqrt_of(const BigRational& d) { return QuadValue(BigRational(0), BigRational(1), d); }

    const BigRational& rat_part() const { return a_; }
    const BigRational& irr_part() const { return b_; }
    const BigRational& radicand() const { return d_; }
    bool is_rational() const { return b_.is_zero(); }
    // pre: is_rational()
    const BigRational& to_rational() const;

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    int sign() const;

    QuadValue operator-() const { return QuadValue::raw(-a_, -b_, d_); }
    friend QuadValue operator+(const QuadValue& x, const QuadValue& y);
    friend QuadValue operator-(const QuadValue& x, const QuadValue& y);
    friend QuadValue operator*(const QuadValue& x, const QuadValue& y);
    friend QuadValue operator/(const QuadValue& x, const QuadValue& y);

    friend bool operator==(const QuadValue& x, const QuadValue& y) { return (x - y).is_zero(); }
    friend bool operator<(const QuadValue& x, const QuadValue& y) { return (x - y).sign() < 0; }
    friend bool operator>(const QuadValue& x, const QuadValue& y) { return (x - y).sign() > 0; }
    friend bool operator<=(const QuadValue& x, const QuadValue& y) { return (x - y).sign() <= 0; }
    friend bool operator>=(const QuadValue& x, const QuadValue& y) { return (x - y).sign() >= 0; }

    double to_double() const;
    std::string str() const; // "a", or "a + b*sqrt(d)" exact form

private:
    static QuadValue raw(BigRational a, BigRational b, BigRational d);
    static BigRational common_radicand(const QuadValue& x, const QuadValue& y);

    BigRational a_, b_, d_;
};

} // namespace a4link

#endif
