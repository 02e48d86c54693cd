#include "a4link/quadext.hpp"

#include "a4link/interval.hpp"

#include <cmath>

namespace a4link {

QuadValue QuadValue::raw(BigRational a, BigRational b, BigRational d) {
    QuadValue v;
    v.a_ = std::move(a);
    v.b_ = std::move(b);
    v.d_ = v.b_.is_zero() ? BigRational(0) : std::move(d);
    return v;
}

QuadValue::QuadValue(BigRational a, BigRational b, BigRational d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    if (d_.sign() < 0) throw DomainError("QuadValue: negative radicand");
    if (d_.is_zero()) b_ = BigRational(0);
    if (b_.is_zero()) { d_ = BigRational(0); return; }
    if (d_.is_perfect_square()) {
        a_ += b_ * d_.sqrt_exact();
        b_ = BigRational(0);
        d_ = BigRational(0);
    }
}

const BigRational& QuadValue::to_rational() const {
    if (!is_rational()) throw DomainError("QuadValue: irrational value");
    return a_;
}

BigRational QuadValue::common_radicand(const QuadValue& x, const QuadValue& y) {
    if (x.b_.is_zero()) return y.d_;
    if (y.b_.is_zero()) return x.d_;
    if (x.d_ != y.d_) throw DomainError("QuadValue: mixed radicands");
    return x.d_;
}

QuadValue operator+(const QuadValue& x, const QuadValue& y) {
    BigRational d = QuadValue::common_radicand(x, y);
    return QuadValue(x.a_ + y.a_, x.b_ + y.b_, d);
}

QuadValue operator-(const QuadValue& x, const QuadValue& y) {
    BigRational d = QuadValue::common_radicand(x, y);
    return QuadValue(x.a_ - y.a_, x.b_ - y.b_, d);
}

QuadValue operator*(const QuadValue& x, const QuadValue& y) {
    BigRational d = QuadValue::common_radicand(x, y);
    return QuadValue(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d);
}

QuadValue operator/(const QuadValue& x, const QuadValue& y) {
    if (y.is_zero()) throw DomainError("QuadValue: division by zero");
    if (y.b_.is_zero()) return QuadValue(x.a_ / y.a_, x.b_ / y.a_, x.d_);
    // multiply by the conjugate; the norm a^2 - b^2 d of a nonzero value with
    // irrational sqrt(d) is nonzero
    BigRational d = QuadValue::common_radicand(x, y);
    BigRational norm = y.a_ * y.a_ - y.b_ * y.b_ * d;
    QuadValue conj = QuadValue::raw(y.a_, -y.b_, d);
    QuadValue num = x * conj;
    return QuadValue(num.a_ / norm, num.b_ / norm, d);
}

int QuadValue::sign() const {
    if (b_.is_zero()) return a_.sign();
    if (a_.is_zero()) return b_.sign();
    int sa = a_.sign(), sb = b_.sign();
    if (sa > 0 && sb > 0) return 1;
    if (sa < 0 && sb < 0) return -1;
    // opposite parts: compare a^2 against b^2 d (sqrt(d) irrational, so never equal)
    int cmp = (a_ * a_ - b_ * b_ * d_).sign();
    if (cmp == 0) throw VerificationError("QuadValue::sign: rational square slipped through");
    return cmp > 0 ? sa : sb;
}

double QuadValue::to_double() const {
    if (b_.is_zero()) return a_.to_double();
    // 64-bit dyadic enclosure keeps the final double faithful to ~1 ulp
    Interval s = sqrt_enclosure(Interval(d_), 64);
    return (a_ + b_ * (b_.sign() > 0 ? s.lo : s.hi)).to_double();
}

std::string QuadValue::str() const {
    if (b_.is_zero()) return a_.str();
    std::string out = a_.is_zero() ? "" : a_.str();
    if (!a_.is_zero()) out += b_.sign() > 0 ? " + " : " - ";
    else if (b_.sign() < 0) out += "-";
    BigRational babs = b_.abs();
    if (!(babs == BigRational(1))) out += babs.str() + "*";
    out += "sqrt(" + d_.str() + ")";
    return out;
}

} // namespace a4link
