#ifndef A4LINK_RATIONAL_HPP
#define A4LINK_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace a4link {

using BigInt = mpz_class;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. All arithmetic is exact; there is no rounding anywhere.
class BigRational {
public:
    BigRational() : v_(0) {}
    BigRational(long n) : v_(n) {}
    BigRational(long num, long den);
    explicit BigRational(const BigInt& n) : v_(n) {}
    BigRational(const BigInt& num, const BigInt& den);

    // Accepts "p", "-p", "p/q". Returns nullopt on malformed input.
    static std::optional<BigRational> parse(std::string_view s);

    BigRational operator-() const;
    BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
    BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
    BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_perfect_square() const;
    // pre: is_perfect_square(); the exact nonnegative square root.
    BigRational sqrt_exact() const;

    BigRational abs() const;
    BigRational pow(unsigned long e) const;
    BigRational inverse() const;

    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }

    double to_double() const { return v_.get_d(); }
    // "p" when integral, otherwise "p/q".
    std::string str() const;

private:
    mpq_class v_; // kept canonical by gmp after every operation
};

inline BigRational operator+(long a, const BigRational& b) { return BigRational(a) + b; }
inline BigRational operator-(long a, const BigRational& b) { return BigRational(a) - b; }
inline BigRational operator*(long a, const BigRational& b) { return BigRational(a) * b; }

} // namespace a4link

#endif
