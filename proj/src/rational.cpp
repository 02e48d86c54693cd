#include "a4link/rational.hpp"

#include "a4link/errors.hpp"

#include <cctype>

namespace a4link {

BigRational::BigRational(long num, long den) {
    if (den == 0) throw DomainError("BigRational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

BigRational::BigRational(const BigInt& num, const BigInt& den) {
    if (sgn(den) == 0) throw DomainError("BigRational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

std::optional<BigRational> BigRational::parse(std::string_view s) {
    if (s.empty()) return std::nullopt;
    // validate shape before handing to gmp: [-+]?digits(/digits)?
    size_t i = 0;
    auto digits = [&](size_t& pos) {
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        return pos > start;
    };
    if (s[i] == '+' || s[i] == '-') ++i;
    if (!digits(i)) return std::nullopt;
    if (i < s.size()) {
        if (s[i] != '/') return std::nullopt;
        ++i;
        if (!digits(i) || i != s.size()) return std::nullopt;
    }
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), std::string(s).c_str(), 10) != 0) return std::nullopt;
    if (sgn(mpq_class(q.get_den())) == 0) return std::nullopt;
    q.canonicalize();
    BigRational r;
    r.v_ = q;
    return r;
}

BigRational BigRational::operator-() const {
    BigRational r;
    r.v_ = -v_;
    return r;
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) throw DomainError("BigRational: division by zero");
    v_ /= o.v_;
    return *this;
}

bool BigRational::is_perfect_square() const {
    if (sign() < 0) return false;
    return mpz_perfect_square_p(v_.get_num().get_mpz_t()) != 0 &&
           mpz_perfect_square_p(v_.get_den().get_mpz_t()) != 0;
}

BigRational BigRational::sqrt_exact() const {
    if (!is_perfect_square()) throw DomainError("sqrt_exact: not a perfect square");
    BigInt n, d;
    mpz_sqrt(n.get_mpz_t(), v_.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), v_.get_den().get_mpz_t());
    return BigRational(n, d);
}

BigRational BigRational::abs() const {
    BigRational r;
    r.v_ = ::abs(v_);
    return r;
}

BigRational BigRational::pow(unsigned long e) const {
    BigRational r;
    mpz_pow_ui(r.v_.get_num().get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.v_.get_den().get_mpz_t(), v_.get_den().get_mpz_t(), e);
    return r; // powers of a canonical fraction stay canonical
}

BigRational BigRational::inverse() const {
    if (is_zero()) throw DomainError("BigRational: inverse of zero");
    return BigRational(den(), num());
}

std::string BigRational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

} // namespace a4link
