#include "momentkit/rational.hpp"

#include <cmath>
#include <ostream>

namespace momentkit {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (sgn(den) == 0)
        throw DomainError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

Rational Rational::from_string(const std::string& s) {
    if (s.empty())
        throw DomainError("empty rational literal");
    std::string nums = s, dens = "1";
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        nums = s.substr(0, slash);
        dens = s.substr(slash + 1);
    }
    BigInt n, d;
    if (n.set_str(nums, 10) != 0 || d.set_str(dens, 10) != 0)
        throw DomainError("malformed rational literal: " + s);
    return Rational(n, d);
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw DomainError("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::abs() const {
    Rational r;
    r.v_ = ::abs(v_);
    return r;
}

Rational Rational::inv() const {
    if (is_zero())
        throw DomainError("inverse of zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
}

Rational Rational::pow(long e) const {
    if (e == 0)
        return Rational(1);
    Rational base = e < 0 ? inv() : *this;
    unsigned long k = e < 0 ? -(unsigned long)e : (unsigned long)e;
    Rational r;
    mpz_pow_ui(r.v_.get_num_mpz_t(), base.v_.get_num_mpz_t(), k);
    mpz_pow_ui(r.v_.get_den_mpz_t(), base.v_.get_den_mpz_t(), k);
    // powers of a canonical fraction stay canonical
    return r;
}

std::string Rational::to_string() const {
    return v_.get_str();
}

double Rational::log_abs() const {
    if (is_zero())
        throw DomainError("log of zero");
    long en, ed;
    double mn = mpz_get_d_2exp(&en, v_.get_num_mpz_t());
    double md = mpz_get_d_2exp(&ed, v_.get_den_mpz_t());
    return std::log(std::fabs(mn)) - std::log(std::fabs(md)) +
           std::log(2.0) * (double)(en - ed);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

Rational factorial(unsigned long n) {
    return Rational(factorial_int(n));
}

BigInt factorial_int(unsigned long n) {
    BigInt z;
    mpz_fac_ui(z.get_mpz_t(), n);
    return z;
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt z;
    mpz_bin_uiui(z.get_mpz_t(), n, k);
    return z;
}

} // namespace momentkit
