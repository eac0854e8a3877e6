#pragma once

// Arbitrary-precision rational scalar, kept canonical at all times:
// gcd(num, den) = 1 and den >= 1. Backed by GMP.

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "momentkit/errors.hpp"

namespace momentkit {

using BigInt = mpz_class;

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}           // NOLINT: implicit by design
    Rational(int n) : v_(n) {}            // NOLINT
    Rational(const BigInt& n) : v_(n) {}  // NOLINT
    Rational(const BigInt& num, const BigInt& den);
    Rational(long num, long den);

    // Parses "p", "-p", or "p/q"; normalizes. Throws DomainError on q = 0 or
    // malformed input.
    static Rational from_string(const std::string& s);

    const BigInt num() const { return v_.get_num(); }
    const BigInt den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const;
    Rational inv() const;
    // Integer exponent; negative exponents invert (throws DomainError on 0^-k).
    Rational pow(long e) const;

    // "p" when den = 1, otherwise "p/q".
    std::string to_string() const;

    // Nearest double; may overflow to +-inf for huge values.
    double to_double() const { return v_.get_d(); }
    // Natural log of |value| computed from mantissa+exponent, safe for values
    // far outside double range. Throws DomainError on zero.
    double log_abs() const;

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational factorial(unsigned long n);
BigInt factorial_int(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);

} // namespace momentkit
