#pragma once

// Dense univariate polynomials with exact rational coefficients, stored in
// ascending order with no trailing zero. The zero polynomial has an empty
// coefficient vector and degree -1.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "momentkit/rational.hpp"

namespace momentkit {

class RatPolynomial {
public:
    RatPolynomial() = default;
    RatPolynomial(const Rational& c);               // NOLINT: constant polynomial
    explicit RatPolynomial(std::vector<Rational> coeffs);

    static RatPolynomial x();                       // the monomial x
    static RatPolynomial monomial(std::size_t k, const Rational& c = Rational(1));

    long degree() const { return (long)c_.size() - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    // Coefficient of x^k (zero beyond the stored degree).
    Rational coeff(std::size_t k) const;

    RatPolynomial operator-() const;
    friend RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b);
    friend RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b);
    friend RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b);
    RatPolynomial& operator+=(const RatPolynomial& o) { return *this = *this + o; }
    RatPolynomial& operator-=(const RatPolynomial& o) { return *this = *this - o; }
    RatPolynomial& operator*=(const RatPolynomial& o) { return *this = *this * o; }

    friend bool operator==(const RatPolynomial& a, const RatPolynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const RatPolynomial& a, const RatPolynomial& b) { return !(a == b); }

    Rational eval(const Rational& x) const;
    RatPolynomial derivative() const;
    // p(x + c) via binomial expansion.
    RatPolynomial shift_argument(const Rational& c) const;

    // Exact quotient *this / d, or nullopt when the division leaves a
    // remainder. Division by the zero polynomial throws DomainError.
    std::optional<RatPolynomial> divide_exact(const RatPolynomial& d) const;

    // Human-readable form such as "2x + 3x^2"; "0" for the zero polynomial.
    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const RatPolynomial& p);

} // namespace momentkit
