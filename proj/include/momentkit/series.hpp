#pragma once

// Truncated formal power series over an exact coefficient ring (Rational or
// RatPolynomial). A series carries a fixed truncation order N and exactly
// N+1 coefficients; binary operations truncate to the smaller order.
// There is no lazy extension: callers request a sufficient order up front.

#include <cstddef>
#include <optional>
#include <vector>

#include "momentkit/errors.hpp"
#include "momentkit/polynomial.hpp"
#include "momentkit/rational.hpp"

namespace momentkit {

template <class R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
    static bool is_zero(const Rational& a) { return a.is_zero(); }
    static Rational invert_unit(const Rational& a) {
        if (a.is_zero())
            throw NonUnitConstantTerm("series constant term is zero");
        return a.inv();
    }
    static std::optional<Rational> divide_exact(const Rational& a, const Rational& b) {
        if (b.is_zero())
            return std::nullopt;
        return a / b;
    }
};

template <>
struct RingTraits<RatPolynomial> {
    static bool is_zero(const RatPolynomial& a) { return a.is_zero(); }
    static RatPolynomial invert_unit(const RatPolynomial& a) {
        if (a.is_zero())
            throw NonUnitConstantTerm("series constant term is zero");
        if (a.degree() != 0)
            throw NonUnitConstantTerm("series constant term is not a unit polynomial");
        return RatPolynomial(a.coeff(0).inv());
    }
    static std::optional<RatPolynomial> divide_exact(const RatPolynomial& a,
                                                     const RatPolynomial& b) {
        if (b.is_zero())
            return std::nullopt;
        return a.divide_exact(b);
    }
};

template <class R>
class Series {
public:
    explicit Series(std::size_t order) : c_(order + 1) {}
    explicit Series(std::vector<R> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty())
            throw DomainError("series needs at least a constant coefficient");
    }

    std::size_t order() const { return c_.size() - 1; }
    const std::vector<R>& coeffs() const { return c_; }
    const R& coeff(std::size_t k) const { return c_.at(k); }
    void set_coeff(std::size_t k, const R& v) { c_.at(k) = v; }

    bool is_zero() const {
        for (const auto& c : c_)
            if (!RingTraits<R>::is_zero(c))
                return false;
        return true;
    }

    friend Series operator+(const Series& a, const Series& b) {
        Series r(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i <= r.order(); ++i)
            r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }

    friend Series operator-(const Series& a, const Series& b) {
        Series r(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i <= r.order(); ++i)
            r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }

    friend Series operator*(const Series& a, const Series& b) {
        Series r(std::min(a.order(), b.order()));
        for (std::size_t n = 0; n <= r.order(); ++n) {
            R acc{};
            for (std::size_t i = 0; i <= n; ++i)
                acc += a.c_[i] * b.c_[n - i];
            r.c_[n] = acc;
        }
        return r;
    }

    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    Series scaled(const R& f) const {
        Series r = *this;
        for (auto& c : r.c_)
            c = c * f;
        return r;
    }

    // Multiplication by t at fixed order (the old top coefficient falls off).
    Series shifted_up() const {
        Series r(order());
        for (std::size_t i = order(); i >= 1; --i)
            r.c_[i] = c_[i - 1];
        r.c_[0] = R{};
        return r;
    }

    // Division by t; requires a vanishing constant term and shrinks the order
    // by one.
    Series shifted_down() const {
        if (!RingTraits<R>::is_zero(c_[0]))
            throw DomainError("series division by t needs zero constant term");
        if (order() == 0)
            throw DomainError("series division by t needs positive order");
        Series r(order() - 1);
        for (std::size_t i = 0; i + 1 <= order(); ++i)
            r.c_[i] = c_[i + 1];
        return r;
    }

    // Multiplicative inverse; the constant term must be a unit of the ring.
    Series reciprocal() const {
        R inv0 = RingTraits<R>::invert_unit(c_[0]);
        Series r(order());
        r.c_[0] = inv0;
        for (std::size_t n = 1; n <= order(); ++n) {
            R acc{};
            for (std::size_t i = 1; i <= n; ++i)
                acc += c_[i] * r.c_[n - i];
            r.c_[n] = -(acc * inv0);
        }
        return r;
    }

    // Substitution t -> f*t, i.e. coefficient n picks up f^n.
    Series substituted(const R& f) const {
        Series r = *this;
        R p = f;
        for (std::size_t n = 1; n <= order(); ++n) {
            r.c_[n] = r.c_[n] * p;
            p = p * f;
        }
        return r;
    }

private:
    std::vector<R> c_;
};

using RatSeries = Series<Rational>;
using PolySeries = Series<RatPolynomial>;

// Exact trigonometric prefixes used by the exponential generating function
// machinery: cos t and sin t through the given order.
inline RatSeries cos_series(std::size_t order) {
    RatSeries s(order);
    for (std::size_t n = 0; n <= order; n += 2)
        s.set_coeff(n, Rational((n / 2) % 2 ? -1 : 1) / factorial(n));
    return s;
}

inline RatSeries sin_series(std::size_t order) {
    RatSeries s(order);
    for (std::size_t n = 1; n <= order; n += 2)
        s.set_coeff(n, Rational(((n - 1) / 2) % 2 ? -1 : 1) / factorial(n));
    return s;
}

inline RatSeries one_series(std::size_t order) {
    RatSeries s(order);
    s.set_coeff(0, Rational(1));
    return s;
}

} // namespace momentkit
