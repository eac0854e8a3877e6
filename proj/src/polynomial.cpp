#include "momentkit/polynomial.hpp"

#include <ostream>
#include <utility>

namespace momentkit {

RatPolynomial::RatPolynomial(const Rational& c) {
    if (!c.is_zero())
        c_.push_back(c);
}

RatPolynomial::RatPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    trim();
}

RatPolynomial RatPolynomial::x() {
    return monomial(1);
}

RatPolynomial RatPolynomial::monomial(std::size_t k, const Rational& c) {
    RatPolynomial p;
    if (!c.is_zero()) {
        p.c_.assign(k + 1, Rational(0));
        p.c_[k] = c;
    }
    return p;
}

Rational RatPolynomial::coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : Rational(0);
}

void RatPolynomial::trim() {
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

RatPolynomial RatPolynomial::operator-() const {
    RatPolynomial r = *this;
    for (auto& c : r.c_)
        c = -c;
    return r;
}

RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b) {
    RatPolynomial r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = a.coeff(i) + b.coeff(i);
    r.trim();
    return r;
}

RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b) {
    return a + (-b);
}

RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b) {
    RatPolynomial r;
    if (a.is_zero() || b.is_zero())
        return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
}

Rational RatPolynomial::eval(const Rational& x) const {
    Rational r(0);
    for (std::size_t i = c_.size(); i-- > 0;)
        r = r * x + c_[i];
    return r;
}

RatPolynomial RatPolynomial::derivative() const {
    RatPolynomial r;
    for (std::size_t i = 1; i < c_.size(); ++i)
        r.c_.push_back(Rational((long)i) * c_[i]);
    r.trim();
    return r;
}

RatPolynomial RatPolynomial::shift_argument(const Rational& c) const {
    // p(x+c) = sum_i c_i (x+c)^i, accumulated by Horner on (x+c)
    RatPolynomial xc = RatPolynomial::x() + RatPolynomial(c);
    RatPolynomial r;
    for (std::size_t i = c_.size(); i-- > 0;)
        r = r * xc + RatPolynomial(c_[i]);
    return r;
}

std::optional<RatPolynomial> RatPolynomial::divide_exact(const RatPolynomial& d) const {
    if (d.is_zero())
        throw DomainError("polynomial division by zero");
    if (is_zero())
        return RatPolynomial();
    if (c_.size() < d.c_.size())
        return std::nullopt;
    std::vector<Rational> rem = c_;
    std::vector<Rational> quo(c_.size() - d.c_.size() + 1, Rational(0));
    const Rational& lead = d.c_.back();
    for (std::size_t k = quo.size(); k-- > 0;) {
        Rational q = rem[k + d.c_.size() - 1] / lead;
        quo[k] = q;
        if (!q.is_zero())
            for (std::size_t i = 0; i < d.c_.size(); ++i)
                rem[k + i] -= q * d.c_[i];
    }
    for (const auto& c : rem)
        if (!c.is_zero())
            return std::nullopt;
    return RatPolynomial(std::move(quo));
}

std::string RatPolynomial::to_string() const {
    if (is_zero())
        return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero())
            continue;
        Rational a = c_[i];
        if (!s.empty()) {
            s += a.sign() < 0 ? " - " : " + ";
            a = a.abs();
        }
        bool unit = (a == Rational(1)) && i > 0;
        if (!unit)
            s += a.to_string();
        if (i >= 1)
            s += unit ? "x" : "*x";
        if (i >= 2)
            s += "^" + std::to_string(i);
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const RatPolynomial& p) {
    return os << p.to_string();
}

} // namespace momentkit
