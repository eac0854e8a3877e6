#include "doctest.h"
#include "momentkit/sequences.hpp"
#include "momentkit/series.hpp"

using namespace momentkit;

TEST_CASE("basic coefficient access") {
    RatSeries s(3);
    CHECK(s.order() == 3);
    CHECK(s.is_zero());
    s.set_coeff(2, Rational(5));
    CHECK(s.coeff(2) == Rational(5));
    CHECK_FALSE(s.is_zero());
    CHECK_THROWS(s.coeff(4));
    CHECK_THROWS_AS(RatSeries(std::vector<Rational>{}), DomainError);
}

TEST_CASE("arithmetic truncates to the smaller order") {
    RatSeries a(std::vector<Rational>{1, 2, 3, 4});
    RatSeries b(std::vector<Rational>{1, 1});
    RatSeries sum = a + b;
    CHECK(sum.order() == 1);
    CHECK(sum.coeff(0) == Rational(2));
    CHECK(sum.coeff(1) == Rational(3));
    RatSeries prod = a * a;
    CHECK(prod.coeffs() == std::vector<Rational>{1, 4, 10, 20});
}

TEST_CASE("reciprocal") {
    // 1/(1 - t) = 1 + t + t^2 + ...
    RatSeries g(std::vector<Rational>{1, -1, 0, 0, 0});
    RatSeries r = g.reciprocal();
    for (std::size_t k = 0; k <= 4; ++k) CHECK(r.coeff(k) == Rational(1));
    // g * (1/g) == 1
    CHECK(g * r == one_series(4));

    RatSeries c = cos_series(12);
    CHECK(c * c.reciprocal() == one_series(12));

    RatSeries zero_const(std::vector<Rational>{0, 1});
    CHECK_THROWS_AS(zero_const.reciprocal(), NonUnitConstantTerm);
}

TEST_CASE("shifts") {
    RatSeries a(std::vector<Rational>{0, 7, 9});
    RatSeries down = a.shifted_down();
    CHECK(down.order() == 1);
    CHECK(down.coeff(0) == Rational(7));
    CHECK(down.coeff(1) == Rational(9));
    RatSeries up = down.shifted_up();
    CHECK(up.coeff(0) == Rational(0));
    CHECK(up.coeff(1) == Rational(7));
    RatSeries bad(std::vector<Rational>{1, 2});
    CHECK_THROWS_AS(bad.shifted_down(), DomainError);
}

TEST_CASE("substitution scales coefficient n by f^n") {
    RatSeries g(std::vector<Rational>{1, -1, 0, 0, 0, 0});
    RatSeries r = g.reciprocal().substituted(Rational(2));
    // 1/(1 - 2t)
    Rational p(1);
    for (std::size_t k = 0; k <= 5; ++k) {
        CHECK(r.coeff(k) == p);
        p = p * Rational(2);
    }
}

TEST_CASE("zigzag exponential generating function") {
    // (1 + sin t)/cos t carries the zigzag numbers divided by n!
    const std::size_t ord = 16;
    RatSeries f = (one_series(ord) + sin_series(ord)) * cos_series(ord).reciprocal();
    auto e = euler_numbers(ord + 1);
    for (std::size_t n = 0; n <= ord; ++n)
        CHECK(f.coeff(n) == e.at(n) / factorial(n));
}

TEST_CASE("snake exponential generating function") {
    // 1/(cos t - sin t) carries the snake numbers divided by n!
    const std::size_t ord = 14;
    RatSeries f = (cos_series(ord) - sin_series(ord)).reciprocal();
    auto s = springer_numbers(ord + 1);
    for (std::size_t n = 0; n <= ord; ++n)
        CHECK(f.coeff(n) == s.at(n) / factorial(n));
}

TEST_CASE("polynomial coefficient ring") {
    using PS = Series<RatPolynomial>;
    RatPolynomial x = RatPolynomial::x();
    PS a(std::vector<RatPolynomial>{RatPolynomial(Rational(1)), x, RatPolynomial()});
    PS b(std::vector<RatPolynomial>{RatPolynomial(Rational(1)), -x, RatPolynomial()});
    PS prod = a * b;
    CHECK(prod.coeff(0) == RatPolynomial(Rational(1)));
    CHECK(prod.coeff(1).is_zero());
    CHECK(prod.coeff(2) == -(x * x));
    // reciprocal works when the constant term is a nonzero constant
    PS r = a.reciprocal();
    CHECK(a * r == PS(std::vector<RatPolynomial>{RatPolynomial(Rational(1)),
                                                 RatPolynomial(), RatPolynomial()}));
    // a polynomial of positive degree is not a unit
    PS bad(std::vector<RatPolynomial>{x, x});
    CHECK_THROWS_AS(bad.reciprocal(), NonUnitConstantTerm);
}
