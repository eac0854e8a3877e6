#include <cmath>
#include <sstream>

#include "doctest.h"
#include "momentkit/rational.hpp"

using namespace momentkit;

TEST_CASE("construction normalizes") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(BigInt(10), BigInt(15)) == Rational(2, 3));
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("from_string") {
    CHECK(Rational::from_string("3/6") == Rational(1, 2));
    CHECK(Rational::from_string("-7") == Rational(-7));
    CHECK(Rational::from_string("-96/1") == Rational(-96));
    CHECK(Rational::from_string("0") == Rational(0));
    CHECK_THROWS_AS(Rational::from_string("1/0"), DomainError);
    CHECK_THROWS_AS(Rational::from_string("abc"), DomainError);
    CHECK_THROWS_AS(Rational::from_string(""), DomainError);
}

TEST_CASE("arithmetic") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    CHECK(-Rational(5, 7) == Rational(-5, 7));
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
    CHECK_THROWS_AS(Rational(0).inv(), DomainError);
}

TEST_CASE("pow") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(5).pow(0) == Rational(1));
    CHECK(Rational(-2).pow(3) == Rational(-8));
    CHECK_THROWS_AS(Rational(0).pow(-1), DomainError);
}

TEST_CASE("queries and ordering") {
    CHECK(Rational(0).is_zero());
    CHECK(Rational(3).is_integer());
    CHECK_FALSE(Rational(1, 2).is_integer());
    CHECK(Rational(-5, 3).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2).abs() == Rational(1, 2));
    CHECK(Rational(7, 3).num() == 7);
    CHECK(Rational(7, 3).den() == 3);
}

TEST_CASE("string forms") {
    CHECK(Rational(1, 2).to_string() == "1/2");
    CHECK(Rational(-96).to_string() == "-96");
    CHECK(Rational::from_string(Rational(-355, 113).to_string()) == Rational(-355, 113));
    std::ostringstream os;
    os << Rational(22, 7);
    CHECK(os.str() == "22/7");
}

TEST_CASE("doubles and huge-value logs") {
    CHECK(Rational(1, 2).to_double() == 0.5);
    Rational big(factorial_int(50));
    CHECK(std::abs(big.log_abs() - std::lgamma(51.0)) < 1e-9);
    // a value far outside double range still gets a finite log
    Rational huge = Rational(factorial_int(300));
    CHECK(std::isfinite(huge.log_abs()));
    CHECK(std::abs(huge.log_abs() - std::lgamma(301.0)) < 1e-6 * std::lgamma(301.0));
    CHECK_THROWS_AS(Rational(0).log_abs(), DomainError);
}

TEST_CASE("factorials and binomials") {
    CHECK(factorial(0) == Rational(1));
    CHECK(factorial(5) == Rational(120));
    CHECK(factorial_int(10) == BigInt(3628800));
    CHECK(binomial(10, 3) == BigInt(120));
    CHECK(binomial(10, 0) == BigInt(1));
    CHECK(binomial(3, 5) == BigInt(0));
    CHECK(binomial(52, 26) == binomial(52, 26));
    // Pascal identity on a random-ish spot
    CHECK(binomial(40, 17) == binomial(39, 16) + binomial(39, 17));
}
