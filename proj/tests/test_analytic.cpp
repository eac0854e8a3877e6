#include <cmath>

#include "doctest.h"
#include "momentkit/analytic.hpp"
#include "momentkit/contfrac.hpp"
#include "momentkit/sequences.hpp"

using namespace momentkit;

namespace {
constexpr double kPi = 3.14159265358979323846;

double rel(double a, double b) {
    return std::fabs(a - b) / std::max(1.0, std::fabs(b));
}
} // namespace

TEST_CASE("double-exponential quadrature") {
    // smooth
    auto r1 = tanh_sinh([](double x, double, double) { return std::sin(x); }, 0, kPi, 1e-12);
    CHECK(std::fabs(r1.value - 2.0) < 1e-11);
    // endpoint singularity handled through the distance arguments
    auto r2 = tanh_sinh([](double, double da, double) { return 1.0 / std::sqrt(da); }, 0, 1,
                        1e-12);
    CHECK(std::fabs(r2.value - 2.0) < 1e-10);
    auto r3 = tanh_sinh([](double x, double, double) { return std::exp(-x); }, 0, 30, 1e-12);
    CHECK(std::fabs(r3.value - 1.0) < 1e-11);
}

TEST_CASE("gamma modulus squared") {
    // |Gamma((1+is)/2)|^2 = pi / cosh(pi s / 2)
    for (double s : {0.3, 1.7, 4.2}) {
        double want = kPi / std::cosh(kPi * s / 2);
        CHECK(rel(complex_gamma_abs2(1.0, s), want) < 1e-10);
    }
    // |Gamma(1 + is/2)|^2 = (pi s / 2) / sinh(pi s / 2)
    for (double s : {0.5, 2.0, 3.7}) {
        double u = kPi * s / 2;
        CHECK(rel(complex_gamma_abs2(2.0, s), u / std::sinh(u)) < 1e-10);
    }
    // functional equation |Gamma(z+1)|^2 = |z|^2 |Gamma(z)|^2 with z = (x+is)/2
    double x = 1.3, s = 2.1;
    double lhs = complex_gamma_abs2(x + 2, s);
    double rhs = (x * x / 4 + s * s / 4) * complex_gamma_abs2(x, s);
    CHECK(rel(lhs, rhs) < 1e-9);
}

TEST_CASE("series transcendent at z = 1 and z = -1") {
    CHECK(rel(lerch_phi(1, 2, 1), kPi * kPi / 6) < 1e-12);
    CHECK(rel(lerch_phi(1, 4, 1), std::pow(kPi, 4) / 90) < 1e-12);
    // sum over half-integers: (2^s - 1) zeta(s) at s = 2
    CHECK(rel(lerch_phi(1, 2, 0.5), 3 * kPi * kPi / 6) < 1e-12);
    // alternating: eta(2) = pi^2/12
    CHECK(rel(lerch_phi(-1, 2, 1), kPi * kPi / 12) < 1e-12);
    CHECK_THROWS_AS(lerch_phi(1, 1.0, 1), DomainError);
    CHECK_THROWS_AS(lerch_phi(1, 0.5, 1), DomainError);
}

TEST_CASE("closed-form identity checks") {
    for (std::size_t n = 0; n <= 3; ++n) {
        CHECK(lerch_even(n, 1e-9).pass);
        CHECK(lerch_odd(n, 1e-9).pass);
        CHECK(springer_lerch(n, 1e-9).pass);
    }
    for (std::size_t n = 1; n <= 3; ++n) CHECK(zeta_quarters(n, 1e-9).pass);
}

TEST_CASE("moment integrals of registered densities") {
    const DensitySpec* sech = find_density("secant-sech");
    REQUIRE(sech);
    CHECK(moment_integral(*sech, 0, 1e-10).pass);
    CHECK(moment_integral(*sech, 3, 1e-10).pass);
    const DensitySpec* ham = find_density("springer-hamburger");
    REQUIRE(ham);
    CHECK(moment_integral(*ham, 2, 1e-10).pass);
    const DensitySpec* theta = find_density("euler-theta");
    REQUIRE(theta);
    CHECK(moment_integral(*theta, 1, 1e-10).pass);
    // the alias resolves to the same spec
    CHECK(find_density("E2n-sech") == sech);
    CHECK(find_density("nothing") == nullptr);
}

TEST_CASE("gamma-density moments of the power polynomials") {
    auto polys = secant_power_polys(4);
    for (long x : {1, 2, 3}) {
        for (std::size_t n = 0; n <= 2; ++n) {
            auto r = secpow_gamma_moment(n, Rational(x), 1e-10);
            INFO("x = " << x << " n = " << n);
            CHECK(r.pass);
            CHECK(rel(r.computed, polys.at(n).eval(Rational(x)).to_double()) < 1e-9);
        }
    }
    // x = 2 turns the density into the one for the odd zigzag numbers
    auto e = euler_numbers(8);
    CHECK(secant_power_polys(3).at(2).eval(Rational(2)) == e.at(5));
    // x = 1 recovers the even zigzag numbers
    CHECK(secant_power_polys(3).at(2).eval(Rational(1)) == e.at(4));
}

TEST_CASE("pole sums stay within their tail bounds") {
    for (std::size_t n = 1; n <= 20; ++n) {
        auto eu = partial_frac_euler(n, 100000);
        INFO("zigzag n = " << n);
        CHECK(eu.within);
        auto sp = partial_frac_springer(n, 100000);
        INFO("snake n = " << n);
        CHECK(sp.within);
    }
    // the n = 0 case converges as a symmetric limit
    CHECK(partial_frac_euler(0, 100000).within);
    // the alternating snake sum brackets its limit at consecutive cutoffs
    auto a = partial_frac_springer(2, 1000);
    auto b = partial_frac_springer(2, 1001);
    CHECK((a.partial - a.exact) * (b.partial - b.exact) < 0);
}

TEST_CASE("growth formulas converge at the documented rate") {
    for (const char* fam : {"euler", "springer"}) {
        auto recs = asymptotic_check(fam, 8, 14);
        REQUIRE(recs.size() == 7);
        for (std::size_t i = 1; i < recs.size(); ++i) {
            double ratio = recs[i].rel_err / recs[i - 1].rel_err;
            INFO(fam << " n = " << recs[i].n);
            CHECK(ratio > 0.25);
            CHECK(ratio < 0.42);
        }
        for (const auto& r : recs)
            if (r.n == 10) CHECK(r.rel_err < 1e-3);
    }
}

TEST_CASE("divergence diagnostic") {
    auto s = springer_numbers(51);
    auto rep = carleman_diagnostic(s, 4 / kPi);
    REQUIRE(rep.partial_sums.size() == 50);
    for (std::size_t i = 1; i < rep.partial_sums.size(); ++i)
        CHECK(rep.partial_sums[i] > rep.partial_sums[i - 1]);
    CHECK(std::fabs(rep.partial_sums.back() - 16.647062) < 1e-4);
    CHECK(std::fabs(rep.fit_b - 1.2736) < 5e-3);
    CHECK(std::fabs(rep.fit_b - rep.reference_b) < 0.01);

    auto e = euler_numbers(51);
    auto repe = carleman_diagnostic(e, 2 / kPi);
    CHECK(std::fabs(repe.fit_b - 2 / kPi) < 5e-3);

    CHECK_THROWS_AS(carleman_diagnostic(signed_variant(springer_numbers(10)), 0),
                    NonPositiveTerm);
    CHECK_THROWS_AS(carleman_diagnostic(springer_numbers(2), 0), InsufficientTerms);
}
