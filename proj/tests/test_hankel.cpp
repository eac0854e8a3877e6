#include <random>
#include <vector>

#include "doctest.h"
#include "momentkit/hankel.hpp"
#include "momentkit/sequences.hpp"

using namespace momentkit;

namespace {

// independent slow determinant for cross-checking
Rational cofactor(const std::vector<std::vector<Rational>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return Rational(1);
    if (n == 1) return m[0][0];
    Rational acc(0);
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<Rational>> sub(n - 1, std::vector<Rational>(n - 1));
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, jj = 0; j < n; ++j)
                if (j != c) sub[i - 1][jj++] = m[i][j];
        Rational t = m[0][c] * cofactor(sub);
        acc += (c % 2 ? -t : t);
    }
    return acc;
}

std::vector<std::vector<Rational>> random_matrix(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (auto& row : m)
        for (auto& e : row) e = Rational(num(rng), den(rng));
    return m;
}

std::vector<std::vector<Rational>> matmul(const std::vector<std::vector<Rational>>& a,
                                          const std::vector<std::vector<Rational>>& b) {
    const std::size_t n = a.size();
    std::vector<std::vector<Rational>> c(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational acc(0);
            for (std::size_t k = 0; k < n; ++k) acc += a[i][k] * b[k][j];
            c[i][j] = acc;
        }
    return c;
}

} // namespace

TEST_CASE("matrix construction") {
    auto e = euler_numbers(8);
    auto h = HankelMatrix::build(e, 2, 3);
    CHECK(h.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(h.entries[i][j] == e.at(i + j + 2));
    CHECK_THROWS_AS(HankelMatrix::build(euler_numbers(3), 0, 3), InsufficientTerms);
    CHECK_THROWS_AS(HankelMatrix::build(e, 0, 0), DomainError);
}

TEST_CASE("determinant fixtures") {
    CHECK(hankel_det(HankelMatrix::build(euler_numbers(5), 0, 3)) == Rational(-1));
    CHECK(hankel_det(HankelMatrix::build(springer_numbers(6), 1, 3)) == Rational(-96));
    auto s = resolve_sequence("euler-even-over-nfact-sq", 13);
    Rational d7 = hankel_det(HankelMatrix::build(s, 0, 7));
    CHECK(d7.sign() < 0);
    CHECK(d7 == Rational::from_string(
                    "-2144851443966590500343416270441316830931665497881/"
                    "19925051965770407930688519175057757829357738393600"
                    "00000000000000"));
}

TEST_CASE("fraction-free elimination matches cofactor expansion") {
    std::mt19937 rng(7u);
    for (std::size_t n = 1; n <= 5; ++n) {
        for (int rep = 0; rep < 6; ++rep) {
            auto m = random_matrix(rng, n);
            CHECK(det_exact(m) == cofactor(m));
        }
    }
    // multiplicativity
    for (int rep = 0; rep < 4; ++rep) {
        auto a = random_matrix(rng, 4);
        auto b = random_matrix(rng, 4);
        CHECK(det_exact(matmul(a, b)) == det_exact(a) * det_exact(b));
    }
    // transpose invariance
    auto m = random_matrix(rng, 5);
    auto t = m;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) t[i][j] = m[j][i];
    CHECK(det_exact(m) == det_exact(t));
    // a singular matrix
    auto sing = random_matrix(rng, 4);
    sing[3] = sing[0];
    CHECK(det_exact(sing) == Rational(0));
}

TEST_CASE("determinant product identity through the level coefficients") {
    // for the even zigzag numbers the level coefficients contract to
    // b_n = (2n-1)^2 (2n)^2, and Delta_n = prod b_i^{n-i}
    auto sec = secant_numbers(11);
    for (std::size_t n = 1; n <= 6; ++n) {
        Rational expect(1);
        for (std::size_t i = 1; i < n; ++i) {
            Rational b = Rational((2 * (long)i - 1) * (2 * (long)i - 1)) *
                         Rational(4 * (long)i * (long)i);
            expect = expect * b.pow((long)(n - i));
        }
        CHECK(hankel_det(HankelMatrix::build(sec, 0, n)) == expect);
    }
}

TEST_CASE("leading principal minors") {
    // strictly positive cases at both shifts
    for (const char* name : {"secant", "tangent", "springer-even", "springer-odd", "apery",
                             "central-binomial", "euler-even-over-nfact", "tangent-tilde"}) {
        for (std::size_t m : {0u, 1u}) {
            auto rep = psd_leading_minors(resolve_sequence(name, 12), m, 5);
            INFO(name << " shift " << m);
            CHECK(rep.status == MinorStatus::AllPositive);
            CHECK(rep.leading_minors.size() == 5);
        }
    }
    // positive at shift 0 only
    for (const char* name : {"euler-shifted", "springer", "euler-shifted-tilde"}) {
        auto rep = psd_leading_minors(resolve_sequence(name, 12), 0, 5);
        INFO(name);
        CHECK(rep.status == MinorStatus::AllPositive);
    }
    auto sp1 = psd_leading_minors(springer_numbers(12), 1, 5);
    CHECK(sp1.status == MinorStatus::Violation);
    REQUIRE(sp1.witness.has_value());
    CHECK(sp1.witness->rows.size() == 3);

    // full zigzag sequence: 1, 0, then a negative third minor
    auto ez = psd_leading_minors(euler_numbers(12), 0, 5);
    CHECK(ez.status == MinorStatus::Violation);
    CHECK(ez.leading_minors[0] == Rational(1));
    CHECK(ez.leading_minors[1] == Rational(0));
    CHECK(ez.leading_minors[2] == Rational(-1));
    REQUIRE(ez.witness.has_value());
    CHECK(ez.witness->rows == std::vector<std::size_t>{0, 1, 2});
    CHECK(ez.witness->det == Rational(-1));
    CHECK(ez.zero_minors == 1);

    // factorial-scaled variants break much earlier
    CHECK(psd_leading_minors(resolve_sequence("euler-tilde", 12), 0, 5).status ==
          MinorStatus::Violation);
    for (std::size_t m : {0u, 1u})
        CHECK(psd_leading_minors(resolve_sequence("secant-tilde", 12), m, 5).status ==
              MinorStatus::Violation);

    // rank-one sequence: nonnegative with zeros from order 2 on
    SequenceHandle ones{"ones", "test", std::vector<Rational>(9, Rational(1))};
    auto rep1 = psd_leading_minors(ones, 0, 4);
    CHECK(rep1.status == MinorStatus::AllNonnegative);
    CHECK(rep1.leading_minors[0] == Rational(1));
    for (std::size_t k = 1; k < 4; ++k) CHECK(rep1.leading_minors[k] == Rational(0));
    CHECK(rep1.zero_minors == 3);
}

TEST_CASE("order-7 failure of the double-factorial scaling") {
    auto rep = psd_leading_minors(resolve_sequence("euler-even-over-nfact-sq", 13), 0, 7);
    CHECK(rep.status == MinorStatus::Violation);
    for (std::size_t k = 0; k < 6; ++k) CHECK(rep.leading_minors[k].sign() > 0);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->rows.size() == 7);
    CHECK(rep.witness->det.sign() < 0);
}

TEST_CASE("arithmetic-progression subsequences of the factorial scaling all fail") {
    auto et = resolve_sequence("euler-tilde", 30);
    for (std::size_t n0 : {0u, 2u, 4u}) {
        for (std::size_t j : {1u, 2u, 3u}) {
            auto sub = subsequence(et, n0, j);
            auto rep = psd_leading_minors(sub, 0, 4);
            INFO("start " << n0 << " step " << j);
            CHECK(rep.status == MinorStatus::Violation);
            REQUIRE(rep.witness.has_value());
            CHECK(rep.witness->rows.size() == 2);
        }
    }
}

TEST_CASE("windowed total positivity") {
    auto clean = total_positivity(secant_numbers(11), 6, 3);
    CHECK(clean.status != MinorStatus::Violation);
    CHECK(clean.minors_checked > 0);

    // the shifted zigzag sequence is positive definite but not totally
    // positive: every minor of order <= 3 in the 5-window is fine, and the
    // first bad minor has order 4
    auto sh = resolve_sequence("euler-shifted", 9);
    CHECK(total_positivity(sh, 5, 3).status != MinorStatus::Violation);
    auto bad = total_positivity(sh, 5, 4);
    CHECK(bad.status == MinorStatus::Violation);
    REQUIRE(bad.witness.has_value());
    CHECK(bad.witness->rows == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(bad.witness->cols == std::vector<std::size_t>{1, 2, 3, 4});
    CHECK(bad.witness->det == Rational(-324));

    // n! is a classic totally positive sequence on small windows
    std::vector<Rational> fact;
    for (unsigned long n = 0; n < 8; ++n) fact.push_back(factorial(n));
    SequenceHandle f{"factorials", "test", fact};
    CHECK(total_positivity(f, 4, 2).status != MinorStatus::Violation);
}

TEST_CASE("triangular Toeplitz minors") {
    auto st = resolve_sequence("secant-tilde", 8);
    auto rep = toeplitz_pf_check(st, 6, 3);
    CHECK(rep.status != MinorStatus::Violation);
    CHECK(rep.minors_checked > 0);

    // the identity-like sequence is trivially fine
    SequenceHandle id{"delta", "test", {Rational(1), Rational(0), Rational(0), Rational(0)}};
    CHECK(toeplitz_pf_check(id, 4, 2).status != MinorStatus::Violation);

    // 1, 0, 1 has the negative above-diagonal minor rows {0,1} x cols {1,2}
    SequenceHandle gap{"gap", "test", {Rational(1), Rational(0), Rational(1), Rational(0)}};
    auto bad = toeplitz_pf_check(gap, 4, 2);
    CHECK(bad.status == MinorStatus::Violation);
}

TEST_CASE("log shape signs") {
    auto e = log_shape(euler_numbers(12));
    REQUIRE(e.size() == 10);
    CHECK(e[0] == 0);
    for (std::size_t k = 1; k < e.size(); ++k) CHECK(e[k] == 1);
    for (int s : log_shape(springer_numbers(12))) CHECK(s == 1);
    for (int s : log_shape(resolve_sequence("secant-tilde", 12))) CHECK(s == -1);
    CHECK_THROWS_AS(log_shape(euler_numbers(2)), InsufficientTerms);
}
