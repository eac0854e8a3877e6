#include <vector>

#include "doctest.h"
#include "momentkit/sequences.hpp"

using namespace momentkit;

namespace {
std::vector<Rational> rats(std::vector<long> v) {
    return std::vector<Rational>(v.begin(), v.end());
}
} // namespace

TEST_CASE("zigzag numbers, both routes") {
    auto e = euler_numbers(13);
    CHECK(e.terms == rats({1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521, 353792, 2702765}));
    auto e2 = euler_numbers_from_series(20);
    CHECK(euler_numbers(20).terms == e2.terms);
}

TEST_CASE("snake numbers") {
    auto s = springer_numbers(13);
    CHECK(s.terms == rats({1, 1, 3, 11, 57, 361, 2763, 24611, 250737, 2873041, 36581523,
                           512343611, 7828053417}));
}

TEST_CASE("apery and central binomial") {
    CHECK(apery_numbers(5).terms == rats({1, 5, 73, 1445, 33001}));
    CHECK(central_binomials(8).terms == rats({1, 2, 6, 20, 70, 252, 924, 3432}));
}

TEST_CASE("even and odd subsequences") {
    CHECK(secant_numbers(7).terms == rats({1, 1, 5, 61, 1385, 50521, 2702765}));
    CHECK(tangent_numbers(6).terms == rats({1, 2, 16, 272, 7936, 353792}));
    auto e = euler_numbers(13);
    auto sec = subsequence(e, 0, 2);
    CHECK(sec.terms == secant_numbers(7).terms);
    auto tan = subsequence(e, 1, 2);
    CHECK(tan.terms == tangent_numbers(6).terms);
    auto sh = subsequence(e, 1, 1);
    CHECK(sh.terms == rats({1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521, 353792, 2702765}));
}

TEST_CASE("factorial scalings") {
    auto et = resolve_sequence("euler-tilde", 6);
    CHECK(et.terms == std::vector<Rational>{Rational(1), Rational(1), Rational(1, 2),
                                            Rational(1, 3), Rational(5, 24), Rational(2, 15)});
    auto st = resolve_sequence("secant-tilde", 4);
    CHECK(st.terms == std::vector<Rational>{Rational(1), Rational(1, 2), Rational(5, 24),
                                            Rational(61, 720)});
    auto tt = resolve_sequence("tangent-tilde", 4);
    CHECK(tt.terms == std::vector<Rational>{Rational(1), Rational(1, 3), Rational(2, 15),
                                            Rational(17, 315)});
    auto en = resolve_sequence("euler-even-over-nfact", 4);
    CHECK(en.terms == std::vector<Rational>{Rational(1), Rational(1), Rational(5, 2),
                                            Rational(61, 6)});
    auto en2 = resolve_sequence("euler-even-over-nfact-sq", 4);
    CHECK(en2.terms == std::vector<Rational>{Rational(1), Rational(1), Rational(5, 4),
                                             Rational(61, 36)});
    auto sp = resolve_sequence("springer-tilde", 5);
    CHECK(sp.terms == std::vector<Rational>{Rational(1), Rational(1), Rational(3, 2),
                                            Rational(11, 6), Rational(19, 8)});
}

TEST_CASE("springer parity subsequences") {
    CHECK(resolve_sequence("springer-even", 5).terms == rats({1, 3, 57, 2763, 250737}));
    CHECK(resolve_sequence("springer-odd", 5).terms == rats({1, 11, 361, 24611, 2873041}));
}

TEST_CASE("signed variant follows the quarter-period pattern") {
    auto s = signed_variant(springer_numbers(8));
    CHECK(s.terms == rats({1, 1, -3, -11, 57, 361, -2763, -24611}));
    CHECK(resolve_sequence("springer-signed", 8).terms == s.terms);
    auto e = resolve_sequence("euler-shifted-signed", 6);
    CHECK(e.terms == rats({1, 1, -2, -5, 16, 61}));
}

TEST_CASE("binomial transform") {
    auto e = euler_numbers(10);
    CHECK(binomial_transform(e, Rational(0)).terms == e.terms);
    // shifting by c then by -c is the identity
    auto round = binomial_transform(binomial_transform(e, Rational(3, 2)), Rational(-3, 2));
    CHECK(round.terms == e.terms);
    // first few terms of the c = 1 transform, by hand
    auto b = binomial_transform(euler_numbers(4), Rational(1));
    CHECK(b.at(0) == Rational(1));
    CHECK(b.at(1) == Rational(2));     // 1 + 1
    CHECK(b.at(2) == Rational(4));     // 1 + 2 + 1
    CHECK(b.at(3) == Rational(9));     // 1 + 3 + 3 + 2
}

TEST_CASE("aeration interleaves zeros") {
    auto a = aerated(secant_numbers(4));
    CHECK(a.terms == rats({1, 0, 1, 0, 5, 0, 61}));
}

TEST_CASE("name resolution") {
    for (const auto& name : known_sequences()) {
        auto s = resolve_sequence(name, 9);
        CHECK(s.size() == 9);
        CHECK_FALSE(s.at(0).is_zero());
    }
    CHECK_THROWS_AS(resolve_sequence("no-such-sequence", 5), DomainError);
    CHECK(resolve_sequence("euler-shifted", 6).terms == rats({1, 1, 2, 5, 16, 61}));
    CHECK(resolve_sequence("euler-shifted-tilde", 5).terms ==
          std::vector<Rational>{Rational(1), Rational(1, 2), Rational(1, 3), Rational(5, 24),
                                Rational(2, 15)});
}

TEST_CASE("integer detection and term guards") {
    CHECK(integer_valued(euler_numbers(10)));
    CHECK_FALSE(integer_valued(resolve_sequence("euler-tilde", 10)));
    auto e = euler_numbers(3);
    CHECK_THROWS_AS(e.require_terms(5, "test"), InsufficientTerms);
    CHECK_NOTHROW(e.require_terms(3, "test"));
}
