#include <string>
#include <vector>

#include "doctest.h"
#include "momentkit/scan.hpp"
#include "momentkit/sequences.hpp"

using namespace momentkit;

TEST_CASE("inequality values at small arguments") {
    CHECK(logconvexity_value(1, 1, 1) == Rational(1, 12));
    CHECK(logconvexity_value(2, 1, 1) == Rational(1, 144));
    // symmetric in the last two arguments
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::size_t j = 1; j <= 4; ++j)
            for (std::size_t k = j; k <= 4; ++k)
                CHECK(logconvexity_value(n, j, k) == logconvexity_value(n, k, j));
}

TEST_CASE("small scans are clean and count correctly") {
    auto rep = scan_logconvexity(10, 10, 10, 1);
    CHECK(rep.violations == 0);
    CHECK_FALSE(rep.first_violation.has_value());
    // j <= k gives 55 pairs per n
    CHECK(rep.checked == 550);
    CHECK(rep.n_max == 10);

    // asymmetric bounds
    auto rep2 = scan_logconvexity(3, 2, 5, 1);
    CHECK(rep2.violations == 0);
    // pairs with j <= min(k, 2), k <= 5: k=1:1, k=2:2, k>=3:2 each -> 9 per n
    CHECK(rep2.checked == 27);
}

TEST_CASE("thread split changes nothing") {
    auto a = scan_logconvexity(12, 6, 6, 1);
    auto b = scan_logconvexity(12, 6, 6, 3);
    CHECK(a.checked == b.checked);
    CHECK(a.violations == b.violations);
}

TEST_CASE("every value in a small box is strictly positive") {
    for (std::size_t n = 1; n <= 6; ++n)
        for (std::size_t j = 1; j <= 6; ++j)
            for (std::size_t k = j; k <= 6; ++k) {
                INFO("n=" << n << " j=" << j << " k=" << k);
                CHECK(logconvexity_value(n, j, k).sign() > 0);
            }
}

TEST_CASE("determinant sign survey of the zigzag numbers") {
    const std::vector<std::string> expected = {
        "+0---0+++0",   // shift 0
        "++++++++++",   // shift 1
        "++0---0+++",   // shift 2
        "++++++++++",   // shift 3
        "+++----+++",   // shift 4
        "++++++++++",   // shift 5
        "++++----++",   // shift 6
        "++++++++++",   // shift 7
        "+++++----+",   // shift 8
    };
    auto e = euler_numbers(8 + 2 * 10 - 1);
    std::vector<std::size_t> shifts;
    for (std::size_t m = 0; m <= 8; ++m) shifts.push_back(m);
    auto rows = hankel_sign_survey(e, shifts, 10);
    REQUIRE(rows.size() == 9);
    for (std::size_t m = 0; m <= 8; ++m) {
        REQUIRE(rows[m].signs.size() == 10);
        std::string got;
        for (int s : rows[m].signs) got += s > 0 ? '+' : (s < 0 ? '-' : '0');
        INFO("shift " << m);
        CHECK(got == expected[m]);
    }
}

TEST_CASE("odd shifts stay positive, even shifts always fail somewhere") {
    auto e = euler_numbers(8 + 2 * 10 - 1);
    std::vector<std::size_t> shifts = {0, 1, 2, 3, 4, 5, 6, 7, 8};
    for (const auto& row : hankel_sign_survey(e, shifts, 10)) {
        bool has_negative = false, all_positive = true;
        for (int s : row.signs) {
            has_negative = has_negative || s < 0;
            all_positive = all_positive && s > 0;
        }
        INFO("shift " << row.shift);
        if (row.shift % 2 == 1) CHECK(all_positive);
        else CHECK(has_negative);
    }
}
