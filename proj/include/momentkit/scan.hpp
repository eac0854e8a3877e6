#pragma once

// Exhaustive exact scan of the strict log-convexity-style inequality for the
// factorial-normalized zigzag numbers, plus a sign survey of shifted Hankel
// determinants. All arithmetic is exact; any reported violation is re-checked
// independently with rational arithmetic before the report is returned.

#include <cstddef>
#include <optional>
#include <vector>

#include "momentkit/rational.hpp"
#include "momentkit/sequences.hpp"

namespace momentkit {

// (-1)^{n-1} [ e_n e_{n+j+k} - e_{n+j} e_{n+k} ] with e_m = E_m / m!.
// The scanned claim is that this is strictly positive for all n, j, k >= 1.
Rational logconvexity_value(std::size_t n, std::size_t j, std::size_t k);

struct ScanTriple {
    std::size_t n = 0, j = 0, k = 0;
};

struct ScanReport {
    std::size_t n_max = 0, j_max = 0, k_max = 0;
    unsigned long long checked = 0;      // triples with j <= k (the value is
                                         // symmetric in j and k)
    unsigned long long violations = 0;
    std::optional<ScanTriple> first_violation;   // lexicographically first
    bool first_violation_reverified = false;
    double seconds = 0;
};

// Scans 1 <= n <= n_max, 1 <= j <= k <= k_max (j <= j_max) using the
// integer reformulation
//   sign( E_n E_{n+j+k} rf(n,j) - E_{n+j} E_{n+k} rf(n+k,j) ),
// rf(a,j) = (a+1)...(a+j), split across threads by n.
ScanReport scan_logconvexity(std::size_t n_max, std::size_t j_max, std::size_t k_max,
                             unsigned jobs = 1);

struct SignSurveyRow {
    std::size_t shift = 0;
    std::vector<int> signs;   // sign of the order-n shifted Hankel determinant, n = 1..
};

std::vector<SignSurveyRow> hankel_sign_survey(const SequenceHandle& s,
                                              const std::vector<std::size_t>& shifts,
                                              std::size_t n_max);

} // namespace momentkit
