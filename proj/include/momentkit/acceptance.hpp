#pragma once

// The end-to-end verification battery: twelve self-contained checks covering
// sequence fidelity, Hankel fixtures, continued-fraction extraction and
// contraction, signed expansions, brute-force enumeration, quadrature of the
// integral representations, series identities, asymptotics, the
// log-convexity scan, the positivity matrix, and round-trip properties.
// Shared between the command line (--seed-suite) and the test driver.

#include <cstddef>
#include <string>
#include <vector>

namespace momentkit {

struct CriterionResult {
    int number = 0;
    std::string name;
    bool pass = false;
    double seconds = 0;
    std::string detail;   // one-line summary, or the failure reason
};

// Runs all twelve checks in order. jobs bounds the thread count of the
// parallel pieces (snake enumeration, the scan). Exceptions inside a check
// fail that check and are reported in its detail; they do not stop the run.
std::vector<CriterionResult> run_acceptance(unsigned jobs);

// "PASS  3  cf-extraction        0.012s  11 families ..." style line.
std::string format_criterion_line(const CriterionResult& r);

} // namespace momentkit
