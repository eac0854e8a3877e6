// Standalone driver for the verification battery: prints one line per
// criterion and exits with the number of failures.

#include <cstdio>
#include <cstdlib>

#include "momentkit/acceptance.hpp"

int main() {
    unsigned jobs = 1;
    if (const char* e = std::getenv("MOMENTKIT_JOBS")) {
        int v = std::atoi(e);
        if (v > 0) jobs = static_cast<unsigned>(v);
    }
    auto results = momentkit::run_acceptance(jobs);
    int failures = 0;
    for (const auto& r : results) {
        std::puts(momentkit::format_criterion_line(r).c_str());
        if (!r.pass) ++failures;
    }
    return failures;
}
