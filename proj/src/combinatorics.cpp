#include "momentkit/combinatorics.hpp"

#include <algorithm>
#include <thread>
#include <vector>

#include "momentkit/errors.hpp"

namespace momentkit {

namespace {

// Zigzag backtracking over [n]. pos is 0-based; odd positions must descend
// from their predecessor, even positions (after the first) must ascend.
void perm_rec(std::size_t n, std::size_t pos, long prev, unsigned mask,
              long maxi, std::size_t records,
              std::vector<unsigned long long>* by_records,
              unsigned long long& total) {
    if (pos == n) {
        ++total;
        if (by_records) (*by_records)[records] += 1;
        return;
    }
    const bool descend = (pos % 2 == 1);
    for (long v = 1; v <= static_cast<long>(n); ++v) {
        if (mask & (1u << v)) continue;
        if (pos > 0) {
            if (descend && v >= prev) continue;
            if (!descend && v <= prev) continue;
        }
        perm_rec(n, pos + 1, v, mask | (1u << v), std::max(maxi, v),
                 records + (v > maxi ? 1 : 0), by_records, total);
    }
}

} // namespace

BigInt alt_perm_count(std::size_t n, std::size_t bound) {
    if (n > bound) throw BoundExceeded("zigzag permutation enumeration", n, bound);
    unsigned long long total = 0;
    perm_rec(n, 0, 0, 0, 0, 0, nullptr, total);
    return BigInt(static_cast<unsigned long>(total));
}

RatPolynomial alt_records_poly(std::size_t n, std::size_t bound) {
    if (n > bound) throw BoundExceeded("zigzag permutation enumeration", n, bound);
    std::vector<unsigned long long> by_records(n + 1, 0);
    unsigned long long total = 0;
    perm_rec(n, 0, 0, 0, 0, 0, &by_records, total);
    std::vector<Rational> coeffs;
    for (auto c : by_records)
        coeffs.push_back(Rational(BigInt(static_cast<unsigned long>(c))));
    return RatPolynomial(coeffs);
}

namespace {

// Snake backtracking: entries are +-v with distinct absolute values; the
// chain starts 0 < p1 and then alternates strictly.
void snake_rec(std::size_t n, std::size_t pos, long prev, unsigned mask,
               unsigned long long& total) {
    if (pos == n) {
        ++total;
        return;
    }
    const bool descend = (pos % 2 == 1);
    for (long a = 1; a <= static_cast<long>(n); ++a) {
        if (mask & (1u << a)) continue;
        for (int s = 0; s < 2; ++s) {
            long v = s ? -a : a;
            if (pos == 0) {
                if (v < 0) continue;   // 0 < p1
            } else {
                if (descend && v >= prev) continue;
                if (!descend && v <= prev) continue;
            }
            snake_rec(n, pos + 1, v, mask | (1u << a), total);
        }
    }
}

} // namespace

BigInt snake_count(std::size_t n, unsigned jobs, std::size_t bound) {
    if (n > bound) throw BoundExceeded("snake enumeration", n, bound);
    if (n == 0) return BigInt(1);
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));

    std::vector<unsigned long long> partial(jobs, 0);
    auto work = [&](unsigned id) {
        // first entry is positive; split the tree by its value
        for (long v = 1; v <= static_cast<long>(n); ++v)
            if (static_cast<unsigned>(v - 1) % jobs == id)
                snake_rec(n, 1, v, 1u << v, partial[id]);
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned id = 0; id < jobs; ++id) pool.emplace_back(work, id);
        for (auto& t : pool) t.join();
    }
    unsigned long long total = 0;
    for (auto p : partial) total += p;
    return BigInt(static_cast<unsigned long>(total));
}

} // namespace momentkit
