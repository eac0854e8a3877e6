#pragma once

// Brute-force enumeration of alternating permutations and signed snakes,
// used as independent ground truth for the sequence generators. Everything
// here is exponential by nature; the bound parameters keep accidental huge
// runs from starting (BoundExceeded).

#include <cstddef>

#include "momentkit/polynomial.hpp"
#include "momentkit/rational.hpp"

namespace momentkit {

// Number of permutations of [n] with the zigzag pattern s1 > s2 < s3 > ...
BigInt alt_perm_count(std::size_t n, std::size_t bound = 13);

// Distribution of left-to-right maxima over those permutations, as a
// polynomial in x (coefficient of x^r = number of permutations with r
// records).
RatPolynomial alt_records_poly(std::size_t n, std::size_t bound = 13);

// Number of sequences over {-n..-1, 1..n} whose absolute values form a
// permutation of [n], with the chain 0 < p1 > p2 < p3 > ...  The work is
// split across `jobs` threads by the value of the first entry.
BigInt snake_count(std::size_t n, unsigned jobs = 1, std::size_t bound = 10);

} // namespace momentkit
