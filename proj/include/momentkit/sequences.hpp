#pragma once

// Named integer and rational sequences with value semantics. A handle is an
// immutable snapshot: generators take an explicit term count and derived
// handles record how they were produced, so reports can print the chain.

#include <string>
#include <vector>

#include "momentkit/polynomial.hpp"
#include "momentkit/rational.hpp"

namespace momentkit {

template <class R>
struct BasicSequence {
    std::string name;
    std::string provenance;
    std::vector<R> terms;

    std::size_t size() const { return terms.size(); }
    const R& at(std::size_t n) const { return terms.at(n); }

    void require_terms(std::size_t need, const char* what) const {
        if (terms.size() < need)
            throw InsufficientTerms(std::string(what) + " on sequence " + name,
                                    terms.size(), need);
    }
};

using SequenceHandle = BasicSequence<Rational>;
using PolySequenceHandle = BasicSequence<RatPolynomial>;

// --- generators ------------------------------------------------------------

// Zigzag numbers 1, 1, 1, 2, 5, 16, 61, ... via the convolution recurrence
// a_{n+1} = (1/2) sum_k C(n,k) a_{n-k} a_k.
SequenceHandle euler_numbers(std::size_t count);

// Same numbers read off the exponential generating function (1 + sin)/cos;
// an independent route kept for cross-checking.
SequenceHandle euler_numbers_from_series(std::size_t count);

// Snake numbers 1, 1, 3, 11, 57, 361, ... from the generating function
// 1/(cos - sin).
SequenceHandle springer_numbers(std::size_t count);

// sum_k C(n,k)^2 C(n+k,k)^2.
SequenceHandle apery_numbers(std::size_t count);

// C(2n, n): 1, 2, 6, 20, 70, ...
SequenceHandle central_binomials(std::size_t count);

// Even / odd subsequences of the zigzag numbers.
SequenceHandle secant_numbers(std::size_t count);
SequenceHandle tangent_numbers(std::size_t count);

// Polynomials E_0(x), E_2(x), E_4(x), ... refining the even zigzag numbers by
// record count, via E_{2n+2}(x) = x sum_k C(2n+1,2k) E_{2n-2k+1} E_{2k}(x).
PolySequenceHandle secant_power_polys(std::size_t count);

// --- transforms ------------------------------------------------------------

// Arithmetic-progression subsequence a_{start + k*step}.
SequenceHandle subsequence(const SequenceHandle& s, std::size_t start, std::size_t step);

enum class ScaleMode {
    DivFactorial,          // a_n / n!
    DivFactorialSquared,   // a_n / (n!)^2
    MulFactorial,          // a_n * n!
    DivDoubleFactorialIdx, // a_n / (2n)!
};
const char* to_string(ScaleMode m);
SequenceHandle scale_seq(const SequenceHandle& s, ScaleMode mode);

// b_n = sum_k C(n,k) c^{n-k} a_k; c = 0 gives the identity.
SequenceHandle binomial_transform(const SequenceHandle& s, const Rational& c);

// (-1)^{n(n-1)/2} a_n: signs follow the quarter-period pattern + + - - + + - -.
SequenceHandle signed_variant(const SequenceHandle& s);

// a_0, 0, a_1, 0, a_2, ... (result has 2*size-1 terms).
SequenceHandle aerated(const SequenceHandle& s);

bool integer_valued(const SequenceHandle& s);

// --- name resolution for the command line and reports ----------------------

// Builds one of the named sequences understood by the CLI ("euler",
// "springer", "apery", "central-binomial", "secant", "tangent",
// "euler-shifted", "euler-tilde", "euler-shifted-tilde", "secant-tilde",
// "tangent-tilde", "euler-even-over-nfact", "euler-even-over-nfact-sq",
// "springer-even", "springer-odd", "springer-tilde", "springer-signed",
// "euler-shifted-signed"). Throws DomainError for unknown names.
SequenceHandle resolve_sequence(const std::string& name, std::size_t count);
std::vector<std::string> known_sequences();

} // namespace momentkit
