#pragma once

// Exact Hankel and Toeplitz minor machinery: fraction-free determinants,
// positive-semidefiniteness via leading minors, windowed total positivity,
// and triangular Toeplitz minor checks.

#include <optional>
#include <string>
#include <vector>

#include "momentkit/rational.hpp"
#include "momentkit/sequences.hpp"

namespace momentkit {

struct HankelMatrix {
    std::size_t shift = 0;                        // m in entries a_{i+j+m}
    std::vector<std::vector<Rational>> entries;   // n x n

    std::size_t size() const { return entries.size(); }
    static HankelMatrix build(const SequenceHandle& s, std::size_t shift, std::size_t size);
};

// Exact determinant of a general rational matrix. Denominators are cleared
// row by row, the integer core runs one-step fraction-free elimination, and
// for size <= 5 a cofactor expansion re-derives the value as a cross-check.
Rational det_exact(const std::vector<std::vector<Rational>>& m);

Rational hankel_det(const HankelMatrix& h);

enum class MinorStatus { AllPositive, AllNonnegative, Violation };
const char* to_string(MinorStatus s);

struct MinorWitness {
    std::vector<std::size_t> rows, cols;
    Rational det;
    bool strictness = false;   // true when the failure is a zero where a
                               // strictly positive minor was required
};

struct MinorReport {
    MinorStatus status = MinorStatus::AllPositive;
    std::string family;          // sequence name
    std::size_t shift = 0;
    std::size_t window = 0;      // window size (or nmax for leading minors)
    std::size_t max_order = 0;
    std::optional<MinorWitness> witness;   // present iff status == Violation
    std::vector<Rational> leading_minors;  // filled by psd_leading_minors
    std::size_t minors_checked = 0;
    std::size_t zero_minors = 0;
};

// Leading principal minors Delta_1..Delta_nmax of the shifted Hankel matrix.
// A strictly negative minor is a violation (witness = first such); zeros only
// downgrade all-positive to all-nonnegative.
MinorReport psd_leading_minors(const SequenceHandle& s, std::size_t shift, std::size_t nmax);

// All minors of order <= max_order drawn from the leading window x window
// section of the infinite Hankel matrix (shift 0). Scans orders ascending,
// then row sets, then column sets lexicographically; the witness is the first
// negative minor in that order.
MinorReport total_positivity(const SequenceHandle& s, std::size_t window, std::size_t max_order);

// Upper-triangular Toeplitz matrix T(i,j) = a_{j-i} for j >= i, 0 below.
// All minors of order <= max_order must be nonnegative, and minors whose row
// and column sets satisfy i_k <= j_k componentwise must be strictly positive.
MinorReport toeplitz_pf_check(const SequenceHandle& s, std::size_t window, std::size_t max_order);

// Signs of a_n a_{n+2} - a_{n+1}^2: +1, 0, -1 per n.
std::vector<int> log_shape(const SequenceHandle& s);

} // namespace momentkit
