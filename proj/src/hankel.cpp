#include "momentkit/hankel.hpp"

#include <algorithm>

#include "momentkit/errors.hpp"

namespace momentkit {

HankelMatrix HankelMatrix::build(const SequenceHandle& s, std::size_t shift, std::size_t size) {
    if (size == 0) throw DomainError("HankelMatrix: size must be positive");
    s.require_terms(shift + 2 * size - 1, "HankelMatrix");
    HankelMatrix h;
    h.shift = shift;
    h.entries.assign(size, std::vector<Rational>(size));
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
            h.entries[i][j] = s.at(i + j + shift);
    return h;
}

namespace {

// One-step fraction-free elimination on an integer matrix. Every division is
// exact; partial pivoting by row swap only.
BigInt bareiss_det(std::vector<std::vector<BigInt>> m) {
    const std::size_t n = m.size();
    if (n == 0) return BigInt(1);
    int sign = 1;
    BigInt prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return BigInt(0);
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = t;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    BigInt d = m[n - 1][n - 1];
    return sign < 0 ? BigInt(-d) : d;
}

Rational cofactor_det(const std::vector<std::vector<Rational>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return Rational(1);
    if (n == 1) return m[0][0];
    Rational acc(0);
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        std::vector<std::vector<Rational>> sub(n - 1, std::vector<Rational>(n - 1));
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == c) continue;
                sub[i - 1][jj++] = m[i][j];
            }
        }
        Rational term = m[0][c] * cofactor_det(sub);
        if (c % 2 == 1) term = -term;
        acc += term;
    }
    return acc;
}

} // namespace

Rational det_exact(const std::vector<std::vector<Rational>>& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw DomainError("det_exact: matrix is not square");
    if (n == 0) return Rational(1);

    // Clear denominators row by row so the elimination runs over integers.
    std::vector<std::vector<BigInt>> zm(n, std::vector<BigInt>(n));
    BigInt scale(1);
    for (std::size_t i = 0; i < n; ++i) {
        BigInt l(1);
        for (std::size_t j = 0; j < n; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m[i][j].den().get_mpz_t());
        for (std::size_t j = 0; j < n; ++j) {
            BigInt f;
            mpz_divexact(f.get_mpz_t(), l.get_mpz_t(), m[i][j].den().get_mpz_t());
            zm[i][j] = m[i][j].num() * f;
        }
        scale *= l;
    }
    Rational d(bareiss_det(std::move(zm)), scale);
    if (n <= 5 && d != cofactor_det(m))
        throw VerificationFailure("det_exact: elimination and cofactor expansion disagree");
    return d;
}

Rational hankel_det(const HankelMatrix& h) { return det_exact(h.entries); }

const char* to_string(MinorStatus s) {
    switch (s) {
        case MinorStatus::AllPositive: return "all-positive";
        case MinorStatus::AllNonnegative: return "all-nonnegative";
        case MinorStatus::Violation: return "violation";
    }
    return "?";
}

namespace {

// Strictly increasing r-subsets of [0, n) in lexicographic order.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t r = c.size();
    for (std::size_t i = r; i-- > 0;) {
        if (c[i] + (r - i) < n) {
            ++c[i];
            for (std::size_t j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::vector<Rational>> submatrix(const std::vector<std::vector<Rational>>& m,
                                             const std::vector<std::size_t>& rows,
                                             const std::vector<std::size_t>& cols) {
    std::vector<std::vector<Rational>> sub(rows.size(), std::vector<Rational>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            sub[i][j] = m[rows[i]][cols[j]];
    return sub;
}

// Witnesses are always recomputed from scratch before being reported.
void confirm_witness(const std::vector<std::vector<Rational>>& m, const MinorWitness& w) {
    Rational again = cofactor_det(submatrix(m, w.rows, w.cols));
    if (again != w.det)
        throw VerificationFailure("minor witness failed independent recomputation");
}

} // namespace

MinorReport psd_leading_minors(const SequenceHandle& s, std::size_t shift, std::size_t nmax) {
    if (nmax == 0) throw DomainError("psd_leading_minors: nmax must be positive");
    s.require_terms(shift + 2 * nmax - 1, "psd_leading_minors");
    HankelMatrix h = HankelMatrix::build(s, shift, nmax);

    MinorReport rep;
    rep.family = s.name;
    rep.shift = shift;
    rep.window = nmax;
    rep.max_order = nmax;
    for (std::size_t k = 1; k <= nmax; ++k) {
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        Rational d = det_exact(submatrix(h.entries, idx, idx));
        rep.leading_minors.push_back(d);
        ++rep.minors_checked;
        if (d.is_zero()) ++rep.zero_minors;
        if (d.sign() < 0 && rep.status != MinorStatus::Violation) {
            rep.status = MinorStatus::Violation;
            rep.witness = MinorWitness{idx, idx, d, false};
        }
    }
    if (rep.status != MinorStatus::Violation && rep.zero_minors > 0)
        rep.status = MinorStatus::AllNonnegative;
    if (rep.witness) confirm_witness(h.entries, *rep.witness);
    return rep;
}

MinorReport total_positivity(const SequenceHandle& s, std::size_t window, std::size_t max_order) {
    if (window == 0) throw DomainError("total_positivity: window must be positive");
    max_order = std::min(max_order, window);
    s.require_terms(2 * window - 1, "total_positivity");
    HankelMatrix h = HankelMatrix::build(s, 0, window);

    MinorReport rep;
    rep.family = s.name;
    rep.window = window;
    rep.max_order = max_order;
    for (std::size_t r = 1; r <= max_order; ++r) {
        std::vector<std::size_t> rows(r);
        for (std::size_t i = 0; i < r; ++i) rows[i] = i;
        do {
            std::vector<std::size_t> cols(r);
            for (std::size_t i = 0; i < r; ++i) cols[i] = i;
            do {
                Rational d = det_exact(submatrix(h.entries, rows, cols));
                ++rep.minors_checked;
                if (d.is_zero()) ++rep.zero_minors;
                if (d.sign() < 0 && rep.status != MinorStatus::Violation) {
                    rep.status = MinorStatus::Violation;
                    rep.witness = MinorWitness{rows, cols, d, false};
                }
            } while (next_combination(cols, window));
        } while (next_combination(rows, window));
    }
    if (rep.status != MinorStatus::Violation && rep.zero_minors > 0)
        rep.status = MinorStatus::AllNonnegative;
    if (rep.witness) confirm_witness(h.entries, *rep.witness);
    return rep;
}

MinorReport toeplitz_pf_check(const SequenceHandle& s, std::size_t window, std::size_t max_order) {
    if (window == 0) throw DomainError("toeplitz_pf_check: window must be positive");
    max_order = std::min(max_order, window);
    s.require_terms(window, "toeplitz_pf_check");

    std::vector<std::vector<Rational>> t(window, std::vector<Rational>(window, Rational(0)));
    for (std::size_t i = 0; i < window; ++i)
        for (std::size_t j = i; j < window; ++j)
            t[i][j] = s.at(j - i);

    MinorReport rep;
    rep.family = s.name;
    rep.window = window;
    rep.max_order = max_order;
    for (std::size_t r = 1; r <= max_order; ++r) {
        std::vector<std::size_t> rows(r);
        for (std::size_t i = 0; i < r; ++i) rows[i] = i;
        do {
            std::vector<std::size_t> cols(r);
            for (std::size_t i = 0; i < r; ++i) cols[i] = i;
            do {
                Rational d = det_exact(submatrix(t, rows, cols));
                ++rep.minors_checked;
                if (d.is_zero()) ++rep.zero_minors;
                bool bad = d.sign() < 0;
                bool strict_zero = false;
                if (!bad && d.is_zero()) {
                    // a minor whose diagonal entries are all nonzero must be
                    // strictly positive; here that means i_k <= j_k with a
                    // nonzero sequence value at each diagonal spot
                    strict_zero = true;
                    for (std::size_t k = 0; k < r; ++k)
                        if (rows[k] > cols[k] || t[rows[k]][cols[k]].is_zero()) {
                            strict_zero = false;
                            break;
                        }
                    bad = strict_zero;
                }
                if (bad && rep.status != MinorStatus::Violation) {
                    rep.status = MinorStatus::Violation;
                    rep.witness = MinorWitness{rows, cols, d, strict_zero};
                }
            } while (next_combination(cols, window));
        } while (next_combination(rows, window));
    }
    if (rep.status != MinorStatus::Violation && rep.zero_minors > 0)
        rep.status = MinorStatus::AllNonnegative;
    if (rep.witness) confirm_witness(t, *rep.witness);
    return rep;
}

std::vector<int> log_shape(const SequenceHandle& s) {
    s.require_terms(3, "log_shape");
    std::vector<int> signs;
    for (std::size_t n = 0; n + 2 < s.size(); ++n)
        signs.push_back((s.at(n) * s.at(n + 2) - s.at(n + 1) * s.at(n + 1)).sign());
    return signs;
}

} // namespace momentkit
