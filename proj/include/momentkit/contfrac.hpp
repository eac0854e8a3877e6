#pragma once

// Stieltjes and Jacobi continued fractions over an exact coefficient ring:
// expansion to power series, coefficient extraction from series, contraction,
// inverse contraction, the diagonal shift of Jacobi coefficients, and a
// registry of closed-form coefficient families.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "momentkit/errors.hpp"
#include "momentkit/polynomial.hpp"
#include "momentkit/rational.hpp"
#include "momentkit/series.hpp"

namespace momentkit {

// f = 1/(1 - a1 t/(1 - a2 t/(...))), innermost tail 1. alphas[i] holds
// a_{i+1}; the constant coefficient of the expansion is always 1.
struct SFraction {
    std::vector<Rational> alphas;
};

// f = c0/(1 - g0 t - b1 t^2/(1 - g1 t - b2 t^2/(...))), innermost tail 1.
// gammas[n] holds g_n and betas[n] holds b_{n+1}.
struct JFraction {
    Rational alpha0 = Rational(1);
    std::vector<Rational> gammas;
    std::vector<Rational> betas;
};

// Bottom-up evaluation of the finite fraction as a truncated series,
// 1/(1 - a_i t g_{i+1}) from the innermost level outward. Works over any
// coefficient ring with RingTraits.
template <class R>
std::vector<R> sfrac_expand_coeffs(const std::vector<R>& alphas, std::size_t count) {
    std::vector<R> out;
    if (count == 0) return out;
    const std::size_t ord = count - 1;
    const R one = R(Rational(1));
    Series<R> g(ord);
    g.set_coeff(0, one);
    for (std::size_t i = alphas.size(); i-- > 0;) {
        Series<R> den(ord);
        den.set_coeff(0, one);
        den = den - g.shifted_up().scaled(alphas[i]);
        g = den.reciprocal();
    }
    return g.coeffs();
}

// Weighted-path (Motzkin triangle) evaluation: row n holds the total weight
// of lattice paths from level 0 after n steps, with flat weight g_k at level
// k and weight b_k on the step down from level k. Coefficients beyond the
// stored arrays mean those steps do not exist, which is exactly the finite
// fraction with innermost tail 1.
template <class R>
std::vector<R> jfrac_expand_coeffs(const R& alpha0, const std::vector<R>& gammas,
                                   const std::vector<R>& betas, std::size_t count) {
    std::vector<R> out;
    if (count == 0) return out;
    const std::size_t top = std::min(betas.size(), count / 2);
    std::vector<R> row(top + 1, R());
    row[0] = R(Rational(1));
    out.push_back(alpha0 * row[0]);
    for (std::size_t n = 1; n < count; ++n) {
        std::vector<R> next(top + 1, R());
        for (std::size_t k = 0; k <= top; ++k) {
            R acc = R();
            if (k > 0) acc = acc + row[k - 1];
            if (k < gammas.size()) acc = acc + gammas[k] * row[k];
            if (k + 1 <= top) acc = acc + betas[k] * row[k + 1];
            next[k] = acc;
        }
        row = std::move(next);
        out.push_back(alpha0 * row[0]);
    }
    return out;
}

// Generic peeling extraction: repeatedly form r = 1 - 1/g, divide by t, read
// off the leading coefficient, and divide the residual by it exactly. Works
// over rings without inverses (polynomials) as long as every quotient is
// exact; a non-exact quotient or a vanishing leading coefficient with a
// nonzero tail throws Breakdown at that level.
template <class R>
std::vector<R> sfrac_extract_coeffs(const std::vector<R>& coeffs, std::size_t depth) {
    if (coeffs.empty() || coeffs[0] != R(Rational(1)))
        throw DomainError("sfrac_extract: constant coefficient must be 1");
    if (coeffs.size() < depth + 1)
        throw InsufficientTerms("sfrac_extract", coeffs.size(), depth + 1);
    std::vector<R> alphas;
    Series<R> g(coeffs);
    for (std::size_t i = 1; i <= depth; ++i) {
        Series<R> one(g.order());
        one.set_coeff(0, R(Rational(1)));
        Series<R> r = one - g.reciprocal();
        Series<R> s = r.shifted_down();   // zero constant term by construction
        if (s.is_zero()) break;           // the fraction terminates here
        const R a = s.coeff(0);
        if (RingTraits<R>::is_zero(a)) throw Breakdown(i);
        alphas.push_back(a);
        if (i == depth) break;
        Series<R> next(s.order());
        for (std::size_t m = 0; m <= s.order(); ++m) {
            auto q = RingTraits<R>::divide_exact(s.coeff(m), a);
            if (!q) throw Breakdown(i);
            next.set_coeff(m, *q);
        }
        g = std::move(next);
    }
    return alphas;
}

std::vector<Rational> sfrac_expand(const SFraction& sf, std::size_t count);
std::vector<Rational> jfrac_expand(const JFraction& jf, std::size_t count);

// Peels one level at a time from a series with constant coefficient 1. A
// vanishing candidate coefficient with a nonzero tail throws Breakdown; a
// vanishing tail terminates the fraction early (fewer than depth levels).
SFraction sfrac_extract(const RatSeries& f, std::size_t depth);

// Quotient-difference style extraction of g_0..g_k and b_1..b_k from the
// first 2k+2 coefficients. Throws SingularHankel(m) when the order-m leading
// Hankel determinant of the input vanishes.
JFraction jfrac_extract(const RatSeries& f, std::size_t k);

// Exact contraction of a finite fraction: g_0 = a_1, g_n = a_{2n} + a_{2n+1},
// b_n = a_{2n-1} a_{2n}, with absent coefficients read as zero.
JFraction contract(const SFraction& sf);

struct InverseContraction {
    SFraction sfrac;
    // 1-based index of the first coefficient the pairwise equations cannot
    // produce; sfrac holds everything solved before that point.
    std::optional<std::size_t> obstruction;
};

// Solve the contraction equations back for a_1, a_2, ...: a_{2n} b_n / a_{2n-1}
// with the 0/0 case resolved as 0, then a_{2n+1} = g_n - a_{2n}.
InverseContraction expand_to_sfrac(const JFraction& jf);

// Adding a constant to every diagonal coefficient multiplies the moment
// sequence by the binomial transform. The returned fraction is re-expanded
// and checked against the transformed expansion of the input; a mismatch
// throws VerificationFailure.
JFraction jfrac_binomial_shift(const JFraction& jf, const Rational& c, std::size_t verify_count);

// The interleaved-with-zeros sequence has diagonal coefficients 0 and
// off-diagonal coefficients equal to the original level coefficients.
JFraction sfrac_to_aerated_jfrac(const SFraction& sf);

// Closed-form coefficient families with the sequence each one expands to.
struct CFFamily {
    std::string name;
    bool jacobi = false;
    std::string target;   // sequence name understood by resolve_sequence
    std::function<Rational(std::size_t)> alpha;   // S kind: a_n, n >= 1
    std::function<Rational(std::size_t)> gamma;   // J kind: g_n, n >= 0
    std::function<Rational(std::size_t)> beta;    // J kind: b_n, n >= 1
    std::string note;
};

const std::vector<CFFamily>& cf_families();
const CFFamily* find_cf_family(const std::string& name);

SFraction family_sfrac(const CFFamily& fam, std::size_t depth);
JFraction family_jfrac(const CFFamily& fam, std::size_t levels);

// Level coefficients n(x + n - 1) in the polynomial ring; expanding them
// yields the secant power polynomials.
std::vector<RatPolynomial> secant_power_alphas(std::size_t depth);

} // namespace momentkit
