#pragma once

// Floating-point verification layer: tanh-sinh quadrature of the moment
// densities, Lerch/Hurwitz identity checks, truncated partial-fraction sums
// with rigorous tail bounds, growth asymptotics, and the Carleman divergence
// diagnostic. Everything here compares doubles against exact targets and
// reports pass/fail records; nothing exact depends on this file.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "momentkit/rational.hpp"
#include "momentkit/sequences.hpp"

namespace momentkit {

struct QuadratureResult {
    double value = 0;
    double error_estimate = 0;
    int levels = 0;
    std::size_t evals = 0;
};

// Integrand receives (x, x - a, b - x); the distances are computed without
// cancellation so endpoint-singular factors can be evaluated stably.
using Integrand = std::function<double(double x, double dist_a, double dist_b)>;

// Double-exponential quadrature over [a, b] to an absolute tolerance.
QuadratureResult tanh_sinh(const Integrand& f, double a, double b, double tol_abs,
                           int max_level = 11);

// Truncation point Y such that the tail of y^deg e^{-rate y} (or
// y^deg e^{-rate y^2} when gaussian) past Y is below tol with margin.
double truncation_cutoff(double rate, int poly_deg, double tol, bool gaussian = false);

struct VerificationRecord {
    std::string what;
    std::size_t n = 0;
    double computed = 0;
    double expected = 0;
    double rel_err = 0;
    double tol = 0;
    bool pass = false;
};

struct DensitySpec {
    enum class Support { HalfLine, FullLine, Finite };

    std::string name;
    std::string description;
    std::string target;            // what the moments should equal
    Support support = Support::HalfLine;
    double a = 0, b = 0;           // endpoints when support is Finite
    double decay_right = 0;        // exponential rate (or gaussian coefficient)
    double decay_left = 0;
    bool gaussian = false;
    // full integrand y^{power} * density(y) except the constant prefactor
    std::function<double(std::size_t n, double y, double da, double db)> integrand;
    std::function<int(std::size_t n)> poly_deg;     // for the cutoff formula
    std::function<double(std::size_t n)> prefactor;
    std::function<Rational(std::size_t n)> expected;
    std::size_t max_n = 0;
};

const std::vector<DensitySpec>& density_specs();
const DensitySpec* find_density(const std::string& name);

// Integrate the density's n-th moment and compare with the exact target at
// relative tolerance tol.
VerificationRecord moment_integral(const DensitySpec& d, std::size_t n, double tol);

// |Gamma((x + i s)/2)|^2 for real x > 0 (Lanczos approximation).
double complex_gamma_abs2(double x, double s);

// Moments of the |Gamma((x+is)/2)|^2 density against the power polynomial
// evaluated at rational x.
VerificationRecord secpow_gamma_moment(std::size_t n, const Rational& x, double tol);

// Lerch transcendent restricted to z = -1 (accelerated alternating sum) and
// z = 1 (Hurwitz zeta via Euler-Maclaurin; requires s > 1).
double lerch_phi(double z, double s, double a);

VerificationRecord lerch_even(std::size_t n, double tol);      // E_{2n}/(2n)!
VerificationRecord lerch_odd(std::size_t n, double tol);       // E_{2n+1}/(2n+1)!
VerificationRecord zeta_quarters(std::size_t n, double tol);   // E_n/n!, n >= 1
VerificationRecord springer_lerch(std::size_t n, double tol);  // S_n/n!

struct PartialFracRecord {
    std::size_t n = 0;
    unsigned long long terms = 0;
    double partial = 0;      // truncated sum
    double exact = 0;        // exact rational target
    double tail_bound = 0;   // rigorous bound on the discarded tail
    bool within = false;     // |partial - exact| <= tail_bound + rounding slack
};

PartialFracRecord partial_frac_euler(std::size_t n, unsigned long long k);
PartialFracRecord partial_frac_springer(std::size_t n, unsigned long long k);

struct AsymptoticRecord {
    std::size_t n = 0;
    double exact = 0;
    double approx = 0;
    double rel_err = 0;
};

// Leading-order growth formulas; family is "euler" or "springer".
std::vector<AsymptoticRecord> asymptotic_check(const std::string& family,
                                               std::size_t n_lo, std::size_t n_hi);

struct CarlemanReport {
    std::vector<double> partial_sums;   // cumulative sums of a_n^{-1/(2n)}, n >= 1
    double fit_a = 0;                   // a_n ~ fit_a * fit_b^n * n!
    double fit_b = 0;
    double reference_b = 0;
};

// Divergence diagnostic for a positive sequence, with a least-squares fit of
// ln a_n - ln n! against n.
CarlemanReport carleman_diagnostic(const SequenceHandle& s, double reference_b);

} // namespace momentkit
