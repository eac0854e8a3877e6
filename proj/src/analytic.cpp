#include "momentkit/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "momentkit/errors.hpp"

namespace momentkit {

namespace {

constexpr double kPi = 3.14159265358979323846;

} // namespace

QuadratureResult tanh_sinh(const Integrand& f, double a, double b, double tol_abs,
                           int max_level) {
    if (!(b > a)) throw DomainError("tanh_sinh: empty interval");
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    std::size_t evals = 0;

    // weight and node pair at parameter t > 0; returns false once the nodes
    // have collapsed into the endpoints
    auto node_pair = [&](double t, double& contrib) -> bool {
        double u = 0.5 * kPi * std::sinh(t);
        double ch = std::cosh(u);
        double w = half * 0.5 * kPi * std::cosh(t) / (ch * ch);
        double delta = 2.0 / (std::exp(2.0 * u) + 1.0);   // 1 - tanh(u), stable
        if (!(w > 1e-300) || delta <= 0) { contrib = 0; return false; }
        double tanhu = 1.0 - delta;
        double xp = mid + half * tanhu;
        double xm = mid - half * tanhu;
        contrib = w * (f(xp, half * (2.0 - delta), half * delta) +
                       f(xm, half * delta, half * (2.0 - delta)));
        evals += 2;
        return true;
    };

    // sum the new nodes of one level: odd multiples of h (all multiples when
    // first is 1 at level 0)
    auto level_sum = [&](double h, int stride_start, int stride) {
        double acc = 0;
        int small_streak = 0;
        for (int j = stride_start;; j += stride) {
            double t = j * h;
            if (t > 7.5) break;
            double c = 0;
            bool alive = node_pair(t, c);
            acc += c;
            if (!alive || std::fabs(c) <= 1e-17 * (std::fabs(acc) + 1e-300)) {
                if (++small_streak >= 2) break;
            } else {
                small_streak = 0;
            }
        }
        return acc;
    };

    double h = 1.0;
    double c0 = 0;
    {
        double fc = f(mid, half, half);
        ++evals;
        c0 = half * 0.5 * kPi * fc;
    }
    double integral = h * (c0 + level_sum(h, 1, 1));
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        double refined = 0.5 * integral + h * level_sum(h, 1, 2);
        double err = std::fabs(refined - integral);
        integral = refined;
        if (level >= 3 && err <= tol_abs)
            return {integral, err, level, evals};
    }
    throw QuadratureFailure("tanh_sinh did not reach tolerance " + std::to_string(tol_abs));
}

double truncation_cutoff(double rate, int poly_deg, double tol, bool gaussian) {
    if (!(rate > 0) || !(tol > 0)) throw DomainError("truncation_cutoff: bad parameters");
    const double margin = 6.0;
    double l = std::log(10.0 / tol) + margin;
    double y = std::max(4.0, l / rate);
    for (int i = 0; i < 20; ++i) {
        double rhs = l + poly_deg * std::log(std::max(y, 2.0));
        y = gaussian ? std::sqrt(rhs / rate) : rhs / rate;
    }
    return y;
}

namespace {

// Alternating theta-like kernel sum_k (-1)^k exp(-(k+1/2)^2 pi^2 y^2 / 2),
// summed in positive pairs; continuous extension 1/2 at y = 0.
double theta_kernel(double y) {
    y = std::fabs(y);
    if (y < 1e-12) return 0.5;
    const double c = 0.5 * kPi * kPi * y * y;
    double s = 0;
    for (int k = 0; k < 200000; k += 2) {
        double t1 = std::exp(-c * (k + 0.5) * (k + 0.5));
        double t2 = std::exp(-c * (k + 1.5) * (k + 1.5));
        s += t1 - t2;
        if (t1 <= 1e-18 * (s + 1e-300)) break;
    }
    return s;
}

double ipow(double y, std::size_t p) {
    double r = 1;
    double base = y;
    for (std::size_t e = p; e > 0; e >>= 1) {
        if (e & 1) r *= base;
        base *= base;
    }
    return r;
}

Rational expected_from(const std::string& seq_name, std::size_t n) {
    return resolve_sequence(seq_name, n + 1).at(n);
}

std::vector<DensitySpec> build_densities() {
    std::vector<DensitySpec> ds;
    using S = DensitySpec::Support;

    DensitySpec d;
    d.name = "secant-sech";
    d.description = "y^{2n} sech(pi y/2) on (0, inf)";
    d.target = "secant";
    d.support = S::HalfLine;
    d.decay_right = 0.5 * kPi;
    d.integrand = [](std::size_t n, double y, double, double) {
        double e = std::exp(-0.5 * kPi * y);
        return ipow(y, 2 * n) * 2.0 * e / (1.0 + e * e);
    };
    d.poly_deg = [](std::size_t n) { return static_cast<int>(2 * n); };
    d.prefactor = [](std::size_t) { return 1.0; };
    d.expected = [](std::size_t n) { return expected_from("secant", n); };
    d.max_n = 12;
    ds.push_back(d);

    d = DensitySpec();
    d.name = "tangent-csch";
    d.description = "y^{2n+1} csch(pi y/2) on (0, inf)";
    d.target = "tangent";
    d.support = S::HalfLine;
    d.decay_right = 0.5 * kPi;
    d.integrand = [](std::size_t n, double y, double, double) {
        double u = 0.5 * kPi * y;
        if (u < 1e-4) {
            // csch u = 1/u - u/6 + ...
            double corr = 1.0 + u * u / 6.0 + u * u * u * u * 7.0 / 360.0;
            return ipow(y, 2 * n) * (2.0 / kPi) / corr;
        }
        double e = std::exp(-u);
        return ipow(y, 2 * n + 1) * 2.0 * e / (1.0 - e * e);
    };
    d.poly_deg = [](std::size_t n) { return static_cast<int>(2 * n + 1); };
    d.prefactor = [](std::size_t) { return 1.0; };
    d.expected = [](std::size_t n) { return expected_from("tangent", n); };
    d.max_n = 12;
    ds.push_back(d);

    d = DensitySpec();
    d.name = "euler-esinh";
    d.description = "y^{n+1} e^{pi y/2}/sinh(pi y) on (-inf, inf)";
    d.target = "euler-shifted";
    d.support = S::FullLine;
    d.decay_right = 0.5 * kPi;
    d.decay_left = 1.5 * kPi;
    d.integrand = [](std::size_t n, double y, double, double) {
        double ay = std::fabs(y);
        if (ay < 1e-5) {
            double u = kPi * y;
            double corr = 1.0 + u * u / 6.0;
            return ipow(y, n) * std::exp(0.5 * kPi * y) / (kPi * corr);
        }
        double t = std::exp(-2.0 * kPi * ay);
        double sgn = y > 0 ? 1.0 : -1.0;
        return ipow(y, n + 1) * sgn * 2.0 * std::exp(0.5 * kPi * y - kPi * ay) / (1.0 - t);
    };
    d.poly_deg = [](std::size_t n) { return static_cast<int>(n + 1); };
    d.prefactor = [](std::size_t) { return 1.0; };
    d.expected = [](std::size_t n) { return expected_from("euler-shifted", n); };
    d.max_n = 10;
    ds.push_back(d);

    d = DensitySpec();
    d.name = "springer-hamburger";
    d.description = "y^n e^{pi y/4} sech(pi y/2)/(2 sqrt 2) on (-inf, inf)";
    d.target = "springer";
    d.support = S::FullLine;
    d.decay_right = 0.25 * kPi;
    d.decay_left = 0.75 * kPi;
    d.integrand = [](std::size_t n, double y, double, double) {
        double ay = std::fabs(y);
        double e = std::exp(-kPi * ay);
        return ipow(y, n) * 2.0 * std::exp(0.25 * kPi * y - 0.5 * kPi * ay) / (1.0 + e);
    };
    d.poly_deg = [](std::size_t n) { return static_cast<int>(n); };
    d.prefactor = [](std::size_t) { return 1.0 / (2.0 * std::sqrt(2.0)); };
    d.expected = [](std::size_t n) { return expected_from("springer", n); };
    d.max_n = 10;
    ds.push_back(d);

    d = DensitySpec();
    d.name = "springer-even-cosh";
    d.description = "y^{2n} cosh(pi y/4) sech(pi y/2)/sqrt 2 on (0, inf)";
    d.target = "springer-even";
    d.support = S::HalfLine;
    d.decay_right = 0.25 * kPi;
    d.integrand = [](std::size_t n, double y, double, double) {
        double e = std::exp(-kPi * y);
        return ipow(y, 2 * n) *
               (std::exp(-0.25 * kPi * y) + std::exp(-0.75 * kPi * y)) / (1.0 + e);
    };
    d.poly_deg = [](std::size_t n) { return static_cast<int>(2 * n); };
    d.prefactor = [](std::size_t) { return 1.0 / std::sqrt(2.0); };
    d.expected = [](std::size_t n) { return expected_from("springer-even", n); };
    d.max_n = 8;
    ds.push_back(d);

    d = DensitySpec();
    d.name = "springer-odd-sinh";
    d.description = "y^{2n+1} sinh(pi y/4) sech(pi y/2)/sqrt 2 on (0, inf)";
    d.target = "springer-odd";
    d.support = S::HalfLine;
    d.decay_right = 0.25 * kPi;
    d.integrand = [](std::size_t n, double y, double, double) {
        double e = std::exp(-kPi * y);
        return ipow(y, 2 * n + 1) *
               (std::exp(-0.25 * kPi * y) - std::exp(-0.75 * kPi * y)) / (1.0 + e);
    };
    d.poly_deg = [](std::size_t n) { return static_cast<int>(2 * n + 1); };
    d.prefactor = [](std::size_t) { return 1.0 / std::sqrt(2.0); };
    d.expected = [](std::size_t n) { return expected_from("springer-odd", n); };
    d.max_n = 8;
    ds.push_back(d);

    d = DensitySpec();
    d.name = "central-binomial";
    d.description = "x^n / (pi sqrt(x) sqrt(4-x)) on (0, 4)";
    d.target = "binomial(2n, n)";
    d.support = S::Finite;
    d.a = 0;
    d.b = 4;
    d.integrand = [](std::size_t n, double, double da, double db) {
        if (da <= 0 || db <= 0) return 0.0;
        return ipow(da, n) / (std::sqrt(da) * std::sqrt(db));
    };
    d.poly_deg = [](std::size_t n) { return static_cast<int>(n); };
    d.prefactor = [](std::size_t) { return 1.0 / kPi; };
    d.expected = [](std::size_t n) { return Rational(binomial(2 * n, n)); };
    d.max_n = 12;
    ds.push_back(d);

    d = DensitySpec();
    d.name = "euler-theta";
    d.description = "2^{n+1}/sqrt(2 pi) * y^{2n} theta(y) on (-inf, inf)";
    d.target = "euler-even-over-nfact";
    d.support = S::FullLine;
    d.decay_right = kPi * kPi / 8.0;
    d.decay_left = kPi * kPi / 8.0;
    d.gaussian = true;
    d.integrand = [](std::size_t n, double y, double, double) {
        return ipow(y, 2 * n) * theta_kernel(y);
    };
    d.poly_deg = [](std::size_t n) { return static_cast<int>(2 * n); };
    d.prefactor = [](std::size_t n) {
        return std::ldexp(1.0, static_cast<int>(n) + 1) / std::sqrt(2.0 * kPi);
    };
    d.expected = [](std::size_t n) { return expected_from("euler-even-over-nfact", n); };
    d.max_n = 8;
    ds.push_back(d);

    return ds;
}

} // namespace

const std::vector<DensitySpec>& density_specs() {
    static const std::vector<DensitySpec> ds = build_densities();
    return ds;
}

const DensitySpec* find_density(const std::string& name) {
    // accepted alternate spelling for the even-index zigzag density
    std::string want = (name == "E2n-sech") ? "secant-sech" : name;
    for (const auto& d : density_specs())
        if (d.name == want) return &d;
    return nullptr;
}

VerificationRecord moment_integral(const DensitySpec& d, std::size_t n, double tol) {
    Rational exact = d.expected(n);
    double ev = exact.to_double();
    double lo = d.a, hi = d.b;
    if (d.support == DensitySpec::Support::HalfLine) {
        lo = 0;
        hi = truncation_cutoff(d.decay_right, d.poly_deg(n), tol, d.gaussian);
    } else if (d.support == DensitySpec::Support::FullLine) {
        hi = truncation_cutoff(d.decay_right, d.poly_deg(n), tol, d.gaussian);
        lo = -truncation_cutoff(d.decay_left, d.poly_deg(n), tol, d.gaussian);
    }
    double pf = d.prefactor(n);
    double tol_quad = 0.25 * tol * std::max(1.0, std::fabs(ev)) / std::max(pf, 1e-30);
    auto q = tanh_sinh([&](double y, double da, double db) { return d.integrand(n, y, da, db); },
                       lo, hi, tol_quad);
    double val = pf * q.value;

    VerificationRecord r;
    r.what = d.name;
    r.n = n;
    r.computed = val;
    r.expected = ev;
    r.rel_err = std::fabs(val - ev) / std::max(std::fabs(ev), 1e-300);
    r.tol = tol;
    r.pass = r.rel_err <= tol;
    return r;
}

double complex_gamma_abs2(double x, double s) {
    // Lanczos approximation, g = 7, lifted by the recurrence until Re z >= 1.
    static const double kCoef[9] = {
        0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,    12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6,  1.5056327351493116e-7};
    std::complex<double> z(0.5 * x, 0.5 * s);
    std::complex<double> lift(1.0, 0.0);
    while (z.real() < 1.0) {
        lift *= z;
        z += 1.0;
    }
    std::complex<double> acc(kCoef[0], 0.0);
    for (int i = 1; i < 9; ++i) acc += kCoef[i] / (z + std::complex<double>(i - 1, 0));
    std::complex<double> t = z + std::complex<double>(6.5, 0.0);
    std::complex<double> g = std::sqrt(2.0 * kPi) * std::pow(t, z - std::complex<double>(0.5, 0.0)) *
                             std::exp(-t) * acc;
    return std::norm(g / lift);
}

VerificationRecord secpow_gamma_moment(std::size_t n, const Rational& x, double tol) {
    double xd = x.to_double();
    if (!(xd > 0)) throw DomainError("secpow_gamma_moment: x must be positive");
    PolySequenceHandle polys = secant_power_polys(n + 1);
    Rational exact = polys.at(n).eval(x);
    double ev = exact.to_double();

    double hi = truncation_cutoff(0.5 * kPi, static_cast<int>(2 * n) + static_cast<int>(xd) + 1, tol);
    double pf = std::pow(2.0, xd - 1.0) / (kPi * std::tgamma(xd));
    double tol_quad = 0.25 * tol * std::max(1.0, std::fabs(ev)) / std::max(pf, 1e-30);
    // At x = 1 and x = 2 the squared gamma modulus collapses to elementary
    // kernels; use them directly (the general approximation is audited against
    // these forms in the tests).
    std::function<double(double)> kernel;
    if (x == Rational(1)) {
        kernel = [](double s) {
            double u = 0.5 * kPi * s;
            return 2.0 * kPi * std::exp(-u) / (1.0 + std::exp(-2.0 * u));
        };
    } else if (x == Rational(2)) {
        kernel = [](double s) {
            double u = 0.5 * kPi * s;
            if (u < 1e-6) return 1.0 - u * u / 6.0;
            return 2.0 * u * std::exp(-u) / (1.0 - std::exp(-2.0 * u));
        };
    } else {
        kernel = [xd](double s) { return complex_gamma_abs2(xd, s); };
    }
    auto q = tanh_sinh([&](double s, double, double) {
        return ipow(s, 2 * n) * kernel(s);
    }, 0.0, hi, tol_quad);
    double val = pf * q.value;

    VerificationRecord r;
    r.what = "secant-power-gamma(x=" + x.to_string() + ")";
    r.n = n;
    r.computed = val;
    r.expected = ev;
    r.rel_err = std::fabs(val - ev) / std::max(std::fabs(ev), 1e-300);
    r.tol = tol;
    r.pass = r.rel_err <= tol;
    return r;
}

namespace {

// Hurwitz zeta via Euler-Maclaurin, s > 1, a > 0.
double hurwitz_zeta(double s, double a) {
    const int n = 24;
    static const double kB2j[8] = {1.0 / 6,  -1.0 / 30, 1.0 / 42,     -1.0 / 30,
                                   5.0 / 66, -691.0 / 2730, 7.0 / 6, -3617.0 / 510};
    double sum = 0;
    for (int k = 0; k < n; ++k) sum += std::pow(k + a, -s);
    double x = n + a;
    sum += std::pow(x, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(x, -s);
    double poch = s;           // s (s+1) ... (s+2j-2)
    double fact = 2.0;         // (2j)!
    double xp = std::pow(x, -s - 1.0);
    for (int j = 1; j <= 8; ++j) {
        sum += kB2j[j - 1] / fact * poch * xp;
        poch *= (s + 2 * j - 1) * (s + 2 * j);
        fact *= (2 * j + 1) * (2 * j + 2);
        xp /= x * x;
    }
    return sum;
}

// Accelerated alternating sum for sum_k (-1)^k (k+a)^{-s}.
double alternating_lerch(double s, double a) {
    const int n = 36;
    double d = std::pow(3.0 + 2.0 * std::sqrt(2.0), n);
    d = 0.5 * (d + 1.0 / d);
    double b = -1.0, c = -d, acc = 0;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        acc += c * std::pow(k + a, -s);
        b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1.0));
    }
    return acc / d;
}

VerificationRecord make_record(const std::string& what, std::size_t n, double computed,
                               const Rational& exact, double tol) {
    VerificationRecord r;
    r.what = what;
    r.n = n;
    r.computed = computed;
    r.expected = exact.to_double();
    r.rel_err = std::fabs(computed - r.expected) / std::max(std::fabs(r.expected), 1e-300);
    r.tol = tol;
    r.pass = r.rel_err <= tol;
    return r;
}

} // namespace

double lerch_phi(double z, double s, double a) {
    if (!(a > 0)) throw DomainError("lerch_phi: a must be positive");
    if (z == -1.0) return alternating_lerch(s, a);
    if (z == 1.0) {
        if (s <= 1.0) throw DomainError("lerch_phi: z = 1 needs s > 1");
        return hurwitz_zeta(s, a);
    }
    throw DomainError("lerch_phi: only z = -1 and z = 1 are supported");
}

VerificationRecord lerch_even(std::size_t n, double tol) {
    double s = 2.0 * n + 1.0;
    double v = 2.0 * std::pow(kPi, -s) * lerch_phi(-1.0, s, 0.5);
    return make_record("lerch-even", n, v, expected_from("secant-tilde", n), tol);
}

VerificationRecord lerch_odd(std::size_t n, double tol) {
    double s = 2.0 * n + 2.0;
    double v = 2.0 * std::pow(kPi, -s) * lerch_phi(1.0, s, 0.5);
    return make_record("lerch-odd", n, v, expected_from("tangent-tilde", n), tol);
}

VerificationRecord zeta_quarters(std::size_t n, double tol) {
    if (n < 1) throw DomainError("zeta_quarters: needs n >= 1");
    double s = n + 1.0;
    double sign = (n + 1) % 2 == 0 ? 1.0 : -1.0;
    double v = 2.0 * std::pow(2.0 / kPi, s) * std::pow(4.0, -s) *
               (lerch_phi(1.0, s, 0.25) + sign * lerch_phi(1.0, s, 0.75));
    return make_record("zeta-quarters", n, v, expected_from("euler-tilde", n), tol);
}

VerificationRecord springer_lerch(std::size_t n, double tol) {
    double s = n + 1.0;
    double sign = (n + 1) % 2 == 0 ? -1.0 : 1.0;   // (-1)^{s+1}
    double v = (lerch_phi(-1.0, s, 0.25) + sign * lerch_phi(-1.0, s, 0.75)) /
               (std::sqrt(2.0) * std::pow(kPi, s));
    return make_record("springer-lerch", n, v, expected_from("springer-tilde", n), tol);
}

PartialFracRecord partial_frac_euler(std::size_t n, unsigned long long k) {
    const std::size_t s = n + 1;
    const double sd = static_cast<double>(s);
    const double pref = 2.0 * std::pow(2.0 / kPi, sd);
    double acc = 0;
    if (s % 2 == 0) {
        for (unsigned long long j = 0; j < k; ++j)
            acc += std::pow(4.0 * j + 1.0, -sd) + std::pow(4.0 * j + 3.0, -sd);
    } else {
        for (unsigned long long j = 0; j < k; ++j)
            acc += std::pow(4.0 * j + 1.0, -sd) - std::pow(4.0 * j + 3.0, -sd);
    }
    double edge = 4.0 * static_cast<double>(k) - 3.0;
    double tail;
    if (s % 2 == 0)
        tail = pref * std::pow(edge, 1.0 - sd) / (2.0 * (sd - 1.0));
    else
        tail = pref * 0.5 * std::pow(edge, -sd);

    PartialFracRecord r;
    r.n = n;
    r.terms = k;
    r.partial = pref * acc;
    r.exact = expected_from("euler-tilde", n).to_double();
    r.tail_bound = tail;
    r.within = std::fabs(r.partial - r.exact) <= r.tail_bound + 1e-12 * std::fabs(r.exact) + 1e-15;
    return r;
}

PartialFracRecord partial_frac_springer(std::size_t n, unsigned long long k) {
    const std::size_t s = n + 1;
    const double sd = static_cast<double>(s);
    const double pref = 1.0 / (std::sqrt(2.0) * std::pow(kPi, sd));
    const double sign = s % 2 == 0 ? -1.0 : 1.0;   // (-1)^{s+1}
    double acc = 0;
    for (unsigned long long j = 0; j < k; ++j) {
        double alt = (j % 2 == 0) ? 1.0 : -1.0;
        acc += alt * (std::pow(j + 0.25, -sd) + sign * std::pow(j + 0.75, -sd));
    }
    double kd = static_cast<double>(k);
    double tail = pref * (std::pow(kd + 0.25, -sd) + std::pow(kd + 0.75, -sd));

    PartialFracRecord r;
    r.n = n;
    r.terms = k;
    r.partial = pref * acc;
    r.exact = expected_from("springer-tilde", n).to_double();
    r.tail_bound = tail;
    r.within = std::fabs(r.partial - r.exact) <= r.tail_bound + 1e-12 * std::fabs(r.exact) + 1e-15;
    return r;
}

std::vector<AsymptoticRecord> asymptotic_check(const std::string& family,
                                               std::size_t n_lo, std::size_t n_hi) {
    double lead, ratio;
    SequenceHandle seq;
    if (family == "euler") {
        lead = 4.0 / kPi;
        ratio = 2.0 / kPi;
        seq = resolve_sequence("euler", n_hi + 1);
    } else if (family == "springer") {
        lead = 2.0 * std::sqrt(2.0) / kPi;
        ratio = 4.0 / kPi;
        seq = resolve_sequence("springer", n_hi + 1);
    } else {
        throw DomainError("asymptotic_check: unknown family " + family);
    }
    std::vector<AsymptoticRecord> out;
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
        AsymptoticRecord r;
        r.n = n;
        r.exact = seq.at(n).to_double();
        r.approx = lead * std::pow(ratio, static_cast<double>(n)) *
                   factorial(static_cast<unsigned long>(n)).to_double();
        r.rel_err = std::fabs(r.exact - r.approx) / r.exact;
        out.push_back(r);
    }
    return out;
}

CarlemanReport carleman_diagnostic(const SequenceHandle& s, double reference_b) {
    s.require_terms(3, "carleman_diagnostic");
    CarlemanReport rep;
    rep.reference_b = reference_b;
    double acc = 0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const std::size_t m = s.size() - 1;
    for (std::size_t n = 1; n <= m; ++n) {
        if (s.at(n).sign() <= 0) throw NonPositiveTerm(n);
        double la = s.at(n).log_abs();
        acc += std::exp(-la / (2.0 * n));
        rep.partial_sums.push_back(acc);
        double y = la - std::lgamma(static_cast<double>(n) + 1.0);
        sx += n;
        sy += y;
        sxx += static_cast<double>(n) * n;
        sxy += n * y;
    }
    double denom = m * sxx - sx * sx;
    double c1 = (m * sxy - sx * sy) / denom;
    double c0 = (sy - c1 * sx) / m;
    rep.fit_a = std::exp(c0);
    rep.fit_b = std::exp(c1);
    return rep;
}

} // namespace momentkit
