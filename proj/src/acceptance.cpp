#include "momentkit/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "momentkit/analytic.hpp"
#include "momentkit/combinatorics.hpp"
#include "momentkit/contfrac.hpp"
#include "momentkit/hankel.hpp"
#include "momentkit/scan.hpp"
#include "momentkit/sequences.hpp"

namespace momentkit {

namespace {

// Collects failure messages; a criterion passes when nothing was recorded.
struct Check {
    std::vector<std::string> failures;

    void require(bool ok, const std::string& msg) {
        if (!ok && failures.size() < 6) failures.push_back(msg);
        if (!ok && failures.size() == 6) failures.push_back("...");
    }

    std::string summary(const std::string& ok_detail) const {
        if (failures.empty()) return ok_detail;
        std::string s;
        for (const auto& f : failures) {
            if (!s.empty()) s += "; ";
            s += f;
        }
        return s;
    }
};

// ---- 1: the three sequences against their published openings --------------

void c1_sequences(Check& ck, std::string& detail) {
    static const long kZigzag[11] = {1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521};
    static const long kSnake[11] = {1, 1, 3, 11, 57, 361, 2763, 24611, 250737, 2873041, 36581523};
    static const long kDiag[3] = {1, 5, 73};

    auto e = euler_numbers(11);
    auto e2 = euler_numbers_from_series(11);
    auto s = springer_numbers(11);
    auto a = apery_numbers(3);
    for (std::size_t n = 0; n < 11; ++n) {
        ck.require(e.at(n) == Rational(kZigzag[n]), "zigzag mismatch at n=" + std::to_string(n));
        ck.require(e2.at(n) == e.at(n), "zigzag generator routes disagree at n=" + std::to_string(n));
        ck.require(s.at(n) == Rational(kSnake[n]), "snake mismatch at n=" + std::to_string(n));
    }
    for (std::size_t n = 0; n < 3; ++n)
        ck.require(a.at(n) == Rational(kDiag[n]), "diagonal-sum mismatch at n=" + std::to_string(n));
    detail = ck.summary("11+11+3 terms exact, two independent zigzag routes agree");
}

// ---- 2: the three determinant fixtures ------------------------------------

void c2_hankel(Check& ck, std::string& detail) {
    auto e = euler_numbers(10);
    auto s = springer_numbers(10);
    Rational d1 = hankel_det(HankelMatrix::build(e, 0, 3));
    Rational d2 = hankel_det(HankelMatrix::build(s, 1, 3));
    auto q = resolve_sequence("euler-even-over-nfact-sq", 13);
    Rational d3 = hankel_det(HankelMatrix::build(q, 0, 7));

    ck.require(d1 == Rational(-1), "order-3 zigzag det is " + d1.to_string());
    ck.require(d2 == Rational(-96), "order-3 shifted snake det is " + d2.to_string());
    ck.require(d3.sign() < 0, "order-7 scaled det is not negative: " + d3.to_string());
    std::ostringstream os;
    os << "dets " << d1.to_string() << ", " << d2.to_string() << ", 7x7 ~ " << d3.to_double();
    detail = ck.summary(os.str());
}

// ---- 3: closed-form coefficient recovery ----------------------------------

void c3_extraction(Check& ck, std::string& detail) {
    const std::size_t depth = 6;
    for (const auto& fam : cf_families()) {
        auto seq = resolve_sequence(fam.target, 2 * depth + 2);
        RatSeries f(seq.terms);
        if (!fam.jacobi) {
            SFraction got = sfrac_extract(f, depth);
            SFraction want = family_sfrac(fam, depth);
            ck.require(got.alphas == want.alphas, fam.name + ": level coefficients differ");
        } else {
            JFraction got = jfrac_extract(f, depth);
            JFraction want = family_jfrac(fam, depth);
            ck.require(got.alpha0 == Rational(1), fam.name + ": leading coefficient differs");
            ck.require(got.gammas == want.gammas, fam.name + ": diagonal coefficients differ");
            ck.require(got.betas == want.betas, fam.name + ": off-diagonal coefficients differ");
        }
    }

    // polynomial level coefficients n(x+n-1), recovered in the polynomial ring
    auto polys = secant_power_polys(8);
    auto got = sfrac_extract_coeffs<RatPolynomial>(polys.terms, 5);
    auto want = secant_power_alphas(5);
    ck.require(got == want, "polynomial level coefficients differ");
    detail = ck.summary(std::to_string(cf_families().size()) +
                        " closed-form families to depth 6, polynomial family to depth 5");
}

// ---- 4: contraction both ways ---------------------------------------------

void c4_contraction(Check& ck, std::string& detail) {
    const CFFamily* sfam = find_cf_family("euler-shifted-tilde");
    const CFFamily* jfam = find_cf_family("euler-shifted-tilde-j");
    ck.require(sfam && jfam, "registry families missing");
    if (sfam && jfam) {
        JFraction got = contract(family_sfrac(*sfam, 9));
        JFraction want = family_jfrac(*jfam, 4);
        ck.require(got.gammas == want.gammas, "contraction: diagonal coefficients differ");
        ck.require(got.betas == want.betas, "contraction: off-diagonal coefficients differ");
    }

    const CFFamily* efam = find_cf_family("euler-shifted");
    ck.require(efam != nullptr, "shifted zigzag family missing");
    if (efam) {
        InverseContraction inv = expand_to_sfrac(family_jfrac(*efam, 3));
        ck.require(inv.obstruction.has_value() && *inv.obstruction == 6,
                   "inverse contraction: obstruction not at coefficient 6");
        ck.require(inv.sfrac.alphas.size() == 5 && inv.sfrac.alphas[4].is_zero(),
                   "inverse contraction: solved prefix wrong");
    }
    detail = ck.summary("9 levels contract to the 4-level diagonal form; "
                        "inverse contraction stops at coefficient 6");
}

// ---- 5: signed expansions -------------------------------------------------

void c5_signed(Check& ck, std::string& detail) {
    for (const char* name : {"springer-signed", "euler-signed"}) {
        const CFFamily* fam = find_cf_family(name);
        ck.require(fam != nullptr, std::string(name) + " family missing");
        if (!fam) continue;
        JFraction jf = family_jfrac(*fam, 6);
        auto got = jfrac_expand(jf, 13);
        auto want = resolve_sequence(fam->target, 13);
        for (std::size_t n = 0; n < 13; ++n)
            ck.require(got[n] == want.at(n),
                       std::string(name) + ": expansion differs at n=" + std::to_string(n));

        // the diagonal-shift step self-verifies its series identity and a
        // +1/-1 excursion has to come back to where it started
        JFraction up = jfrac_binomial_shift(jf, Rational(1), 13);
        JFraction back = jfrac_binomial_shift(up, Rational(-1), 13);
        ck.require(back.gammas == jf.gammas && back.betas == jf.betas,
                   std::string(name) + ": shift round-trip differs");
    }
    detail = ck.summary("both signed families match through n=12; diagonal shift round-trips");
}

// ---- 6: brute-force enumeration -------------------------------------------

void c6_enumeration(Check& ck, unsigned jobs, std::string& detail) {
    auto e = euler_numbers(11);
    for (std::size_t n = 0; n <= 10; ++n)
        ck.require(Rational(alt_perm_count(n)) == e.at(n),
                   "alternating count differs at n=" + std::to_string(n));

    auto s = springer_numbers(9);
    for (std::size_t n = 0; n <= 8; ++n)
        ck.require(Rational(snake_count(n, jobs)) == s.at(n),
                   "snake count differs at n=" + std::to_string(n));

    auto polys = secant_power_polys(6);
    for (std::size_t n = 0; n <= 10; ++n) {
        RatPolynomial got = alt_records_poly(n);
        RatPolynomial want = (n % 2 == 0)
                                 ? polys.at(n / 2)
                                 : RatPolynomial::x() * polys.at((n - 1) / 2).shift_argument(Rational(1));
        ck.require(got == want, "record distribution differs at n=" + std::to_string(n));
    }
    detail = ck.summary("counts to n=10, snakes to n=8, record polynomials to n=10");
}

// ---- 7: quadrature of every registered representation ---------------------

void c7_quadrature(Check& ck, std::string& detail) {
    const double tol = 1e-10;
    std::size_t ran = 0;
    double worst = 0;
    for (const auto& d : density_specs()) {
        // the full-line kernel for the shifted zigzag numbers is only
        // absolutely convergent from n = 1 on
        std::size_t lo = (d.name == "euler-esinh") ? 1 : 0;
        std::size_t hi = std::min<std::size_t>(8, d.max_n);
        for (std::size_t n = lo; n <= hi; ++n) {
            auto r = moment_integral(d, n, tol);
            ck.require(r.pass, d.name + " n=" + std::to_string(n) + " rel err " +
                                   std::to_string(r.rel_err));
            worst = std::max(worst, r.rel_err);
            ++ran;
        }
    }
    for (long x = 1; x <= 3; ++x) {
        for (std::size_t n = 0; n <= 8; ++n) {
            auto r = secpow_gamma_moment(n, Rational(x), tol);
            ck.require(r.pass, "power-polynomial x=" + std::to_string(x) + " n=" +
                                   std::to_string(n) + " rel err " + std::to_string(r.rel_err));
            worst = std::max(worst, r.rel_err);
            ++ran;
        }
    }
    std::ostringstream os;
    os << ran << " moments within 1e-10 (worst rel err " << worst << ")";
    detail = ck.summary(os.str());
}

// ---- 8: series identities -------------------------------------------------

void c8_identities(Check& ck, std::string& detail) {
    const double tol = 1e-9;
    for (std::size_t n = 0; n <= 5; ++n) {
        auto r1 = lerch_even(n, tol);
        ck.require(r1.pass, "even identity n=" + std::to_string(n));
        auto r2 = lerch_odd(n, tol);
        ck.require(r2.pass, "odd identity n=" + std::to_string(n));
        auto r4 = springer_lerch(n, tol);
        ck.require(r4.pass, "snake identity n=" + std::to_string(n));
    }
    for (std::size_t n = 1; n <= 5; ++n) {
        auto r3 = zeta_quarters(n, tol);
        ck.require(r3.pass, "quarter-zeta identity n=" + std::to_string(n));
    }
    for (std::size_t n = 1; n <= 5; ++n) {
        auto pe = partial_frac_euler(n, 100000);
        ck.require(pe.within, "pole sum (zigzag) outside tail bound at n=" + std::to_string(n));
        auto ps = partial_frac_springer(n, 100000);
        ck.require(ps.within, "pole sum (snake) outside tail bound at n=" + std::to_string(n));
    }
    detail = ck.summary("23 transcendent identities at 1e-9; pole sums inside tail bounds");
}

// ---- 9: growth formulas ---------------------------------------------------

void c9_asymptotics(Check& ck, std::string& detail) {
    std::ostringstream os;
    for (const char* family : {"euler", "springer"}) {
        auto recs = asymptotic_check(family, 8, 14);
        double at10 = -1;
        for (const auto& r : recs)
            if (r.n == 10) at10 = r.rel_err;
        ck.require(at10 >= 0 && at10 < 1e-3,
                   std::string(family) + ": rel err at n=10 is " + std::to_string(at10));
        for (std::size_t i = 0; i + 1 < recs.size(); ++i) {
            double ratio = recs[i + 1].rel_err / recs[i].rel_err;
            ck.require(ratio > 0.25 && ratio < 0.42,
                       std::string(family) + ": error ratio " + std::to_string(ratio) +
                           " at n=" + std::to_string(recs[i].n) + " not ~1/3");
        }
        os << family << " n=10 err " << at10 << "  ";
    }
    detail = ck.summary(os.str() + "error shrinks ~3x per step over 8..14");
}

// ---- 10: the log-convexity scan -------------------------------------------

void c10_scan(Check& ck, unsigned jobs, std::string& detail) {
    auto rep = scan_logconvexity(120, 120, 120, jobs);
    ck.require(rep.violations == 0, std::to_string(rep.violations) + " violations");
    ck.require(!rep.first_violation.has_value(), "unexpected witness triple");
    std::ostringstream os;
    os << rep.checked << " triples strict in " << rep.seconds << "s";
    detail = ck.summary(os.str());
}

// ---- 11: the positivity matrix --------------------------------------------

void c11_positivity(Check& ck, std::string& detail) {
    // moment sequences with a measure on the positive half line: positive
    // definite at shifts 0 and 1
    static const char* kStieltjes[] = {"secant", "tangent", "tangent-tilde",
                                       "springer-even", "springer-odd", "apery",
                                       "central-binomial", "euler-even-over-nfact"};
    for (const char* name : kStieltjes) {
        for (std::size_t shift : {0u, 1u}) {
            auto rep = psd_leading_minors(resolve_sequence(name, 24), shift, 5);
            ck.require(rep.status == MinorStatus::AllPositive,
                       std::string(name) + " shift " + std::to_string(shift) + ": " +
                           to_string(rep.status));
        }
    }

    // full-line measures: positive definite at shift 0 only
    static const char* kHamburger[] = {"euler-shifted", "springer", "euler-shifted-tilde"};
    for (const char* name : kHamburger) {
        auto rep = psd_leading_minors(resolve_sequence(name, 24), 0, 5);
        ck.require(rep.status == MinorStatus::AllPositive,
                   std::string(name) + " shift 0: " + std::string(to_string(rep.status)));
    }

    // required failures, with the order of the first negative minor pinned
    struct Neg { const char* name; std::size_t shift; std::size_t order; };
    static const Neg kNegative[] = {
        {"secant-tilde", 0, 2},  {"euler-tilde", 0, 2}, {"euler-tilde", 2, 2},
        {"euler-tilde", 4, 2},   {"euler-tilde", 6, 2}, {"euler-tilde", 8, 2},
        {"euler", 0, 3},         {"springer", 1, 3},
    };
    for (const auto& neg : kNegative) {
        auto rep = psd_leading_minors(resolve_sequence(neg.name, 24), neg.shift, 5);
        bool ok = rep.status == MinorStatus::Violation && rep.witness &&
                  rep.witness->rows.size() == neg.order;
        ck.require(ok, std::string(neg.name) + " shift " + std::to_string(neg.shift) +
                           ": expected first negative minor at order " +
                           std::to_string(neg.order));
    }
    detail = ck.summary("19 positive-definite checks, 8 pinned violations");
}

// ---- 12: round trips ------------------------------------------------------

void c12_roundtrips(Check& ck, std::string& detail) {
    // registry families
    for (const auto& fam : cf_families()) {
        if (!fam.jacobi) {
            SFraction sf = family_sfrac(fam, 8);
            auto coeffs = sfrac_expand(sf, 9);
            SFraction back = sfrac_extract(RatSeries(coeffs), 8);
            ck.require(back.alphas == sf.alphas, fam.name + ": extract(expand) differs");

            JFraction jf = contract(sf);
            ck.require(jfrac_expand(jf, 9) == coeffs, fam.name + ": contraction changes series");

            JFraction aj = sfrac_to_aerated_jfrac(sf);
            auto ae = jfrac_expand(aj, 17);
            bool ok = true;
            for (std::size_t i = 0; i < 17; ++i) {
                if (i % 2 == 0) ok = ok && ae[i] == coeffs[i / 2];
                else ok = ok && ae[i].is_zero();
            }
            ck.require(ok, fam.name + ": aerated expansion wrong");
        } else {
            JFraction jf = family_jfrac(fam, 6);
            auto coeffs = jfrac_expand(jf, 14);
            JFraction back = jfrac_extract(RatSeries(coeffs), 6);
            ck.require(back.gammas == jf.gammas && back.betas == jf.betas,
                       fam.name + ": extract(expand) differs");
        }
    }

    // randomized fractions, nonnegative level coefficients (an occasional
    // zero cuts the fraction short; identities then hold at series level)
    std::mt19937 rng(20240817u);
    std::uniform_int_distribution<int> num(1, 12), den(1, 6), m_dist(1, 8);
    std::uniform_int_distribution<int> coin(0, 7);
    for (int t = 0; t < 200; ++t) {
        std::size_t m = static_cast<std::size_t>(m_dist(rng));
        SFraction sf;
        bool zeroed = false;
        for (std::size_t i = 0; i < m; ++i)
            sf.alphas.emplace_back(num(rng), den(rng));
        if (coin(rng) == 0) {
            std::size_t pos = static_cast<std::size_t>(rng() % m);
            sf.alphas[pos] = Rational(0);
            zeroed = true;
        }

        auto coeffs = sfrac_expand(sf, m + 1);
        SFraction ext = sfrac_extract(RatSeries(coeffs), m);
        ck.require(sfrac_expand(ext, m + 1) == coeffs,
                   "random " + std::to_string(t) + ": extract(expand) changes series");
        if (!zeroed)
            ck.require(ext.alphas == sf.alphas,
                       "random " + std::to_string(t) + ": coefficients not recovered");

        JFraction jf = contract(sf);
        ck.require(jfrac_expand(jf, m + 1) == coeffs,
                   "random " + std::to_string(t) + ": contraction changes series");

        InverseContraction inv = expand_to_sfrac(jf);
        if (!inv.obstruction)
            ck.require(sfrac_expand(inv.sfrac, m + 1) == coeffs,
                       "random " + std::to_string(t) + ": inverse contraction changes series");
        if (!zeroed && m % 2 == 1)
            ck.require(!inv.obstruction && inv.sfrac.alphas == sf.alphas,
                       "random " + std::to_string(t) + ": inverse contraction not exact");

        JFraction aj = sfrac_to_aerated_jfrac(sf);
        auto ae = jfrac_expand(aj, 2 * m + 1);
        bool ok = true;
        for (std::size_t i = 0; i < ae.size(); ++i) {
            if (i % 2 == 0) ok = ok && ae[i] == coeffs[i / 2];
            else ok = ok && ae[i].is_zero();
        }
        ck.require(ok, "random " + std::to_string(t) + ": aerated expansion wrong");

        if (!zeroed) {
            JFraction jext = jfrac_extract(RatSeries(jfrac_expand(jf, 2 * jf.betas.size() + 2)),
                                           jf.betas.size());
            ck.require(jext.gammas == jf.gammas && jext.betas == jf.betas,
                       "random " + std::to_string(t) + ": diagonal form not recovered");
        }
    }
    detail = ck.summary("registry families + 200 randomized fractions");
}

} // namespace

std::vector<CriterionResult> run_acceptance(unsigned jobs) {
    if (jobs == 0) jobs = 1;
    struct Item {
        int number;
        const char* name;
        std::function<void(Check&, std::string&)> fn;
    };
    const Item items[] = {
        {1, "sequence-fidelity", [](Check& c, std::string& d) { c1_sequences(c, d); }},
        {2, "hankel-fixtures", [](Check& c, std::string& d) { c2_hankel(c, d); }},
        {3, "cf-extraction", [](Check& c, std::string& d) { c3_extraction(c, d); }},
        {4, "contraction", [](Check& c, std::string& d) { c4_contraction(c, d); }},
        {5, "signed-expansions", [](Check& c, std::string& d) { c5_signed(c, d); }},
        {6, "enumeration", [jobs](Check& c, std::string& d) { c6_enumeration(c, jobs, d); }},
        {7, "quadrature", [](Check& c, std::string& d) { c7_quadrature(c, d); }},
        {8, "series-identities", [](Check& c, std::string& d) { c8_identities(c, d); }},
        {9, "asymptotics", [](Check& c, std::string& d) { c9_asymptotics(c, d); }},
        {10, "logconvexity-scan", [jobs](Check& c, std::string& d) { c10_scan(c, jobs, d); }},
        {11, "positivity-matrix", [](Check& c, std::string& d) { c11_positivity(c, d); }},
        {12, "round-trips", [](Check& c, std::string& d) { c12_roundtrips(c, d); }},
    };

    std::vector<CriterionResult> out;
    for (const auto& item : items) {
        CriterionResult r;
        r.number = item.number;
        r.name = item.name;
        auto t0 = std::chrono::steady_clock::now();
        Check ck;
        try {
            item.fn(ck, r.detail);
        } catch (const std::exception& e) {
            ck.require(false, std::string("exception: ") + e.what());
            r.detail = ck.summary("");
        }
        r.pass = ck.failures.empty();
        if (!r.pass) r.detail = ck.summary("");
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(r));
    }
    return out;
}

std::string format_criterion_line(const CriterionResult& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s %2d %-18s %8.3fs  ", r.pass ? "PASS" : "FAIL", r.number,
                  r.name.c_str(), r.seconds);
    return std::string(buf) + r.detail;
}

} // namespace momentkit
