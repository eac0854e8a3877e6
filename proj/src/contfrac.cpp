#include "momentkit/contfrac.hpp"

#include <algorithm>

namespace momentkit {

std::vector<Rational> sfrac_expand(const SFraction& sf, std::size_t count) {
    return sfrac_expand_coeffs<Rational>(sf.alphas, count);
}

std::vector<Rational> jfrac_expand(const JFraction& jf, std::size_t count) {
    return jfrac_expand_coeffs<Rational>(jf.alpha0, jf.gammas, jf.betas, count);
}

SFraction sfrac_extract(const RatSeries& f, std::size_t depth) {
    SFraction sf;
    sf.alphas = sfrac_extract_coeffs<Rational>(f.coeffs(), depth);
    return sf;
}

JFraction jfrac_extract(const RatSeries& f, std::size_t k) {
    const auto& a = f.coeffs();
    const std::size_t need = 2 * k + 2;
    if (a.size() < need) throw InsufficientTerms("jfrac_extract", a.size(), need);
    if (a[0].is_zero()) throw SingularHankel(1);

    JFraction jf;
    jf.alpha0 = a[0];
    jf.gammas.push_back(a[1] / a[0]);

    // sig holds one row of the quotient-difference table; row l is defined
    // for column indices l .. 2k+1-l.
    const std::size_t width = 2 * k + 2;
    std::vector<Rational> prev2(width), prev(a.begin(), a.begin() + width);
    for (std::size_t l = 1; l <= k; ++l) {
        std::vector<Rational> cur(width);
        for (std::size_t m = l; m + l <= 2 * k + 1; ++m) {
            cur[m] = prev[m + 1] - jf.gammas[l - 1] * prev[m];
            if (l >= 2) cur[m] -= jf.betas[l - 2] * prev2[m];
        }
        if (cur[l].is_zero()) throw SingularHankel(l + 1);
        jf.betas.push_back(cur[l] / prev[l - 1]);
        jf.gammas.push_back(cur[l + 1] / cur[l] - prev[l] / prev[l - 1]);
        prev2 = std::move(prev);
        prev = std::move(cur);
    }
    return jf;
}

JFraction contract(const SFraction& sf) {
    const auto& al = sf.alphas;
    const std::size_t m = al.size();
    JFraction jf;
    if (m == 0) return jf;
    jf.gammas.push_back(al[0]);
    for (std::size_t n = 1; 2 * n <= m; ++n) {
        jf.betas.push_back(al[2 * n - 2] * al[2 * n - 1]);
        Rational g = al[2 * n - 1];
        if (2 * n + 1 <= m) g += al[2 * n];
        jf.gammas.push_back(g);
    }
    return jf;
}

InverseContraction expand_to_sfrac(const JFraction& jf) {
    const std::size_t k = jf.betas.size();
    if (jf.gammas.size() != k + 1)
        throw DomainError("expand_to_sfrac: needs one more diagonal than off-diagonal coefficient");
    InverseContraction res;
    auto& al = res.sfrac.alphas;
    if (jf.gammas.empty()) return res;
    al.push_back(jf.gammas[0]);
    for (std::size_t n = 1; n <= k; ++n) {
        const Rational& odd = al.back();   // a_{2n-1}
        Rational even;                     // a_{2n}
        if (odd.is_zero()) {
            if (!jf.betas[n - 1].is_zero()) {
                res.obstruction = 2 * n;
                return res;
            }
            // 0/0: the product equation is vacuous, take 0
        } else {
            even = jf.betas[n - 1] / odd;
        }
        al.push_back(even);
        al.push_back(jf.gammas[n] - even);
    }
    return res;
}

JFraction jfrac_binomial_shift(const JFraction& jf, const Rational& c, std::size_t verify_count) {
    JFraction shifted = jf;
    for (auto& g : shifted.gammas) g += c;

    // The shift identity is exact only as deep as the finite fraction
    // determines the series.
    std::size_t vc = std::min(verify_count, 2 * jf.betas.size() + 2);
    if (vc > 0) {
        std::vector<Rational> base = jfrac_expand(jf, vc);
        std::vector<Rational> got = jfrac_expand(shifted, vc);
        for (std::size_t n = 0; n < vc; ++n) {
            Rational want;
            for (std::size_t j = 0; j <= n; ++j)
                want += Rational(binomial(n, j)) * c.pow(static_cast<long>(n - j)) * base[j];
            if (got[n] != want)
                throw VerificationFailure("diagonal shift failed series verification");
        }
    }
    return shifted;
}

JFraction sfrac_to_aerated_jfrac(const SFraction& sf) {
    JFraction jf;
    jf.betas = sf.alphas;
    jf.gammas.assign(sf.alphas.size() + 1, Rational(0));
    return jf;
}

namespace {

Rational rat(long n) { return Rational(n); }

std::vector<CFFamily> build_families() {
    std::vector<CFFamily> fams;

    CFFamily f;
    f.name = "secant";
    f.jacobi = false;
    f.target = "secant";
    f.alpha = [](std::size_t n) { long v = static_cast<long>(n); return rat(v * v); };
    f.note = "level coefficients n^2";
    fams.push_back(f);

    f = CFFamily();
    f.name = "tangent";
    f.jacobi = false;
    f.target = "tangent";
    f.alpha = [](std::size_t n) { long v = static_cast<long>(n); return rat(v * (v + 1)); };
    f.note = "level coefficients n(n+1)";
    fams.push_back(f);

    f = CFFamily();
    f.name = "lambert";
    f.jacobi = false;
    f.target = "tangent-tilde";
    f.alpha = [](std::size_t n) {
        long v = static_cast<long>(n);
        return Rational(1, 4 * v * v - 1);
    };
    f.note = "level coefficients 1/(4n^2-1)";
    fams.push_back(f);

    f = CFFamily();
    f.name = "springer-even";
    f.jacobi = false;
    f.target = "springer-even";
    f.alpha = [](std::size_t n) {
        long k = static_cast<long>((n + 1) / 2);
        if (n % 2 == 1) return rat((4 * k - 3) * (4 * k - 1));
        return rat((4 * k) * (4 * k));
    };
    f.note = "alternating (4k-3)(4k-1) and (4k)^2";
    fams.push_back(f);

    f = CFFamily();
    f.name = "euler-shifted-tilde";
    f.jacobi = false;
    f.target = "euler-shifted-tilde";
    f.alpha = [](std::size_t n) {
        if (n == 1) return Rational(1, 2);
        long k = static_cast<long>(n / 2);
        Rational v(1, 4 * k + 2);
        bool negative = (n % 2 == 0) ? (k % 2 == 0) : (k % 2 == 1);
        return negative ? -v : v;
    };
    f.note = "paired magnitudes 1/(4k+2) with period-4 signs";
    fams.push_back(f);

    f = CFFamily();
    f.name = "euler-shifted";
    f.jacobi = true;
    f.target = "euler-shifted";
    f.gamma = [](std::size_t n) { return rat(static_cast<long>(n) + 1); };
    f.beta = [](std::size_t n) { long v = static_cast<long>(n); return Rational(v * (v + 1), 2); };
    f.note = "diagonal n+1, off-diagonal n(n+1)/2";
    fams.push_back(f);

    f = CFFamily();
    f.name = "euler-shifted-tilde-j";
    f.jacobi = true;
    f.target = "euler-shifted-tilde";
    f.gamma = [](std::size_t n) { return n == 0 ? Rational(1, 2) : Rational(0); };
    f.beta = [](std::size_t n) {
        long v = static_cast<long>(n);
        return Rational(1, 16 * v * v - 4);
    };
    f.note = "diagonal 1/2 then zeros, off-diagonal 1/(16n^2-4)";
    fams.push_back(f);

    f = CFFamily();
    f.name = "springer";
    f.jacobi = true;
    f.target = "springer";
    f.gamma = [](std::size_t n) { return rat(2 * static_cast<long>(n) + 1); };
    f.beta = [](std::size_t n) { long v = static_cast<long>(n); return rat(2 * v * v); };
    f.note = "diagonal 2n+1, off-diagonal 2n^2";
    fams.push_back(f);

    f = CFFamily();
    f.name = "springer-odd";
    f.jacobi = true;
    f.target = "springer-odd";
    f.gamma = [](std::size_t n) {
        long v = static_cast<long>(n);
        return rat(32 * v * v + 32 * v + 11);
    };
    f.beta = [](std::size_t n) {
        long v = static_cast<long>(n);
        return rat((4 * v - 1) * (4 * v) * (4 * v) * (4 * v + 1));
    };
    f.note = "diagonal 32n^2+32n+11, off-diagonal (4n-1)(4n)^2(4n+1)";
    fams.push_back(f);

    f = CFFamily();
    f.name = "springer-signed";
    f.jacobi = true;
    f.target = "springer-signed";
    f.gamma = [](std::size_t) { return Rational(1); };
    f.beta = [](std::size_t n) { long v = static_cast<long>(n); return rat(-4 * v * v); };
    f.note = "diagonal 1, off-diagonal -4n^2";
    fams.push_back(f);

    f = CFFamily();
    f.name = "euler-signed";
    f.jacobi = true;
    f.target = "euler-shifted-signed";
    f.gamma = [](std::size_t n) { return n % 2 == 0 ? Rational(1) : Rational(0); };
    f.beta = [](std::size_t n) {
        long k = static_cast<long>((n + 1) / 2);
        if (n % 2 == 1) return rat(-k * (4 * k - 1));
        return rat(-k * (4 * k + 1));
    };
    f.note = "alternating diagonal 1,0; off-diagonal -k(4k-1), -k(4k+1)";
    fams.push_back(f);

    return fams;
}

} // namespace

const std::vector<CFFamily>& cf_families() {
    static const std::vector<CFFamily> fams = build_families();
    return fams;
}

const CFFamily* find_cf_family(const std::string& name) {
    for (const auto& f : cf_families())
        if (f.name == name) return &f;
    return nullptr;
}

SFraction family_sfrac(const CFFamily& fam, std::size_t depth) {
    if (fam.jacobi) throw DomainError("family_sfrac: " + fam.name + " has Jacobi-type coefficients");
    SFraction sf;
    for (std::size_t n = 1; n <= depth; ++n) sf.alphas.push_back(fam.alpha(n));
    return sf;
}

JFraction family_jfrac(const CFFamily& fam, std::size_t levels) {
    if (!fam.jacobi) throw DomainError("family_jfrac: " + fam.name + " has Stieltjes-type coefficients");
    JFraction jf;
    for (std::size_t n = 0; n <= levels; ++n) jf.gammas.push_back(fam.gamma(n));
    for (std::size_t n = 1; n <= levels; ++n) jf.betas.push_back(fam.beta(n));
    return jf;
}

std::vector<RatPolynomial> secant_power_alphas(std::size_t depth) {
    std::vector<RatPolynomial> alphas;
    for (std::size_t i = 1; i <= depth; ++i) {
        long n = static_cast<long>(i);
        alphas.push_back(RatPolynomial(std::vector<Rational>{Rational(n * (n - 1)), Rational(n)}));
    }
    return alphas;
}

} // namespace momentkit
