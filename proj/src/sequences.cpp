#include "momentkit/sequences.hpp"

#include "momentkit/series.hpp"

namespace momentkit {

SequenceHandle euler_numbers(std::size_t count) {
    std::vector<Rational> a;
    a.reserve(count);
    std::vector<BigInt> e;
    if (count > 0)
        e.push_back(1);
    if (count > 1)
        e.push_back(1);
    for (std::size_t n = 1; e.size() < count; ++n) {
        BigInt s = 0;
        for (std::size_t k = 0; k <= n; ++k)
            s += binomial(n, k) * e[n - k] * e[k];
        e.push_back(s / 2);
    }
    for (const auto& z : e)
        a.emplace_back(z);
    return {"euler", "recurrence", std::move(a)};
}

SequenceHandle euler_numbers_from_series(std::size_t count) {
    if (count == 0)
        return {"euler", "series-extraction", {}};
    std::size_t N = count - 1;
    RatSeries cos = cos_series(N), sin = sin_series(N);
    RatSeries f = (one_series(N) + sin) * cos.reciprocal();
    std::vector<Rational> a(count);
    for (std::size_t n = 0; n < count; ++n)
        a[n] = f.coeff(n) * factorial(n);
    return {"euler", "series-extraction", std::move(a)};
}

SequenceHandle springer_numbers(std::size_t count) {
    if (count == 0)
        return {"springer", "series-extraction", {}};
    std::size_t N = count - 1;
    RatSeries f = (cos_series(N) - sin_series(N)).reciprocal();
    std::vector<Rational> a(count);
    for (std::size_t n = 0; n < count; ++n)
        a[n] = f.coeff(n) * factorial(n);
    return {"springer", "series-extraction", std::move(a)};
}

SequenceHandle apery_numbers(std::size_t count) {
    std::vector<Rational> a(count);
    for (std::size_t n = 0; n < count; ++n) {
        BigInt s = 0;
        for (std::size_t k = 0; k <= n; ++k) {
            BigInt b1 = binomial(n, k), b2 = binomial(n + k, k);
            s += b1 * b1 * b2 * b2;
        }
        a[n] = Rational(s);
    }
    return {"apery", "binomial-sum", std::move(a)};
}

SequenceHandle central_binomials(std::size_t count) {
    std::vector<Rational> a(count);
    for (std::size_t n = 0; n < count; ++n)
        a[n] = Rational(binomial(2 * n, n));
    return {"central-binomial", "binomial", std::move(a)};
}

SequenceHandle secant_numbers(std::size_t count) {
    auto s = subsequence(euler_numbers(2 * count), 0, 2);
    s.terms.resize(count);
    s.name = "secant";
    return s;
}

SequenceHandle tangent_numbers(std::size_t count) {
    auto s = subsequence(euler_numbers(2 * count + 1), 1, 2);
    s.terms.resize(count);
    s.name = "tangent";
    return s;
}

PolySequenceHandle secant_power_polys(std::size_t count) {
    std::vector<RatPolynomial> p;
    if (count == 0)
        return {"secpow", "recurrence", {}};
    auto e = euler_numbers(count >= 2 ? 2 * count : 2);
    p.push_back(RatPolynomial(Rational(1)));
    for (std::size_t n = 0; p.size() < count; ++n) {
        RatPolynomial acc;
        for (std::size_t k = 0; k <= n; ++k)
            acc += p[k] * RatPolynomial(Rational(binomial(2 * n + 1, 2 * k)) *
                                        e.at(2 * n - 2 * k + 1));
        p.push_back(RatPolynomial::x() * acc);
    }
    return {"secpow", "recurrence", std::move(p)};
}

SequenceHandle subsequence(const SequenceHandle& s, std::size_t start, std::size_t step) {
    if (step == 0)
        throw DomainError("subsequence step must be positive");
    std::vector<Rational> a;
    for (std::size_t i = start; i < s.terms.size(); i += step)
        a.push_back(s.terms[i]);
    return {s.name + "[" + std::to_string(start) + "::" + std::to_string(step) + "]",
            "subsequence(" + s.name + ": " + s.provenance + ")", std::move(a)};
}

const char* to_string(ScaleMode m) {
    switch (m) {
        case ScaleMode::DivFactorial: return "div-factorial";
        case ScaleMode::DivFactorialSquared: return "div-factorial-sq";
        case ScaleMode::MulFactorial: return "mul-factorial";
        case ScaleMode::DivDoubleFactorialIdx: return "div-double-index-factorial";
    }
    return "?";
}

SequenceHandle scale_seq(const SequenceHandle& s, ScaleMode mode) {
    std::vector<Rational> a(s.terms.size());
    for (std::size_t n = 0; n < a.size(); ++n) {
        Rational f = factorial(n);
        switch (mode) {
            case ScaleMode::DivFactorial: a[n] = s.terms[n] / f; break;
            case ScaleMode::DivFactorialSquared: a[n] = s.terms[n] / (f * f); break;
            case ScaleMode::MulFactorial: a[n] = s.terms[n] * f; break;
            case ScaleMode::DivDoubleFactorialIdx:
                a[n] = s.terms[n] / factorial(2 * n);
                break;
        }
    }
    return {s.name + "." + to_string(mode),
            "scale(" + s.name + ": " + s.provenance + ", " + to_string(mode) + ")", std::move(a)};
}

SequenceHandle binomial_transform(const SequenceHandle& s, const Rational& c) {
    std::vector<Rational> b(s.terms.size());
    for (std::size_t n = 0; n < b.size(); ++n) {
        Rational acc(0);
        // powers c^{n-k}, built from the top down
        Rational p(1);
        for (std::size_t k = n + 1; k-- > 0;) {
            acc += Rational(binomial(n, k)) * p * s.terms[k];
            p = p * c;
        }
        b[n] = acc;
    }
    return {s.name + ".binomial(" + c.to_string() + ")",
            "binomial-transform(" + s.name + ": " + s.provenance + ", c=" + c.to_string() + ")",
            std::move(b)};
}

SequenceHandle signed_variant(const SequenceHandle& s) {
    std::vector<Rational> a = s.terms;
    for (std::size_t n = 0; n < a.size(); ++n)
        if ((n * (n - 1) / 2) % 2 != 0)
            a[n] = -a[n];
    return {s.name + ".signed", "signed-variant(" + s.name + ": " + s.provenance + ")", std::move(a)};
}

SequenceHandle aerated(const SequenceHandle& s) {
    std::vector<Rational> a;
    if (!s.terms.empty()) {
        a.resize(2 * s.terms.size() - 1, Rational(0));
        for (std::size_t n = 0; n < s.terms.size(); ++n)
            a[2 * n] = s.terms[n];
    }
    return {s.name + ".aerated", "aerate(" + s.name + ": " + s.provenance + ")", std::move(a)};
}

bool integer_valued(const SequenceHandle& s) {
    for (const auto& t : s.terms)
        if (!t.is_integer())
            return false;
    return true;
}

SequenceHandle resolve_sequence(const std::string& name, std::size_t count) {
    auto renamed = [&](SequenceHandle h) {
        h.name = name;
        h.terms.resize(std::min<std::size_t>(h.terms.size(), count));
        return h;
    };
    if (name == "euler") return euler_numbers(count);
    if (name == "springer") return springer_numbers(count);
    if (name == "apery") return apery_numbers(count);
    if (name == "central-binomial") return central_binomials(count);
    if (name == "secant") return secant_numbers(count);
    if (name == "tangent") return tangent_numbers(count);
    if (name == "euler-shifted")
        return renamed(subsequence(euler_numbers(count + 1), 1, 1));
    if (name == "euler-tilde")
        return renamed(scale_seq(euler_numbers(count), ScaleMode::DivFactorial));
    if (name == "euler-shifted-tilde")
        return renamed(subsequence(scale_seq(euler_numbers(count + 1),
                                             ScaleMode::DivFactorial), 1, 1));
    if (name == "secant-tilde")
        return renamed(scale_seq(secant_numbers(count), ScaleMode::DivDoubleFactorialIdx));
    if (name == "tangent-tilde") {
        auto t = tangent_numbers(count);
        for (std::size_t n = 0; n < t.terms.size(); ++n)
            t.terms[n] /= factorial(2 * n + 1);
        t.provenance = "scale(" + t.provenance + ", div-(2n+1)!)";
        return renamed(std::move(t));
    }
    if (name == "euler-even-over-nfact")
        return renamed(scale_seq(secant_numbers(count), ScaleMode::DivFactorial));
    if (name == "euler-even-over-nfact-sq")
        return renamed(scale_seq(secant_numbers(count), ScaleMode::DivFactorialSquared));
    if (name == "springer-even")
        return renamed(subsequence(springer_numbers(2 * count), 0, 2));
    if (name == "springer-odd")
        return renamed(subsequence(springer_numbers(2 * count + 1), 1, 2));
    if (name == "springer-tilde")
        return renamed(scale_seq(springer_numbers(count), ScaleMode::DivFactorial));
    if (name == "springer-signed")
        return renamed(signed_variant(springer_numbers(count)));
    if (name == "euler-shifted-signed")
        return renamed(signed_variant(subsequence(euler_numbers(count + 1), 1, 1)));
    throw DomainError("unknown sequence name: " + name);
}

std::vector<std::string> known_sequences() {
    return {"euler", "springer", "apery", "central-binomial", "secant", "tangent",
            "euler-shifted", "euler-tilde", "euler-shifted-tilde", "secant-tilde",
            "tangent-tilde", "euler-even-over-nfact", "euler-even-over-nfact-sq",
            "springer-even", "springer-odd", "springer-tilde", "springer-signed",
            "euler-shifted-signed"};
}

} // namespace momentkit
