// Command-line front end: every subcommand prints one report (JSON by
// default) wrapping the exact or numerical results of the corresponding
// library call. Exit code 0 = pass, 1 = a mathematical violation or negative
// finding, 2 = usage or input error.

#include <algorithm>
#include <cstdio>
#include <ctime>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "momentkit/acceptance.hpp"
#include "momentkit/analytic.hpp"
#include "momentkit/combinatorics.hpp"
#include "momentkit/contfrac.hpp"
#include "momentkit/hankel.hpp"
#include "momentkit/scan.hpp"
#include "momentkit/sequences.hpp"
#include "momentkit/version.hpp"

using json = nlohmann::ordered_json;
using namespace momentkit;

namespace {

// floats are serialized with 17 significant digits so reports reproduce
// bit-identically; exact values always travel as "p/q" strings
std::string fmt17(double v) {
    char b[40];
    std::snprintf(b, sizeof b, "%.17g", v);
    return b;
}

std::string iso_now() {
    std::time_t t = std::time(nullptr);
    char b[32];
    std::strftime(b, sizeof b, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return b;
}

json rat_array(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& r : v) a.push_back(r.to_string());
    return a;
}

json index_array(const std::vector<std::size_t>& v) {
    json a = json::array();
    for (auto x : v) a.push_back(x);
    return a;
}

// ascending coefficients; the zero polynomial prints as ["0"]
json poly_json(const RatPolynomial& p) {
    json a = json::array();
    if (p.is_zero()) {
        a.push_back("0");
        return a;
    }
    for (const auto& c : p.coeffs()) a.push_back(c.to_string());
    return a;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& s) {
    auto to_num = [&](const std::string& part) {
        try {
            std::size_t used = 0;
            unsigned long v = std::stoul(part, &used);
            if (used != part.size()) throw DomainError("bad range: " + s);
            return static_cast<std::size_t>(v);
        } catch (const std::invalid_argument&) {
            throw DomainError("bad range: " + s);
        } catch (const std::out_of_range&) {
            throw DomainError("bad range: " + s);
        }
    };
    auto pos = s.find("..");
    if (pos == std::string::npos) {
        std::size_t v = to_num(s);
        return {v, v};
    }
    std::size_t lo = to_num(s.substr(0, pos));
    std::size_t hi = to_num(s.substr(pos + 2));
    if (hi < lo) throw DomainError("empty range: " + s);
    return {lo, hi};
}

unsigned parse_jobs(const std::string& s) {
    if (s == "auto") {
        unsigned h = std::thread::hardware_concurrency();
        return h ? h : 1;
    }
    try {
        int v = std::stoi(s);
        if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw DomainError("bad --jobs value: " + s);
}

bool is_scalar(const json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_str(const json& j) {
    return j.is_string() ? j.get<std::string>() : j.dump();
}

bool all_scalars(const json& arr) {
    for (const auto& v : arr)
        if (!is_scalar(v)) return false;
    return true;
}

void text_render(const json& j, std::ostream& os, int indent) {
    std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (is_scalar(v)) {
                os << pad << k << ": " << scalar_str(v) << "\n";
            } else if (v.is_array() && all_scalars(v)) {
                os << pad << k << ":";
                for (const auto& e : v) os << " " << scalar_str(e);
                os << "\n";
            } else {
                os << pad << k << ":\n";
                text_render(v, os, indent + 2);
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_object()) {
                os << pad;
                bool first = true;
                for (const auto& [k, e] : v.items()) {
                    if (!first) os << "  ";
                    first = false;
                    os << k << "=" << (is_scalar(e) ? scalar_str(e) : e.dump());
                }
                os << "\n";
            } else if (is_scalar(v)) {
                os << pad << scalar_str(v) << "\n";
            } else {
                text_render(v, os, indent + 2);
            }
        }
    } else {
        os << pad << scalar_str(j) << "\n";
    }
}

std::string csv_cell(const json& v) {
    std::string s = is_scalar(v) ? scalar_str(v) : v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void csv_table(const json& arr, std::ostream& os) {
    std::vector<std::string> cols;
    for (const auto& row : arr)
        for (const auto& [k, v] : row.items()) {
            (void)v;
            if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
        }
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
    os << "\n";
    for (const auto& row : arr) {
        for (std::size_t i = 0; i < cols.size(); ++i) {
            os << (i ? "," : "");
            if (row.contains(cols[i])) os << csv_cell(row[cols[i]]);
        }
        os << "\n";
    }
}

void csv_render(const json& res, std::ostream& os) {
    if (res.is_array() && !res.empty() && res[0].is_object()) {
        csv_table(res, os);
        return;
    }
    for (const auto& [k, v] : res.items()) {
        if (v.is_array() && !v.empty() && v[0].is_object()) {
            os << "# " << k << "\n";
            csv_table(v, os);
        } else if (v.is_array()) {
            std::string joined;
            for (const auto& e : v) {
                if (!joined.empty()) joined += " ";
                joined += is_scalar(e) ? scalar_str(e) : e.dump();
            }
            os << k << "," << csv_cell(json(joined)) << "\n";
        } else {
            os << k << "," << csv_cell(v) << "\n";
        }
    }
}

struct Ctx {
    std::string format = "json";
    unsigned jobs = 1;
};

int emit_report(const Ctx& ctx, const std::string& command, const json& params,
                const json& results, const std::string& status) {
    if (ctx.format == "json") {
        json rep;
        rep["version"] = MOMENTKIT_VERSION;
        rep["command"] = command;
        rep["parameters"] = params;
        rep["timestamp"] = iso_now();
        rep["status"] = status;
        rep["results"] = results;
        std::cout << rep.dump(2) << "\n";
    } else if (ctx.format == "text") {
        std::cout << "command: " << command << "\n";
        std::cout << "status: " << status << "\n";
        text_render(results, std::cout, 0);
    } else {
        std::cout << "# command: " << command << "\n";
        std::cout << "# status: " << status << "\n";
        csv_render(results, std::cout);
    }
    return status == "pass" ? 0 : 1;
}

json vrec_json(const VerificationRecord& r, const std::string& target) {
    json j;
    j["what"] = r.what;
    j["n"] = r.n;
    j["target"] = target;
    j["computed"] = fmt17(r.computed);
    j["rel_err"] = fmt17(r.rel_err);
    j["tol"] = fmt17(r.tol);
    j["pass"] = r.pass;
    return j;
}

json minor_report_json(const MinorReport& rep) {
    json r;
    r["family"] = rep.family;
    r["shift"] = rep.shift;
    r["window"] = rep.window;
    r["max_order"] = rep.max_order;
    r["status"] = to_string(rep.status);
    r["minors_checked"] = rep.minors_checked;
    r["zero_minors"] = rep.zero_minors;
    if (!rep.leading_minors.empty()) r["leading_minors"] = rat_array(rep.leading_minors);
    if (rep.witness) {
        json w;
        w["rows"] = index_array(rep.witness->rows);
        w["cols"] = index_array(rep.witness->cols);
        w["det"] = rep.witness->det.to_string();
        w["required_strict"] = rep.witness->strictness;
        r["witness"] = std::move(w);
    }
    return r;
}

json jfrac_json(const JFraction& jf) {
    json j;
    j["alpha0"] = jf.alpha0.to_string();
    j["gammas"] = rat_array(jf.gammas);
    j["betas"] = rat_array(jf.betas);
    return j;
}

// ---- subcommand bodies ----------------------------------------------------

int run_gen(const Ctx& ctx, bool list, const std::string& seq, std::size_t count) {
    if (list) {
        json res;
        res["sequences"] = known_sequences();
        return emit_report(ctx, "gen", json{{"list", true}}, res, "pass");
    }
    auto s = resolve_sequence(seq, count);
    json res;
    res["sequence"] = s.name;
    res["provenance"] = s.provenance;
    res["integer_valued"] = integer_valued(s);
    res["terms"] = rat_array(s.terms);
    return emit_report(ctx, "gen", json{{"seq", seq}, {"count", count}}, res, "pass");
}

int run_hankel(const Ctx& ctx, const std::string& seq, std::size_t shift, std::size_t size,
               std::size_t nmax, std::size_t window, std::size_t max_order, bool det,
               bool total_pos, bool toeplitz, bool shape, std::size_t count) {
    int modes = int(det) + int(nmax > 0) + int(total_pos) + int(toeplitz) + int(shape);
    if (modes != 1)
        throw DomainError("hankel: pick exactly one of --det, --leading-minors, "
                          "--total-positivity, --toeplitz, --log-shape");
    json params{{"seq", seq}, {"shift", shift}};
    json res;
    std::string status = "pass";
    if (det) {
        if (size == 0) throw DomainError("hankel --det: needs --size");
        auto s = resolve_sequence(seq, shift + 2 * size - 1);
        Rational d = hankel_det(HankelMatrix::build(s, shift, size));
        params["size"] = size;
        res["shift"] = shift;
        res["size"] = size;
        res["det"] = d.to_string();
    } else if (nmax > 0) {
        auto s = resolve_sequence(seq, shift + 2 * nmax - 1);
        auto rep = psd_leading_minors(s, shift, nmax);
        params["nmax"] = nmax;
        res = minor_report_json(rep);
        if (rep.status == MinorStatus::Violation) status = "violation";
    } else if (total_pos) {
        auto s = resolve_sequence(seq, 2 * window - 1);
        auto rep = total_positivity(s, window, max_order);
        params["window"] = window;
        params["max_order"] = max_order;
        res = minor_report_json(rep);
        if (rep.status == MinorStatus::Violation) status = "violation";
    } else if (toeplitz) {
        auto s = resolve_sequence(seq, window);
        auto rep = toeplitz_pf_check(s, window, max_order);
        params["window"] = window;
        params["max_order"] = max_order;
        res = minor_report_json(rep);
        if (rep.status == MinorStatus::Violation) status = "violation";
    } else {
        auto s = resolve_sequence(seq, count);
        auto signs = log_shape(s);
        params["count"] = count;
        res["signs"] = signs;
    }
    return emit_report(ctx, "hankel", params, res, status);
}

int run_cf_expand(const Ctx& ctx, const std::string& family, std::size_t depth,
                  std::size_t count) {
    json params{{"family", family}};
    json res;
    if (family == "secpow") {
        if (depth == 0) depth = 5;
        if (count == 0) count = depth + 1;
        auto alphas = secant_power_alphas(depth);
        auto coeffs = sfrac_expand_coeffs<RatPolynomial>(alphas, count);
        res["kind"] = "s-poly";
        json aj = json::array();
        for (const auto& p : alphas) aj.push_back(poly_json(p));
        res["alphas"] = std::move(aj);
        json sj = json::array();
        for (const auto& p : coeffs) sj.push_back(poly_json(p));
        res["series"] = std::move(sj);
    } else {
        const CFFamily* fam = find_cf_family(family);
        if (!fam) throw DomainError("unknown continued-fraction family: " + family);
        res["target"] = fam->target;
        res["note"] = fam->note;
        if (!fam->jacobi) {
            if (depth == 0) depth = 8;
            if (count == 0) count = depth + 1;
            SFraction sf = family_sfrac(*fam, depth);
            res["kind"] = "s";
            res["alphas"] = rat_array(sf.alphas);
            res["series"] = rat_array(sfrac_expand(sf, count));
        } else {
            if (depth == 0) depth = 6;
            if (count == 0) count = 2 * depth + 2;
            JFraction jf = family_jfrac(*fam, depth);
            res["kind"] = "j";
            res["gammas"] = rat_array(jf.gammas);
            res["betas"] = rat_array(jf.betas);
            res["series"] = rat_array(jfrac_expand(jf, count));
        }
    }
    params["depth"] = depth;
    params["count"] = count;
    return emit_report(ctx, "cf expand", params, res, "pass");
}

int run_cf_extract(const Ctx& ctx, const std::string& kind, const std::string& seq,
                   std::size_t terms) {
    if (kind != "s" && kind != "j") throw DomainError("cf extract: --kind must be s or j");
    json params{{"kind", kind}, {"seq", seq}, {"terms", terms}};
    json res;
    std::string status = "pass";
    if (kind == "s") {
        auto s = resolve_sequence(seq, terms + 1);
        try {
            SFraction sf = sfrac_extract(RatSeries(s.terms), terms);
            res["alphas"] = rat_array(sf.alphas);
            if (sf.alphas.size() < terms) res["terminated_at"] = sf.alphas.size();
        } catch (const Breakdown& b) {
            res["breakdown_level"] = b.level;
            status = "breakdown";
        }
    } else {
        auto s = resolve_sequence(seq, 2 * terms + 2);
        try {
            JFraction jf = jfrac_extract(RatSeries(s.terms), terms);
            res = jfrac_json(jf);
        } catch (const SingularHankel& e) {
            res["singular_order"] = e.n;
            status = "singular";
        }
    }
    return emit_report(ctx, "cf extract", params, res, status);
}

SFraction sfrac_source(const std::string& family, const std::string& seq, std::size_t depth) {
    if (!family.empty()) {
        const CFFamily* fam = find_cf_family(family);
        if (!fam) throw DomainError("unknown continued-fraction family: " + family);
        if (fam->jacobi)
            throw DomainError("family " + family + " has diagonal-form coefficients");
        return family_sfrac(*fam, depth);
    }
    if (seq.empty()) throw DomainError("need --family or --seq");
    auto s = resolve_sequence(seq, depth + 1);
    return sfrac_extract(RatSeries(s.terms), depth);
}

JFraction jfrac_source(const std::string& family, const std::string& seq, std::size_t depth) {
    if (!family.empty()) {
        const CFFamily* fam = find_cf_family(family);
        if (!fam) throw DomainError("unknown continued-fraction family: " + family);
        if (!fam->jacobi)
            throw DomainError("family " + family + " has level-form coefficients");
        return family_jfrac(*fam, depth);
    }
    if (seq.empty()) throw DomainError("need --family or --seq");
    auto s = resolve_sequence(seq, 2 * depth + 2);
    return jfrac_extract(RatSeries(s.terms), depth);
}

int run_cf_contract(const Ctx& ctx, const std::string& family, const std::string& seq,
                    std::size_t depth) {
    json params{{"family", family}, {"seq", seq}, {"depth", depth}};
    JFraction jf = contract(sfrac_source(family, seq, depth));
    return emit_report(ctx, "cf contract", params, jfrac_json(jf), "pass");
}

int run_cf_invert(const Ctx& ctx, const std::string& family, const std::string& seq,
                  std::size_t depth) {
    json params{{"family", family}, {"seq", seq}, {"depth", depth}};
    InverseContraction inv = expand_to_sfrac(jfrac_source(family, seq, depth));
    json res;
    res["alphas"] = rat_array(inv.sfrac.alphas);
    if (inv.obstruction) {
        res["obstruction"] = *inv.obstruction;
        return emit_report(ctx, "cf invert-contraction", params, res, "obstruction");
    }
    res["obstruction"] = nullptr;
    return emit_report(ctx, "cf invert-contraction", params, res, "pass");
}

int run_cf_shift(const Ctx& ctx, const std::string& family, const std::string& seq,
                 std::size_t depth, const std::string& c_str) {
    json params{{"family", family}, {"seq", seq}, {"depth", depth}, {"c", c_str}};
    Rational c = Rational::from_string(c_str);
    JFraction jf = jfrac_source(family, seq, depth);
    std::size_t vc = 2 * jf.betas.size() + 2;
    JFraction shifted = jfrac_binomial_shift(jf, c, vc);
    json res = jfrac_json(shifted);
    res["verified_terms"] = vc;
    return emit_report(ctx, "cf shift", params, res, "pass");
}

int run_enumerate(const Ctx& ctx, const std::string& what, const std::string& n_range) {
    auto [lo, hi] = parse_range(n_range);
    json params{{"what", what}, {"n", n_range}, {"jobs", ctx.jobs}};
    json values = json::array();
    for (std::size_t n = lo; n <= hi; ++n) {
        json row;
        row["n"] = n;
        if (what == "alternating") {
            row["count"] = alt_perm_count(n).get_str();
        } else if (what == "snakes") {
            row["count"] = snake_count(n, ctx.jobs).get_str();
        } else if (what == "records") {
            row["poly"] = poly_json(alt_records_poly(n));
        } else {
            throw DomainError("enumerate: --what must be alternating, snakes, or records");
        }
        values.push_back(std::move(row));
    }
    json res;
    res["what"] = what;
    res["values"] = std::move(values);
    return emit_report(ctx, "enumerate", params, res, "pass");
}

int run_verify_integral(const Ctx& ctx, const std::string& density, const std::string& n_range,
                        double tol, const std::string& x_str) {
    auto [lo, hi] = parse_range(n_range);
    json params{{"density", density}, {"n", n_range}, {"tol", fmt17(tol)}};
    json records = json::array();
    json skipped = json::array();
    bool all_pass = true;

    auto run_density = [&](const DensitySpec& d) {
        std::size_t top = std::min(hi, d.max_n);
        for (std::size_t n = lo; n <= top; ++n) {
            if (d.name == "euler-esinh" && n == 0) {
                // only a principal value exists at n = 0; see the pole-sum route
                skipped.push_back({{"what", d.name}, {"n", 0},
                                   {"reason", "principal value; use verify partial-fractions"}});
                continue;
            }
            try {
                auto r = moment_integral(d, n, tol);
                records.push_back(vrec_json(r, d.expected(n).to_string()));
                all_pass = all_pass && r.pass;
            } catch (const QuadratureFailure& e) {
                json rr;
                rr["what"] = d.name;
                rr["n"] = n;
                rr["error"] = e.what();
                rr["pass"] = false;
                records.push_back(std::move(rr));
                all_pass = false;
            }
        }
    };
    auto run_secpow = [&](const Rational& x) {
        std::size_t top = std::min<std::size_t>(hi, 8);
        for (std::size_t n = lo; n <= top; ++n) {
            auto r = secpow_gamma_moment(n, x, tol);
            records.push_back(
                vrec_json(r, secant_power_polys(n + 1).at(n).eval(x).to_string()));
            all_pass = all_pass && r.pass;
        }
    };

    if (density == "all") {
        for (const auto& d : density_specs()) run_density(d);
        for (long x = 1; x <= 3; ++x) run_secpow(Rational(x));
    } else if (density == "gamma-modulus") {
        Rational x = Rational::from_string(x_str);
        params["x"] = x.to_string();
        run_secpow(x);
    } else {
        const DensitySpec* d = find_density(density);
        if (!d) throw DomainError("unknown density: " + density);
        run_density(*d);
    }
    json res;
    res["records"] = std::move(records);
    if (!skipped.empty()) res["skipped"] = std::move(skipped);
    return emit_report(ctx, "verify integral", params, res, all_pass ? "pass" : "violation");
}

int run_verify_asymptotic(const Ctx& ctx, const std::string& family, std::size_t from,
                          std::size_t to) {
    json params{{"family", family}, {"from", from}, {"to", to}};
    if (to < from) throw DomainError("empty range");
    std::vector<std::string> fams;
    if (family == "all") fams = {"euler", "springer"};
    else fams = {family};
    json res;
    bool ok = true;
    for (const auto& f : fams) {
        auto recs = asymptotic_check(f, from, to);
        auto exact = resolve_sequence(f, to + 1);
        json arr = json::array();
        for (std::size_t i = 0; i < recs.size(); ++i) {
            const auto& r = recs[i];
            json row;
            row["n"] = r.n;
            row["exact"] = exact.at(r.n).to_string();
            row["approx"] = fmt17(r.approx);
            row["rel_err"] = fmt17(r.rel_err);
            if (i > 0) row["err_ratio"] = fmt17(r.rel_err / recs[i - 1].rel_err);
            arr.push_back(std::move(row));
            if (i > 0 && recs[i].rel_err >= recs[i - 1].rel_err) ok = false;
            if (r.n == 10 && r.rel_err >= 1e-3) ok = false;
        }
        res[f] = std::move(arr);
    }
    return emit_report(ctx, "verify asymptotic", params, res, ok ? "pass" : "violation");
}

int run_verify_lerch(const Ctx& ctx, const std::string& n_range, double tol) {
    auto [lo, hi] = parse_range(n_range);
    json params{{"n", n_range}, {"tol", fmt17(tol)}};
    json records = json::array();
    bool ok = true;
    auto push = [&](const VerificationRecord& r, const char* target_seq) {
        auto t = resolve_sequence(target_seq, r.n + 1);
        records.push_back(vrec_json(r, t.at(r.n).to_string()));
        ok = ok && r.pass;
    };
    for (std::size_t n = lo; n <= hi; ++n) {
        push(lerch_even(n, tol), "secant-tilde");
        push(lerch_odd(n, tol), "tangent-tilde");
        if (n >= 1) push(zeta_quarters(n, tol), "euler-tilde");
        push(springer_lerch(n, tol), "springer-tilde");
    }
    json res;
    res["records"] = std::move(records);
    return emit_report(ctx, "verify lerch", params, res, ok ? "pass" : "violation");
}

int run_verify_partial_fractions(const Ctx& ctx, const std::string& n_range,
                                 unsigned long long terms) {
    auto [lo, hi] = parse_range(n_range);
    json params{{"n", n_range}, {"terms", terms}};
    json records = json::array();
    bool ok = true;
    auto push = [&](const PartialFracRecord& r, const char* kind, const char* target_seq) {
        auto t = resolve_sequence(target_seq, r.n + 1);
        json row;
        row["what"] = kind;
        row["n"] = r.n;
        row["terms"] = r.terms;
        row["target"] = t.at(r.n).to_string();
        row["partial"] = fmt17(r.partial);
        row["tail_bound"] = fmt17(r.tail_bound);
        row["within"] = r.within;
        records.push_back(std::move(row));
        ok = ok && r.within;
    };
    for (std::size_t n = lo; n <= hi; ++n) {
        push(partial_frac_euler(n, terms), "pole-sum-zigzag", "euler-tilde");
        push(partial_frac_springer(n, terms), "pole-sum-snake", "springer-tilde");
    }
    json res;
    res["records"] = std::move(records);
    return emit_report(ctx, "verify partial-fractions", params, res, ok ? "pass" : "violation");
}

int run_verify_carleman(const Ctx& ctx, const std::string& seq, std::size_t terms,
                        double reference_b) {
    json params{{"seq", seq}, {"terms", terms}};
    if (reference_b == 0) {
        if (seq == "springer") reference_b = 4.0 / 3.14159265358979323846;
        else if (seq == "euler") reference_b = 2.0 / 3.14159265358979323846;
    }
    auto rep = carleman_diagnostic(resolve_sequence(seq, terms + 1), reference_b);
    json res;
    res["note"] = "growth diagnostic only; partial sums cannot certify divergence";
    json sums = json::array();
    for (double v : rep.partial_sums) sums.push_back(fmt17(v));
    res["partial_sums"] = std::move(sums);
    res["fit_a"] = fmt17(rep.fit_a);
    res["fit_b"] = fmt17(rep.fit_b);
    res["reference_b"] = fmt17(rep.reference_b);
    return emit_report(ctx, "verify carleman", params, res, "pass");
}

int run_scan_logconvexity(const Ctx& ctx, std::size_t max, std::size_t n_max, std::size_t j_max,
                          std::size_t k_max) {
    if (n_max == 0) n_max = max;
    if (j_max == 0) j_max = max;
    if (k_max == 0) k_max = max;
    json params{{"n_max", n_max}, {"j_max", j_max}, {"k_max", k_max}, {"jobs", ctx.jobs}};
    auto rep = scan_logconvexity(n_max, j_max, k_max, ctx.jobs);
    json res;
    res["n_max"] = rep.n_max;
    res["j_max"] = rep.j_max;
    res["k_max"] = rep.k_max;
    res["checked"] = rep.checked;
    res["violations"] = rep.violations;
    res["status"] = rep.first_violation ? "counterexample" : "all-hold";
    if (rep.first_violation) {
        json w;
        w["n"] = rep.first_violation->n;
        w["j"] = rep.first_violation->j;
        w["k"] = rep.first_violation->k;
        w["value"] = logconvexity_value(rep.first_violation->n, rep.first_violation->j,
                                        rep.first_violation->k)
                         .to_string();
        w["reverified"] = rep.first_violation_reverified;
        res["counterexample"] = std::move(w);
    } else {
        res["counterexample"] = nullptr;
    }
    res["seconds"] = fmt17(rep.seconds);
    return emit_report(ctx, "scan logconvexity", params, res,
                       rep.first_violation ? "violation" : "pass");
}

int run_scan_hankel_signs(const Ctx& ctx, std::size_t m_max, std::size_t n_max) {
    json params{{"m_max", m_max}, {"n_max", n_max}};
    auto e = euler_numbers(m_max + 2 * n_max - 1);
    std::vector<std::size_t> shifts;
    for (std::size_t m = 0; m <= m_max; ++m) shifts.push_back(m);
    auto rows = hankel_sign_survey(e, shifts, n_max);
    bool even_neg = true, odd_pos = true;
    json table = json::array();
    for (const auto& row : rows) {
        std::string s;
        bool has_neg = false, all_pos = true;
        for (int sg : row.signs) {
            if (!s.empty()) s += " ";
            s += sg > 0 ? "+" : (sg < 0 ? "-" : "0");
            has_neg = has_neg || sg < 0;
            all_pos = all_pos && sg > 0;
        }
        if (row.shift % 2 == 0 && !has_neg) even_neg = false;
        if (row.shift % 2 == 1 && !all_pos) odd_pos = false;
        table.push_back({{"shift", row.shift}, {"signs", s}});
    }
    json res;
    res["rows"] = std::move(table);
    res["even_rows_contain_negative"] = even_neg;
    res["odd_rows_all_positive"] = odd_pos;
    return emit_report(ctx, "scan hankel-signs", params, res,
                       (even_neg && odd_pos) ? "pass" : "violation");
}

int run_seed_suite(const Ctx& ctx) {
    auto results = run_acceptance(ctx.jobs);
    bool all = true;
    for (const auto& r : results) all = all && r.pass;
    if (ctx.format == "text") {
        for (const auto& r : results) std::cout << format_criterion_line(r) << "\n";
        std::cout << (all ? "ALL PASS" : "FAILURES PRESENT") << "\n";
    } else {
        json arr = json::array();
        for (const auto& r : results) {
            json row;
            row["number"] = r.number;
            row["name"] = r.name;
            row["pass"] = r.pass;
            row["seconds"] = fmt17(r.seconds);
            row["detail"] = r.detail;
            arr.push_back(std::move(row));
        }
        json res;
        res["criteria"] = std::move(arr);
        res["all_pass"] = all;
        return emit_report(ctx, "seed-suite", json{{"jobs", ctx.jobs}}, res,
                           all ? "pass" : "violation");
    }
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification toolkit for zigzag / snake moment sequences"};
    app.require_subcommand(0, 1);

    Ctx ctx;
    std::string jobs_str = "1";
    bool seed_suite = false;
    app.add_option("--format", ctx.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--jobs", jobs_str, "worker threads, or 'auto'")
        ->envname("MOMENTKIT_JOBS")
        ->capture_default_str();
    app.add_flag("--seed-suite", seed_suite, "run the full verification battery");

    // gen
    auto* gen = app.add_subcommand("gen", "print a named sequence");
    std::string gen_seq;
    std::size_t gen_count = 11;
    bool gen_list = false;
    gen->add_option("--seq", gen_seq, "sequence name");
    gen->add_option("--count", gen_count, "number of terms")->capture_default_str();
    gen->add_flag("--list", gen_list, "list known sequence names");

    // hankel
    auto* hk = app.add_subcommand("hankel", "exact Hankel / Toeplitz minor reports");
    std::string hk_seq;
    std::size_t hk_shift = 0, hk_size = 0, hk_nmax = 0, hk_window = 5, hk_order = 3,
                hk_count = 12;
    bool hk_det = false, hk_tp = false, hk_toe = false, hk_shape = false;
    hk->add_option("--seq", hk_seq, "sequence name")->required();
    hk->add_option("--shift", hk_shift, "index shift m");
    hk->add_option("--size", hk_size, "matrix size for --det");
    hk->add_flag("--det", hk_det, "single determinant");
    hk->add_option("--leading-minors", hk_nmax, "leading principal minors up to this order");
    hk->add_flag("--total-positivity", hk_tp, "all minors in a leading window");
    hk->add_flag("--toeplitz", hk_toe, "triangular Toeplitz minor check");
    hk->add_flag("--log-shape", hk_shape, "signs of a_n a_{n+2} - a_{n+1}^2");
    hk->add_option("--window", hk_window, "window size")->capture_default_str();
    hk->add_option("--max-order", hk_order, "largest minor order")->capture_default_str();
    hk->add_option("--count", hk_count, "terms for --log-shape")->capture_default_str();

    // cf
    auto* cf = app.add_subcommand("cf", "continued-fraction operations");
    cf->require_subcommand(1);
    auto* cfe = cf->add_subcommand("expand", "series of a registry family");
    std::string cfe_family;
    std::size_t cfe_depth = 0, cfe_count = 0;
    cfe->add_option("--family", cfe_family, "family id (or 'secpow')")->required();
    cfe->add_option("--depth", cfe_depth, "coefficient levels (0 = default)");
    cfe->add_option("--count", cfe_count, "series terms (0 = default)");

    auto* cfx = cf->add_subcommand("extract", "coefficients from a sequence");
    std::string cfx_kind = "s", cfx_seq;
    std::size_t cfx_terms = 6;
    cfx->add_option("--kind", cfx_kind, "s or j")->capture_default_str();
    cfx->add_option("--seq", cfx_seq, "sequence name")->required();
    cfx->add_option("--terms", cfx_terms, "levels to extract")->capture_default_str();

    auto* cfc = cf->add_subcommand("contract", "level form to diagonal form");
    std::string cfc_family, cfc_seq;
    std::size_t cfc_depth = 8;
    cfc->add_option("--family", cfc_family, "level-form family id");
    cfc->add_option("--seq", cfc_seq, "sequence to extract first");
    cfc->add_option("--depth", cfc_depth, "levels")->capture_default_str();

    auto* cfi = cf->add_subcommand("invert-contraction", "diagonal form back to level form");
    std::string cfi_family, cfi_seq;
    std::size_t cfi_depth = 3;
    cfi->add_option("--family", cfi_family, "diagonal-form family id");
    cfi->add_option("--seq", cfi_seq, "sequence to extract first");
    cfi->add_option("--depth", cfi_depth, "levels")->capture_default_str();

    auto* cfs = cf->add_subcommand("shift", "add a constant to every diagonal coefficient");
    std::string cfs_family, cfs_seq, cfs_c = "1";
    std::size_t cfs_depth = 6;
    cfs->add_option("--family", cfs_family, "diagonal-form family id");
    cfs->add_option("--seq", cfs_seq, "sequence to extract first");
    cfs->add_option("--depth", cfs_depth, "levels")->capture_default_str();
    cfs->add_option("--c", cfs_c, "shift constant (rational)")->capture_default_str();

    // enumerate
    auto* en = app.add_subcommand("enumerate", "brute-force counts");
    std::string en_what = "alternating", en_n = "0..8";
    en->add_option("--what", en_what, "alternating | snakes | records")->capture_default_str();
    en->add_option("--n", en_n, "size or range a..b")->capture_default_str();

    // verify
    auto* vf = app.add_subcommand("verify", "numerical verification reports");
    vf->require_subcommand(1);
    auto* vfi = vf->add_subcommand("integral", "quadrature of the moment representations");
    std::string vfi_density = "all", vfi_n = "0..8", vfi_x = "1";
    double vfi_tol = 1e-10;
    vfi->add_option("--density", vfi_density, "density name or 'all'")->capture_default_str();
    vfi->add_option("--n", vfi_n, "moment range a..b")->capture_default_str();
    vfi->add_option("--tol", vfi_tol, "relative tolerance")->capture_default_str();
    vfi->add_option("--x", vfi_x, "parameter for the gamma-modulus density")
        ->capture_default_str();

    auto* vfa = vf->add_subcommand("asymptotic", "leading-order growth formulas");
    std::string vfa_family = "all";
    std::size_t vfa_from = 8, vfa_to = 14;
    vfa->add_option("--family", vfa_family, "euler | springer | all")->capture_default_str();
    vfa->add_option("--from", vfa_from, "first index")->capture_default_str();
    vfa->add_option("--to", vfa_to, "last index")->capture_default_str();

    auto* vfl = vf->add_subcommand("lerch", "transcendent identities");
    std::string vfl_n = "0..5";
    double vfl_tol = 1e-9;
    vfl->add_option("--n", vfl_n, "index range a..b")->capture_default_str();
    vfl->add_option("--tol", vfl_tol, "relative tolerance")->capture_default_str();

    auto* vfp = vf->add_subcommand("partial-fractions", "pole sums with tail bounds");
    std::string vfp_n = "1..20";
    unsigned long long vfp_terms = 100000;
    vfp->add_option("--n", vfp_n, "index range a..b")->capture_default_str();
    vfp->add_option("--terms", vfp_terms, "summation cutoff K")->capture_default_str();

    auto* vfc = vf->add_subcommand("carleman", "growth / determinacy diagnostic");
    std::string vfc_seq = "springer";
    std::size_t vfc_terms = 50;
    double vfc_ref = 0;
    vfc->add_option("--seq", vfc_seq, "sequence name")->capture_default_str();
    vfc->add_option("--terms", vfc_terms, "terms in the partial sums")->capture_default_str();
    vfc->add_option("--reference-b", vfc_ref, "reference growth base (0 = by family)");

    // scan
    auto* sc = app.add_subcommand("scan", "exact large-range scans");
    sc->require_subcommand(1);
    auto* scl = sc->add_subcommand("logconvexity", "sign inequality over a triple range");
    std::size_t scl_max = 120, scl_n = 0, scl_j = 0, scl_k = 0;
    scl->add_option("--max", scl_max, "bound for n, j, k")->capture_default_str();
    scl->add_option("--n-max", scl_n, "override for n");
    scl->add_option("--j-max", scl_j, "override for j");
    scl->add_option("--k-max", scl_k, "override for k");
    auto* sch = sc->add_subcommand("hankel-signs", "determinant sign survey");
    std::size_t sch_m = 8, sch_n = 10;
    sch->add_option("--m-max", sch_m, "largest shift")->capture_default_str();
    sch->add_option("--n-max", sch_n, "largest order")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        ctx.jobs = parse_jobs(jobs_str);
        if (seed_suite) return run_seed_suite(ctx);
        if (gen->parsed()) {
            if (!gen_list && gen_seq.empty())
                throw DomainError("gen: needs --seq or --list");
            return run_gen(ctx, gen_list, gen_seq, gen_count);
        }
        if (hk->parsed())
            return run_hankel(ctx, hk_seq, hk_shift, hk_size, hk_nmax, hk_window, hk_order,
                              hk_det, hk_tp, hk_toe, hk_shape, hk_count);
        if (cfe->parsed()) return run_cf_expand(ctx, cfe_family, cfe_depth, cfe_count);
        if (cfx->parsed()) return run_cf_extract(ctx, cfx_kind, cfx_seq, cfx_terms);
        if (cfc->parsed()) return run_cf_contract(ctx, cfc_family, cfc_seq, cfc_depth);
        if (cfi->parsed()) return run_cf_invert(ctx, cfi_family, cfi_seq, cfi_depth);
        if (cfs->parsed()) return run_cf_shift(ctx, cfs_family, cfs_seq, cfs_depth, cfs_c);
        if (en->parsed()) return run_enumerate(ctx, en_what, en_n);
        if (vfi->parsed()) return run_verify_integral(ctx, vfi_density, vfi_n, vfi_tol, vfi_x);
        if (vfa->parsed()) return run_verify_asymptotic(ctx, vfa_family, vfa_from, vfa_to);
        if (vfl->parsed()) return run_verify_lerch(ctx, vfl_n, vfl_tol);
        if (vfp->parsed()) return run_verify_partial_fractions(ctx, vfp_n, vfp_terms);
        if (vfc->parsed()) return run_verify_carleman(ctx, vfc_seq, vfc_terms, vfc_ref);
        if (scl->parsed()) return run_scan_logconvexity(ctx, scl_max, scl_n, scl_j, scl_k);
        if (sch->parsed()) return run_scan_hankel_signs(ctx, sch_m, sch_n);
        std::cerr << app.help() << "\n";
        return 2;
    } catch (const VerificationFailure& e) {
        std::cerr << "internal cross-check failure: " << e.what() << "\n";
        return 1;
    } catch (const Breakdown& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const SingularHankel& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const QuadratureFailure& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
