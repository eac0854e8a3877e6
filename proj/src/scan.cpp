#include "momentkit/scan.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include "momentkit/errors.hpp"
#include "momentkit/hankel.hpp"

namespace momentkit {

Rational logconvexity_value(std::size_t n, std::size_t j, std::size_t k) {
    if (n < 1 || j < 1 || k < 1) throw DomainError("logconvexity_value: indices start at 1");
    SequenceHandle e = scale_seq(euler_numbers(n + j + k + 1), ScaleMode::DivFactorial);
    Rational q = e.at(n) * e.at(n + j + k) - e.at(n + j) * e.at(n + k);
    return n % 2 == 1 ? q : -q;
}

namespace {

struct WorkerResult {
    unsigned long long checked = 0;
    unsigned long long violations = 0;
    std::optional<ScanTriple> first;   // lex-first within this worker's slice
};

void scan_worker(const std::vector<BigInt>& e, std::size_t n_max, std::size_t j_max,
                 std::size_t k_max, unsigned jobs, unsigned id, WorkerResult& out) {
    BigInt rfn, rfk, lhs, rhs, tmp;
    for (std::size_t n = 1 + id; n <= n_max; n += jobs) {
        const bool positive_when_greater = (n % 2 == 1);   // sign of (-1)^{n-1}
        rfn = 1;                                           // rf(n, j) built up over j
        for (std::size_t j = 1; j <= j_max && j <= k_max; ++j) {
            mpz_mul_ui(rfn.get_mpz_t(), rfn.get_mpz_t(), static_cast<unsigned long>(n + j));
            // rf(n+k, j) at k = j, then advanced incrementally
            rfk = 1;
            for (std::size_t i = 1; i <= j; ++i)
                mpz_mul_ui(rfk.get_mpz_t(), rfk.get_mpz_t(), static_cast<unsigned long>(n + j + i));
            for (std::size_t k = j; k <= k_max; ++k) {
                mpz_mul(lhs.get_mpz_t(), e[n].get_mpz_t(), e[n + j + k].get_mpz_t());
                mpz_mul(lhs.get_mpz_t(), lhs.get_mpz_t(), rfn.get_mpz_t());
                mpz_mul(rhs.get_mpz_t(), e[n + j].get_mpz_t(), e[n + k].get_mpz_t());
                mpz_mul(rhs.get_mpz_t(), rhs.get_mpz_t(), rfk.get_mpz_t());
                int cmp = mpz_cmp(lhs.get_mpz_t(), rhs.get_mpz_t());
                int sgn = positive_when_greater ? cmp : -cmp;
                ++out.checked;
                if (sgn <= 0) {
                    ++out.violations;
                    if (!out.first) out.first = ScanTriple{n, j, k};
                }
                // rf(n+k+1, j) = rf(n+k, j) * (n+j+k+1) / (n+k+1)
                mpz_mul_ui(rfk.get_mpz_t(), rfk.get_mpz_t(),
                           static_cast<unsigned long>(n + j + k + 1));
                mpz_divexact_ui(rfk.get_mpz_t(), rfk.get_mpz_t(),
                                static_cast<unsigned long>(n + k + 1));
            }
        }
    }
}

} // namespace

ScanReport scan_logconvexity(std::size_t n_max, std::size_t j_max, std::size_t k_max,
                             unsigned jobs) {
    if (n_max < 1 || j_max < 1 || k_max < 1)
        throw DomainError("scan_logconvexity: ranges start at 1");
    auto t0 = std::chrono::steady_clock::now();

    SequenceHandle eh = euler_numbers(n_max + j_max + k_max + 1);
    std::vector<BigInt> e;
    e.reserve(eh.size());
    for (const auto& t : eh.terms) e.push_back(t.num());   // integer sequence

    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n_max)));
    std::vector<WorkerResult> results(jobs);
    if (jobs == 1) {
        scan_worker(e, n_max, j_max, k_max, 1, 0, results[0]);
    } else {
        std::vector<std::thread> pool;
        for (unsigned id = 0; id < jobs; ++id)
            pool.emplace_back(scan_worker, std::cref(e), n_max, j_max, k_max, jobs, id,
                              std::ref(results[id]));
        for (auto& t : pool) t.join();
    }

    ScanReport rep;
    rep.n_max = n_max;
    rep.j_max = j_max;
    rep.k_max = k_max;
    for (const auto& r : results) {
        rep.checked += r.checked;
        rep.violations += r.violations;
        if (r.first && (!rep.first_violation ||
                        std::tie(r.first->n, r.first->j, r.first->k) <
                            std::tie(rep.first_violation->n, rep.first_violation->j,
                                     rep.first_violation->k)))
            rep.first_violation = r.first;
    }
    if (rep.first_violation) {
        // independent exact recheck of the witness
        Rational v = logconvexity_value(rep.first_violation->n, rep.first_violation->j,
                                        rep.first_violation->k);
        if (v.sign() > 0)
            throw VerificationFailure("scan violation witness failed exact recheck");
        rep.first_violation_reverified = true;
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::vector<SignSurveyRow> hankel_sign_survey(const SequenceHandle& s,
                                              const std::vector<std::size_t>& shifts,
                                              std::size_t n_max) {
    if (n_max < 1) throw DomainError("hankel_sign_survey: n_max must be positive");
    std::vector<SignSurveyRow> rows;
    for (std::size_t m : shifts) {
        s.require_terms(m + 2 * n_max - 1, "hankel_sign_survey");
        SignSurveyRow row;
        row.shift = m;
        for (std::size_t n = 1; n <= n_max; ++n)
            row.signs.push_back(det_exact(HankelMatrix::build(s, m, n).entries).sign());
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace momentkit
