#include "schubert/positivity.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <random>
#include <thread>

#include "schubert/errors.hpp"

namespace schubert {

bool is_translation_invariant(const Polynomial& p, int n) {
    // Shift every t_i by the reserved slack variable t_{n+1} and compare.
    std::map<VarRef, Polynomial> shift;
    Polynomial slack = Polynomial::variable(tvar(n + 1));
    for (int i = 1; i <= n; ++i)
        shift.emplace(tvar(i), Polynomial::variable(tvar(i)) + slack);
    return p.substitute(shift) == p;
}

Polynomial to_alpha(const Polynomial& p, int n) {
    if (!is_translation_invariant(p, n))
        throw NotTranslationInvariantError(
            "polynomial is not in the subring generated by t_j - t_i");
    std::map<VarRef, Polynomial> assignment;
    assignment.emplace(tvar(1), Polynomial{});
    Polynomial acc;
    for (int i = 2; i <= n + 1; ++i) {
        acc += Polynomial::variable(avar(i - 1));
        assignment.emplace(tvar(i), acc);
    }
    return p.substitute(assignment);
}

Polynomial from_alpha(const Polynomial& p) {
    std::map<VarRef, Polynomial> assignment;
    int max_index = 0;
    for (const auto& [m, c] : p.terms())
        for (const auto& [v, e] : m.factors())
            if (v.alphabet == Alphabet::A) max_index = std::max(max_index, v.index);
    for (int i = 1; i <= max_index; ++i)
        assignment.emplace(avar(i), Polynomial::linear_difference(tvar(i + 1), tvar(i)));
    return p.substitute(assignment);
}

PositivityCertificate is_graham_positive(const Polynomial& alpha_poly) {
    PositivityCertificate cert{true, {}};
    for (const auto& [m, c] : alpha_poly.terms()) {
        if (c < 0) {
            if (cert.positive) cert.terms.clear();
            cert.positive = false;
            cert.terms.emplace_back(m, c);
        } else if (cert.positive) {
            cert.terms.emplace_back(m, c);
        }
    }
    return cert;
}

namespace {

struct PairResult {
    std::uint64_t nonzero = 0;
    mpz_class max_coeff = 0;
    std::vector<Violation> violations;
};

PairResult check_pair(const SchubertTable& table, const Permutation& u, const Permutation& v) {
    PairResult res;
    Expansion exp = structure_constants(table, u, v);
    for (const auto& [w, coeff] : exp.coefficients) {
        ++res.nonzero;
        Polynomial a = to_alpha(coeff, table.n());
        for (const auto& [m, c] : a.terms()) {
            if (c < 0)
                res.violations.push_back(Violation{u, v, w, m, c});
            else if (c > res.max_coeff)
                res.max_coeff = c;
        }
    }
    return res;
}

}  // namespace

PositivityReport verify_all(const SchubertTable& table, const VerifyOptions& options) {
    auto start = std::chrono::steady_clock::now();
    const auto& group = table.group();
    const int N = static_cast<int>(group.size());

    // Unordered pairs (i <= j), enumerated in canonical order.
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < N; ++i)
        for (int j = i; j < N; ++j) pairs.emplace_back(i, j);

    int jobs = options.jobs > 0 ? options.jobs
                                : static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;

    std::vector<PairResult> results(pairs.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::string> errors;
    std::mutex error_mutex;

    auto worker = [&]() {
        for (;;) {
            std::size_t k = next.fetch_add(1);
            if (k >= pairs.size()) return;
            try {
                results[k] = check_pair(table, group[pairs[k].first], group[pairs[k].second]);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                errors.push_back(group[pairs[k].first].to_string() + " * " +
                                 group[pairs[k].second].to_string() + ": " + e.what());
            }
        }
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }
    if (!errors.empty())
        throw std::runtime_error("verification aborted at pair " + errors.front());

    PositivityReport report;
    report.n = table.n();
    report.pairs_checked = pairs.size();
    // Merge in canonical pair order so the report is deterministic.
    for (const auto& res : results) {
        report.nonzero_constants += res.nonzero;
        if (res.max_coeff > report.max_coefficient) report.max_coefficient = res.max_coeff;
        for (const auto& v : res.violations) report.violations.push_back(v);
    }
    report.all_positive = report.violations.empty();

    if (options.sample_audit) {
        // Recompute a ~1% sample with swapped arguments; commutativity says
        // the expansions must agree.
        std::mt19937_64 rng(options.audit_seed);
        std::size_t sample = std::max<std::size_t>(1, pairs.size() / 100);
        for (std::size_t s = 0; s < sample; ++s) {
            auto [i, j] = pairs[rng() % pairs.size()];
            Expansion forward = structure_constants(table, group[i], group[j]);
            Expansion swapped = structure_constants(table, group[j], group[i]);
            if (forward.coefficients != swapped.coefficients)
                throw std::runtime_error("commutativity audit failed for " +
                                         group[i].to_string() + ", " + group[j].to_string());
        }
    }

    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace schubert
