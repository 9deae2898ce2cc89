#pragma once

#include <cstdint>
#include <vector>

#include "schubert/expand.hpp"
#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/table.hpp"

namespace schubert {

// Change of variables t -> alpha with alpha_i = t_{i+1} - t_i, i.e.
// t_1 -> 0, t_i -> alpha_1 + ... + alpha_{i-1}.  Requires p to be invariant
// under a common translation of all t variables (throws
// NotTranslationInvariantError otherwise).
Polynomial to_alpha(const Polynomial& p, int n);

// Inverse substitution alpha_i -> t_{i+1} - t_i, for round-trip checks.
Polynomial from_alpha(const Polynomial& p);

bool is_translation_invariant(const Polynomial& p, int n);

struct PositivityCertificate {
    bool positive;
    // Full expansion when positive, the offending terms when not.
    std::vector<std::pair<Monomial, mpz_class>> terms;
};

PositivityCertificate is_graham_positive(const Polynomial& alpha_poly);

struct Violation {
    Permutation u, v, w;
    Monomial monomial;
    mpz_class coefficient;
};

struct PositivityReport {
    int n = 0;
    std::uint64_t pairs_checked = 0;
    std::uint64_t nonzero_constants = 0;
    bool all_positive = true;
    std::vector<Violation> violations;
    mpz_class max_coefficient = 0;
    double elapsed_seconds = 0.0;
};

struct VerifyOptions {
    int jobs = 0;              // 0: hardware concurrency
    bool sample_audit = false;  // recompute ~1% of pairs swapped
    std::uint64_t audit_seed = 1;
};

// Exhaustive sweep over unordered pairs (u, v) in S_n x S_n: compute the
// structure constants, map each through to_alpha, and check positivity.
PositivityReport verify_all(const SchubertTable& table, const VerifyOptions& options = {});

}  // namespace schubert
