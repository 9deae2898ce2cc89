#pragma once

#include <map>
#include <vector>

#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"

namespace schubert {

// Divided difference d_i: (p - swap_{x_i, x_{i+1}} p) / (x_i - x_{i+1}).
// The numerator is always divisible, so a NotDivisibleError here is a bug.
Polynomial divided_difference(int i, const Polynomial& p);

// Restrictions of one class to all fixed points, indexed by the table's
// group order.  Each value is a polynomial in the t alphabet.
struct RestrictionVector {
    int n = 0;
    std::vector<Polynomial> values;

    RestrictionVector pointwise_mul(const RestrictionVector& other) const;
};

// All double Schubert polynomials for a fixed rank n, generated by divided
// differences from the top class prod_{i+j<=n}(x_i - t_j), together with
// the full localization matrix.  Immutable once built; safe to share
// between threads.
class SchubertTable {
public:
    explicit SchubertTable(int n);

    int n() const { return n_; }

    // Group elements ordered by (length, lex one-line word); the identity
    // is first, w_0 last.
    const std::vector<Permutation>& group() const { return group_; }
    int index_of(const Permutation& w) const;

    const Polynomial& entry(const Permutation& w) const;
    const Polynomial& entry(int idx) const { return entries_[idx]; }

    // Restriction of entry(v) to the fixed point w: substitute x_i -> t_{w(i)}.
    const Polynomial& localize(const Permutation& v, const Permutation& w) const;
    const Polynomial& localize(int v_idx, int w_idx) const {
        return localizations_[v_idx * group_.size() + w_idx];
    }

    RestrictionVector restriction(const Permutation& v) const;
    // Opposite class: t_i -> t_{n+1-i} applied to localize(v, w_0 * w).
    RestrictionVector opposite_restriction(const Permutation& v) const;

private:
    int n_;
    std::vector<Permutation> group_;
    std::map<std::vector<int>, int> index_;
    std::vector<Polynomial> entries_;        // by group index
    std::vector<Polynomial> localizations_;  // row-major [v][w]
};

}  // namespace schubert
