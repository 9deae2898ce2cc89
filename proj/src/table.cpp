#include "schubert/table.hpp"

#include <map>
#include <stdexcept>

namespace schubert {

Polynomial divided_difference(int i, const Polynomial& p) {
    VarRef xi = xvar(i), xj = xvar(i + 1);
    Polynomial swapped = p.rename([&](VarRef v) {
        if (v == xi) return xj;
        if (v == xj) return xi;
        return v;
    });
    Polynomial numerator = p - swapped;
    if (numerator.is_zero()) return {};
    return exact_divide_linear(numerator, xi, xj);
}

RestrictionVector RestrictionVector::pointwise_mul(const RestrictionVector& other) const {
    RestrictionVector out{n, {}};
    out.values.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        out.values.push_back(values[i] * other.values[i]);
    return out;
}

SchubertTable::SchubertTable(int n) : n_(n), group_(all_permutations(n)) {
    if (n < 1) throw std::invalid_argument("rank must be >= 1");
    const int N = static_cast<int>(group_.size());
    for (int i = 0; i < N; ++i) index_.emplace(group_[i].word(), i);
    entries_.resize(N);

    // Top class for w_0, then one divided difference per step down the
    // length filtration: entry(w) = d_i(entry(w * s_i)) for any ascent i.
    Polynomial top = Polynomial::constant(1);
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; i + j <= n; ++j)
            top = top * Polynomial::linear_difference(xvar(i), tvar(j));
    entries_[N - 1] = std::move(top);

    for (int idx = N - 2; idx >= 0; --idx) {
        const Permutation& w = group_[idx];
        int ascent = 0;
        for (int i = 1; i < n; ++i) {
            if (w(i) < w(i + 1)) {
                ascent = i;
                break;
            }
        }
        Permutation above = w * Permutation::transposition(ascent, n);
        entries_[idx] = divided_difference(ascent, entries_[index_of(above)]);
    }

    localizations_.resize(static_cast<std::size_t>(N) * N);
    for (int v = 0; v < N; ++v) {
        for (int w = 0; w < N; ++w) {
            const Permutation& fp = group_[w];
            localizations_[static_cast<std::size_t>(v) * N + w] =
                entries_[v].rename([&](VarRef var) {
                    return var.alphabet == Alphabet::X ? tvar(fp(var.index)) : var;
                });
        }
    }
}

int SchubertTable::index_of(const Permutation& w) const {
    if (w.n() != n_) throw std::invalid_argument("permutation rank does not match table");
    return index_.at(w.word());
}

const Polynomial& SchubertTable::entry(const Permutation& w) const {
    return entries_[index_of(w)];
}

const Polynomial& SchubertTable::localize(const Permutation& v, const Permutation& w) const {
    return localize(index_of(v), index_of(w));
}

RestrictionVector SchubertTable::restriction(const Permutation& v) const {
    const int N = static_cast<int>(group_.size());
    RestrictionVector out{n_, {}};
    out.values.reserve(N);
    int vi = index_of(v);
    for (int w = 0; w < N; ++w) out.values.push_back(localize(vi, w));
    return out;
}

RestrictionVector SchubertTable::opposite_restriction(const Permutation& v) const {
    const int N = static_cast<int>(group_.size());
    Permutation w0 = Permutation::longest(n_);
    RestrictionVector out{n_, {}};
    out.values.reserve(N);
    int vi = index_of(v);
    for (int w = 0; w < N; ++w) {
        const Polynomial& loc = localize(vi, index_of(w0 * group_[w]));
        out.values.push_back(loc.rename([&](VarRef var) {
            return var.alphabet == Alphabet::T ? tvar(n_ + 1 - var.index) : var;
        }));
    }
    return out;
}

}  // namespace schubert
