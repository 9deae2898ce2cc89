#include "schubert/expand.hpp"

#include "schubert/errors.hpp"

namespace schubert {

const Polynomial& Expansion::coefficient(const Permutation& w) const {
    static const Polynomial zero;
    auto it = coefficients.find(w);
    return it == coefficients.end() ? zero : it->second;
}

std::map<Permutation, Polynomial> expand_product(const SchubertTable& table,
                                                 const RestrictionVector& f,
                                                 std::optional<int> degree) {
    const auto& group = table.group();
    const int N = static_cast<int>(group.size());
    std::vector<Polynomial> residual = f.values;
    std::map<Permutation, Polynomial> out;

    // group is ordered by increasing length, which is all the triangular
    // solve needs; order within a length level does not matter.
    for (int wi = 0; wi < N; ++wi) {
        Polynomial c = residual[wi];
        if (c.is_zero()) continue;
        const Permutation& w = group[wi];
        // localize(w, w) = prod over inversions (t_{w(i)} - t_{w(j)}); peel
        // the factors off one exact division at a time.
        for (int i = 1; i <= w.n(); ++i)
            for (int j = i + 1; j <= w.n(); ++j)
                if (w(i) > w(j)) c = exact_divide_linear(c, tvar(w(i)), tvar(w(j)));
        if (degree && !c.is_homogeneous(*degree - w.length()))
            throw NotDivisibleError("expansion coefficient has unexpected degree at " +
                                    w.to_string());
        for (int wj = wi; wj < N; ++wj) {
            const Polynomial& loc = table.localize(wi, wj);
            if (!loc.is_zero()) residual[wj] -= c * loc;
        }
        out.emplace(w, std::move(c));
    }
    return out;
}

Expansion structure_constants(const SchubertTable& table, const Permutation& u,
                              const Permutation& v) {
    RestrictionVector f = table.restriction(u).pointwise_mul(table.restriction(v));
    return Expansion{table.n(), u, v, expand_product(table, f, u.length() + v.length())};
}

Polynomial pushforward(const SchubertTable& table, const RestrictionVector& f) {
    const auto& group = table.group();
    Polynomial numerator;
    for (std::size_t i = 0; i < group.size(); ++i) {
        if (group[i].length() % 2 == 0)
            numerator += f.values[i];
        else
            numerator -= f.values[i];
    }
    if (numerator.is_zero()) return {};
    for (int i = 1; i <= table.n(); ++i)
        for (int j = i + 1; j <= table.n(); ++j)
            numerator = exact_divide_linear(numerator, tvar(i), tvar(j));
    return numerator;
}

Polynomial duality_constant(const SchubertTable& table, const Permutation& u,
                            const Permutation& v, const Permutation& w) {
    Permutation w0 = Permutation::longest(table.n());
    RestrictionVector f = table.restriction(u)
                              .pointwise_mul(table.restriction(v))
                              .pointwise_mul(table.opposite_restriction(w0 * w));
    return pushforward(table, f);
}

}  // namespace schubert
