#pragma once

#include <map>
#include <optional>

#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/table.hpp"

namespace schubert {

// Expansion of a product of two basis classes: coefficients c_uv^w in the
// t alphabet, keyed by w.  Zero coefficients are not stored.
struct Expansion {
    int n;
    Permutation u, v;
    std::map<Permutation, Polynomial> coefficients;

    const Polynomial& coefficient(const Permutation& w) const;
};

// Unique coefficients c_w with f = sum_w c_w * restriction(w), found by the
// Bruhat-triangular solve: process w by increasing length, divide the
// residual at w by the inversion factors of localize(w, w).  Throws
// NotDivisibleError if f is not the restriction vector of an actual class.
// If the cohomological degree of f is known, pass it to have each
// coefficient checked for homogeneity of degree d - length(w).
std::map<Permutation, Polynomial> expand_product(const SchubertTable& table,
                                                 const RestrictionVector& f,
                                                 std::optional<int> degree = std::nullopt);

Expansion structure_constants(const SchubertTable& table, const Permutation& u,
                              const Permutation& v);

// Integration over the fiber: (sum_w sign(w) * f(w)) / Vandermonde,
// computed by sequential exact linear division.
Polynomial pushforward(const SchubertTable& table, const RestrictionVector& f);

// Duality route to a single constant:
// pushforward(restriction(u) * restriction(v) * opposite_restriction(w_0 w)).
Polynomial duality_constant(const SchubertTable& table, const Permutation& u,
                            const Permutation& v, const Permutation& w);

}  // namespace schubert
