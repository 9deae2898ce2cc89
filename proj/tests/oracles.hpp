#pragma once

// Independent oracles used by the unit and acceptance suites.  None of
// these share a code path with the implementations they check.

#include <map>

#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"

namespace schubert::oracles {

// Bruhat order by brute force over subwords: u <= w iff some subsequence
// of a reduced word of w multiplies to u.
bool bruhat_leq_subword(const Permutation& u, const Permutation& w);

// Reduced word by the leftmost-descent greedy algorithm.
std::vector<int> reduced_word(const Permutation& w);

// Lehmer code: code_i = #{ j > i : w(j) < w(i) }.
std::vector<int> lehmer_code(const Permutation& w);

// Classical (single, t = 0) Schubert polynomials over S_m, memoized on
// demand by descending divided differences from x^(m-1, m-2, ..., 0).
class ClassicalSchubert {
public:
    explicit ClassicalSchubert(int m);
    const Polynomial& poly(const Permutation& w);

    // Expand an arbitrary polynomial in the classical Schubert basis by
    // repeated leading-monomial subtraction; keys are permutations of S_m.
    std::map<Permutation, mpz_class> expand(Polynomial p);

private:
    int m_;
    std::map<Permutation, Polynomial> memo_;
};

}  // namespace schubert::oracles
