#pragma once

#include <compare>
#include <string>
#include <vector>

namespace schubert {

// Element of S_n in one-line notation.  Positions and values are
// one-indexed: w(i) = word[i-1].
class Permutation {
public:
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);
    static Permutation longest(int n);            // w_0 = (n, n-1, ..., 1)
    static Permutation transposition(int k, int n);  // s_k, swaps k and k+1

    int n() const { return static_cast<int>(word_.size()); }
    int operator()(int i) const { return word_[i - 1]; }
    const std::vector<int>& word() const { return word_; }

    int length() const;                           // number of inversions
    Permutation inverse() const;
    std::vector<int> descents() const;            // { i : w(i) > w(i+1) }

    // #{ i <= q : w(i) <= p }, for 0 <= p,q <= n.
    int rank(int p, int q) const;

    std::string to_string() const;                // "[2,1,3]"

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> word_;
};

// (u*v)(i) = u(v(i)).  Throws RankMismatchError unless u.n() == v.n().
Permutation operator*(const Permutation& u, const Permutation& v);

// Bruhat order via pointwise comparison of rank functions:
// u <= w iff rank_u(p,q) >= rank_w(p,q) for all p,q.
bool bruhat_leq(const Permutation& u, const Permutation& w);

// All of S_n ordered by (length, lexicographic one-line word).
std::vector<Permutation> all_permutations(int n);

// Natural inclusion S_n -> S_m fixing n+1, ..., m.
Permutation embed(const Permutation& w, int m);

}  // namespace schubert
