#include "schubert/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "schubert/errors.hpp"

namespace schubert {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    if (word_.empty()) throw std::invalid_argument("permutation word must be nonempty");
    std::vector<int> sorted = word_;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i) {
        if (sorted[i] != i + 1) {
            std::ostringstream os;
            os << "not a permutation of {1..n}: " << Permutation::to_string();
            throw std::invalid_argument(os.str());
        }
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = n - i;
    return Permutation(std::move(w));
}

Permutation Permutation::transposition(int k, int n) {
    if (k < 1 || k >= n) throw std::out_of_range("simple transposition index out of range");
    Permutation s = identity(n);
    std::swap(s.word_[k - 1], s.word_[k]);
    return s;
}

int Permutation::length() const {
    int inv = 0;
    for (int i = 0; i < n(); ++i)
        for (int j = i + 1; j < n(); ++j)
            if (word_[i] > word_[j]) ++inv;
    return inv;
}

Permutation Permutation::inverse() const {
    std::vector<int> w(n());
    for (int i = 1; i <= n(); ++i) w[word_[i - 1] - 1] = i;
    return Permutation(std::move(w));
}

std::vector<int> Permutation::descents() const {
    std::vector<int> d;
    for (int i = 1; i < n(); ++i)
        if (word_[i - 1] > word_[i]) d.push_back(i);
    return d;
}

int Permutation::rank(int p, int q) const {
    int r = 0;
    for (int i = 1; i <= q; ++i)
        if (word_[i - 1] <= p) ++r;
    return r;
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < n(); ++i) {
        if (i) os << ',';
        os << word_[i];
    }
    os << ']';
    return os.str();
}

Permutation operator*(const Permutation& u, const Permutation& v) {
    if (u.n() != v.n())
        throw RankMismatchError("cannot compose permutations of different rank");
    std::vector<int> w(u.n());
    for (int i = 1; i <= u.n(); ++i) w[i - 1] = u(v(i));
    return Permutation(std::move(w));
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
    if (u.n() != w.n())
        throw RankMismatchError("bruhat_leq requires equal rank");
    for (int p = 1; p <= u.n(); ++p)
        for (int q = 1; q <= u.n(); ++q)
            if (u.rank(p, q) < w.rank(p, q)) return false;
    return true;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    std::stable_sort(out.begin(), out.end(), [](const Permutation& a, const Permutation& b) {
        int la = a.length(), lb = b.length();
        if (la != lb) return la < lb;
        return a.word() < b.word();
    });
    return out;
}

Permutation embed(const Permutation& w, int m) {
    if (m < w.n()) throw std::invalid_argument("cannot embed into smaller rank");
    std::vector<int> word = w.word();
    for (int i = w.n() + 1; i <= m; ++i) word.push_back(i);
    return Permutation(std::move(word));
}

}  // namespace schubert
