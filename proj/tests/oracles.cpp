#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace schubert::oracles {

std::vector<int> reduced_word(const Permutation& w) {
    std::vector<int> word;
    std::vector<int> v = w.word();
    const int n = static_cast<int>(v.size());
    // Peel leftmost descents; each swap removes exactly one inversion.
    for (;;) {
        int i = 0;
        while (i + 1 < n && v[i] < v[i + 1]) ++i;
        if (i + 1 >= n) break;
        std::swap(v[i], v[i + 1]);
        word.push_back(i + 1);
    }
    std::reverse(word.begin(), word.end());
    return word;
}

bool bruhat_leq_subword(const Permutation& u, const Permutation& w) {
    std::vector<int> word = reduced_word(w);
    const int n = u.n();
    const std::size_t L = word.size();
    // Any subword of a reduced word multiplies to an element <= w, and
    // every element <= w arises this way.
    for (std::size_t mask = 0; mask < (std::size_t{1} << L); ++mask) {
        Permutation p = Permutation::identity(n);
        for (std::size_t k = 0; k < L; ++k)
            if (mask & (std::size_t{1} << k)) p = p * Permutation::transposition(word[k], n);
        if (p == u) return true;
    }
    return false;
}

std::vector<int> lehmer_code(const Permutation& w) {
    std::vector<int> code(w.n());
    for (int i = 1; i <= w.n(); ++i) {
        int c = 0;
        for (int j = i + 1; j <= w.n(); ++j)
            if (w(j) < w(i)) ++c;
        code[i - 1] = c;
    }
    return code;
}

namespace {

// Closed-form divided difference on a single-alphabet monomial:
// d_i(x_i^p x_{i+1}^q) = sign * sum of x_i^j x_{i+1}^{p+q-1-j}.
Polynomial divided_difference_monomial(int i, const Monomial& m, const mpz_class& c) {
    int p = m.exponent_of(xvar(i)), q = m.exponent_of(xvar(i + 1));
    if (p == q) return {};
    std::vector<std::pair<VarRef, int>> rest;
    for (const auto& [v, e] : m.factors())
        if (v != xvar(i) && v != xvar(i + 1)) rest.emplace_back(v, e);
    Monomial base(rest);
    Polynomial out;
    int lo = std::min(p, q), hi = std::max(p, q);
    mpz_class coeff = p > q ? c : -c;
    for (int j = lo; j <= hi - 1; ++j) {
        std::vector<std::pair<VarRef, int>> f;
        if (j > 0) f.emplace_back(xvar(i), j);
        if (p + q - 1 - j > 0) f.emplace_back(xvar(i + 1), p + q - 1 - j);
        out.add_term(base * Monomial(f), coeff);
    }
    return out;
}

Polynomial divided_difference_oracle(int i, const Polynomial& p) {
    Polynomial out;
    for (const auto& [m, c] : p.terms()) out += divided_difference_monomial(i, m, c);
    return out;
}

Permutation perm_from_code(const std::vector<int>& code) {
    const int m = static_cast<int>(code.size());
    std::vector<int> avail(m);
    for (int i = 0; i < m; ++i) avail[i] = i + 1;
    std::vector<int> w;
    for (int i = 0; i < m; ++i) {
        if (code[i] >= static_cast<int>(avail.size()))
            throw std::invalid_argument("exponent vector is not a Lehmer code");
        w.push_back(avail[code[i]]);
        avail.erase(avail.begin() + code[i]);
    }
    return Permutation(std::move(w));
}

std::vector<int> x_exponents(const Monomial& m, int size) {
    std::vector<int> e(size, 0);
    for (const auto& [v, k] : m.factors()) e[v.index - 1] = k;
    return e;
}

// x^code(w) is the leading monomial of the classical Schubert polynomial
// under lex with the highest-index variable most significant.
bool right_lex_less(const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

}  // namespace

ClassicalSchubert::ClassicalSchubert(int m) : m_(m) {
    std::vector<std::pair<VarRef, int>> top;
    for (int i = 1; i < m; ++i) top.emplace_back(xvar(i), m - i);
    Polynomial p;
    p.add_term(Monomial(top), 1);
    memo_.emplace(Permutation::longest(m), std::move(p));
}

const Polynomial& ClassicalSchubert::poly(const Permutation& w) {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    int ascent = 0;
    for (int i = 1; i < m_; ++i)
        if (w(i) < w(i + 1)) {
            ascent = i;
            break;
        }
    Polynomial p = divided_difference_oracle(ascent, poly(w * Permutation::transposition(ascent, m_)));
    return memo_.emplace(w, std::move(p)).first->second;
}

std::map<Permutation, mpz_class> ClassicalSchubert::expand(Polynomial p) {
    std::map<Permutation, mpz_class> out;
    while (!p.is_zero()) {
        auto lead = p.terms().begin();
        std::vector<int> best = x_exponents(lead->first, m_);
        for (auto it = std::next(p.terms().begin()); it != p.terms().end(); ++it) {
            std::vector<int> e = x_exponents(it->first, m_);
            if (right_lex_less(best, e)) {
                best = std::move(e);
                lead = it;
            }
        }
        Permutation w = perm_from_code(best);
        mpz_class c = lead->second;
        p -= poly(w).scaled(c);
        out[w] += c;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace schubert::oracles
