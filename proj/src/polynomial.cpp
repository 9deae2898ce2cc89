#include "schubert/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "schubert/errors.hpp"

namespace schubert {

char alphabet_char(Alphabet a) {
    switch (a) {
        case Alphabet::X: return 'x';
        case Alphabet::T: return 't';
        case Alphabet::A: return 'a';
    }
    return '?';
}

Monomial::Monomial(std::vector<std::pair<VarRef, int>> factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i].second <= 0)
            throw std::invalid_argument("monomial exponents must be positive");
        if (i && factors_[i - 1].first == factors_[i].first)
            throw std::invalid_argument("duplicate variable in monomial");
        if (factors_[i].first.index < 1)
            throw std::invalid_argument("variable index must be >= 1");
    }
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [v, e] : factors_) d += e;
    return d;
}

int Monomial::exponent_of(VarRef v) const {
    for (const auto& [w, e] : factors_)
        if (w == v) return e;
    return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    auto ia = a.factors_.begin(), ea = a.factors_.end();
    auto ib = b.factors_.begin(), eb = b.factors_.end();
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ia->first < ib->first)) {
            out.factors_.push_back(*ia++);
        } else if (ia == ea || ib->first < ia->first) {
            out.factors_.push_back(*ib++);
        } else {
            out.factors_.emplace_back(ia->first, ia->second + ib->second);
            ++ia;
            ++ib;
        }
    }
    return out;
}

bool Monomial::operator<(const Monomial& b) const {
    int da = degree(), db = b.degree();
    if (da != db) return da < db;
    return factors_ < b.factors_;
}

std::string Monomial::to_string() const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : factors_) {
        if (!first) os << '*';
        first = false;
        os << alphabet_char(v.alphabet) << v.index;
        if (e > 1) os << '^' << e;
    }
    return os.str();
}

Polynomial Polynomial::constant(mpz_class c) {
    Polynomial p;
    if (c != 0) p.terms_.emplace(Monomial{}, std::move(c));
    return p;
}

Polynomial Polynomial::variable(VarRef v) {
    Polynomial p;
    p.terms_.emplace(Monomial({{v, 1}}), 1);
    return p;
}

Polynomial Polynomial::linear_difference(VarRef a, VarRef b) {
    Polynomial p = variable(a);
    p.add_term(Monomial({{b, 1}}), -1);
    return p;
}

std::optional<int> Polynomial::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool Polynomial::is_homogeneous(int d) const {
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

void Polynomial::add_term(const Monomial& m, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
    for (const auto& [m, c] : q.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
    for (const auto& [m, c] : q.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    Polynomial out;
    for (const auto& [mp, cp] : p.terms())
        for (const auto& [mq, cq] : q.terms())
            out.add_term(mp * mq, cp * cq);
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial Polynomial::scaled(const mpz_class& c) const {
    Polynomial out;
    if (c == 0) return out;
    for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
    return out;
}

Polynomial Polynomial::substitute(const std::map<VarRef, Polynomial>& assignment) const {
    // Power cache keyed by (variable, exponent).
    std::map<std::pair<VarRef, int>, Polynomial> powers;
    auto power = [&](VarRef v, int e) -> const Polynomial& {
        const Polynomial& base = assignment.at(v);
        for (int k = 1; k <= e; ++k) {
            auto key = std::make_pair(v, k);
            if (powers.count(key)) continue;
            powers.emplace(key, k == 1 ? base : powers.at({v, k - 1}) * base);
        }
        return powers.at({v, e});
    };

    Polynomial out;
    for (const auto& [m, c] : terms_) {
        Monomial fixed;  // variables left unchanged
        Polynomial factor = Polynomial::constant(1);
        for (const auto& [v, e] : m.factors()) {
            if (assignment.count(v)) {
                factor = factor * power(v, e);
            } else {
                fixed = fixed * Monomial({{v, e}});
            }
        }
        for (const auto& [mf, cf] : factor.terms())
            out.add_term(fixed * mf, c * cf);
    }
    return out;
}

Polynomial Polynomial::rename(const std::function<VarRef(VarRef)>& f) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        // The map need not be injective (e.g. x_1 -> t_2 alongside an
        // existing t_2), so merge exponents.
        std::map<VarRef, int> merged;
        for (const auto& [v, e] : m.factors()) merged[f(v)] += e;
        std::vector<std::pair<VarRef, int>> factors(merged.begin(), merged.end());
        out.add_term(Monomial(std::move(factors)), c);
    }
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    // Highest-degree terms first reads more naturally.
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        mpz_class abs_c = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (m.is_one()) {
            os << abs_c.get_str();
        } else {
            if (abs_c != 1) os << abs_c.get_str() << '*';
            os << m.to_string();
        }
    }
    return os.str();
}

Polynomial exact_divide_linear(const Polynomial& p, VarRef a, VarRef b) {
    if (a == b) throw std::invalid_argument("exact_divide_linear: identical variables");
    if (p.is_zero()) return {};

    // Split p = sum_k c_k * a^k with c_k free of a.
    std::map<int, Polynomial> by_deg;
    for (const auto& [m, c] : p.terms()) {
        int e = m.exponent_of(a);
        std::vector<std::pair<VarRef, int>> rest;
        for (const auto& [v, k] : m.factors())
            if (v != a) rest.emplace_back(v, k);
        by_deg[e].add_term(Monomial(std::move(rest)), c);
    }

    int d = by_deg.rbegin()->first;
    if (d == 0)
        throw NotDivisibleError("exact_divide_linear: dividend free of the leading variable");

    // Synthetic division by (a - b): q_{k-1} = c_k + b*q_k, remainder c_0 + b*q_0.
    Polynomial bvar = Polynomial::variable(b);
    Polynomial quotient;
    Polynomial carry;  // q_k while descending
    for (int k = d; k >= 1; --k) {
        Polynomial ck;
        if (auto it = by_deg.find(k); it != by_deg.end()) ck = it->second;
        Polynomial qk = ck + bvar * carry;
        Monomial ak = k > 1 ? Monomial({{a, k - 1}}) : Monomial{};
        for (const auto& [m, c] : qk.terms()) quotient.add_term(ak * m, c);
        carry = std::move(qk);
    }
    Polynomial remainder = bvar * carry;
    if (auto it = by_deg.find(0); it != by_deg.end()) remainder += it->second;
    if (!remainder.is_zero())
        throw NotDivisibleError("exact_divide_linear: nonzero remainder");
    return quotient;
}

}  // namespace schubert
