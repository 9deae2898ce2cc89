#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace schubert {

// Three variable alphabets: x (Chern roots), t (equivariant parameters),
// a (simple roots alpha_i).
enum class Alphabet : std::uint8_t { X = 0, T = 1, A = 2 };

char alphabet_char(Alphabet a);

struct VarRef {
    Alphabet alphabet;
    int index;  // >= 1

    auto operator<=>(const VarRef&) const = default;
};

inline VarRef xvar(int i) { return {Alphabet::X, i}; }
inline VarRef tvar(int i) { return {Alphabet::T, i}; }
inline VarRef avar(int i) { return {Alphabet::A, i}; }

// Product of variable powers; factors sorted by VarRef, exponents > 0.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::pair<VarRef, int>> factors);

    const std::vector<std::pair<VarRef, int>>& factors() const { return factors_; }
    int degree() const;
    bool is_one() const { return factors_.empty(); }
    int exponent_of(VarRef v) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    bool operator==(const Monomial&) const = default;

    // Graded order: total degree first, then the factor sequence
    // lexicographically.  Fixed once for deterministic serialization.
    bool operator<(const Monomial& b) const;

    std::string to_string() const;

private:
    std::vector<std::pair<VarRef, int>> factors_;
};

// Sparse multivariate polynomial with exact arbitrary-precision integer
// coefficients.  Canonical: no zero coefficients are stored, so equal
// polynomials have identical term maps.
class Polynomial {
public:
    using TermMap = std::map<Monomial, mpz_class>;

    Polynomial() = default;

    static Polynomial constant(mpz_class c);
    static Polynomial variable(VarRef v);
    // var_a - var_b
    static Polynomial linear_difference(VarRef a, VarRef b);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // None for the zero polynomial.
    std::optional<int> total_degree() const;
    bool is_homogeneous(int d) const;

    void add_term(const Monomial& m, const mpz_class& c);

    Polynomial& operator+=(const Polynomial& q);
    Polynomial& operator-=(const Polynomial& q);
    friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
    friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
    Polynomial operator-() const;
    Polynomial scaled(const mpz_class& c) const;

    bool operator==(const Polynomial&) const = default;

    // Simultaneous substitution with respect to the original polynomial;
    // variables absent from the assignment map to themselves.
    Polynomial substitute(const std::map<VarRef, Polynomial>& assignment) const;

    // Variable renaming, a cheap special case of substitute.
    Polynomial rename(const std::function<VarRef(VarRef)>& f) const;

    std::string to_string() const;

private:
    TermMap terms_;
};

// Exact quotient of p by (var_a - var_b) via synthetic division along a.
// Throws NotDivisibleError if a remainder is left.
Polynomial exact_divide_linear(const Polynomial& p, VarRef a, VarRef b);

}  // namespace schubert
