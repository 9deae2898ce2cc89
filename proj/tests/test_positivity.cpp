#include <doctest.h>

#include "schubert/errors.hpp"
#include "schubert/positivity.hpp"

using namespace schubert;

namespace {
Polynomial T(int i) { return Polynomial::variable(tvar(i)); }
Polynomial A(int i) { return Polynomial::variable(avar(i)); }
Permutation P(std::vector<int> w) { return Permutation(std::move(w)); }
}

TEST_CASE("to_alpha on fixtures") {
    CHECK(to_alpha(T(2) - T(1), 2) == A(1));
    CHECK(to_alpha(T(3) - T(1), 3) == A(1) + A(2));
    CHECK(to_alpha((T(2) - T(1)) * (T(2) - T(1)), 2) == A(1) * A(1));
    CHECK(to_alpha(Polynomial{}, 3).is_zero());
    CHECK(to_alpha(Polynomial::constant(7), 3) == Polynomial::constant(7));
}

TEST_CASE("to_alpha rejects non-translation-invariant input") {
    CHECK_THROWS_AS(to_alpha(T(1), 2), NotTranslationInvariantError);
    CHECK_THROWS_AS(to_alpha(T(1) * T(2), 3), NotTranslationInvariantError);
    CHECK(is_translation_invariant(T(3) - T(2), 3));
    CHECK_FALSE(is_translation_invariant(T(3) + T(2), 3));
}

TEST_CASE("alpha round trip") {
    SchubertTable t3(3);
    for (const auto& u : t3.group())
        for (const auto& v : t3.group()) {
            Expansion e = structure_constants(t3, u, v);
            for (const auto& [w, c] : e.coefficients) {
                Polynomial a = to_alpha(c, 3);
                CHECK(from_alpha(a) == c);
                // Specialization consistency: alpha -> 0 equals t -> 0.
                Polynomial a0 = a.substitute({{avar(1), {}}, {avar(2), {}}});
                Polynomial c0 = c.substitute({{tvar(1), {}}, {tvar(2), {}}, {tvar(3), {}}});
                CHECK(a0 == c0);
            }
        }
}

TEST_CASE("graham positivity certificates") {
    CHECK(is_graham_positive(A(1)).positive);
    CHECK(is_graham_positive(Polynomial{}).positive);

    auto bad = is_graham_positive(A(1) * A(1) - A(2));
    CHECK_FALSE(bad.positive);
    REQUIRE(bad.terms.size() == 1);
    CHECK(bad.terms[0].first == Monomial({{avar(2), 1}}));
    CHECK(bad.terms[0].second == -1);

    // Positive certificate carries the full expansion.
    auto good = is_graham_positive(A(1) * A(1) + A(2));
    CHECK(good.positive);
    CHECK(good.terms.size() == 2);
}

TEST_CASE("verify_all at small ranks") {
    SchubertTable t1(1);
    PositivityReport r1 = verify_all(t1, {.jobs = 1});
    CHECK(r1.pairs_checked == 1);
    CHECK(r1.nonzero_constants == 1);
    CHECK(r1.all_positive);

    SchubertTable t2(2);
    PositivityReport r2 = verify_all(t2, {.jobs = 1});
    CHECK(r2.all_positive);
    CHECK(r2.pairs_checked == 3);

    SchubertTable t3(3);
    PositivityReport r3 = verify_all(t3, {.jobs = 2, .sample_audit = true});
    CHECK(r3.all_positive);
    CHECK(r3.pairs_checked == 21);
    CHECK(r3.violations.empty());
    CHECK(r3.max_coefficient >= 1);
}

TEST_CASE("verify_all is deterministic apart from timing") {
    SchubertTable t3(3);
    PositivityReport a = verify_all(t3, {.jobs = 2});
    PositivityReport b = verify_all(t3, {.jobs = 1});
    CHECK(a.pairs_checked == b.pairs_checked);
    CHECK(a.nonzero_constants == b.nonzero_constants);
    CHECK(a.max_coefficient == b.max_coefficient);
    CHECK(a.all_positive == b.all_positive);
}
