#include "schubert/selftest.hpp"

#include <functional>
#include <string>

#include "schubert/expand.hpp"
#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/positivity.hpp"
#include "schubert/table.hpp"

namespace schubert {

namespace {

Polynomial X(int i) { return Polynomial::variable(xvar(i)); }
Polynomial T(int i) { return Polynomial::variable(tvar(i)); }
Polynomial A(int i) { return Polynomial::variable(avar(i)); }
Permutation P(std::vector<int> w) { return Permutation(std::move(w)); }

struct Harness {
    std::ostream& out;
    bool ok = true;

    void check(const std::string& name, bool passed) {
        out << (passed ? "ok   " : "FAIL ") << name << '\n';
        if (!passed) ok = false;
    }
};

}  // namespace

bool run_selftest(std::ostream& out, bool inject_failure) {
    Harness h{out};

    // Permutation fixtures.
    h.check("compose [2,1,3]*[1,3,2] = [2,3,1]", P({2, 1, 3}) * P({1, 3, 2}) == P({2, 3, 1}));
    h.check("inverse [2,3,1] = [3,1,2]", P({2, 3, 1}).inverse() == P({3, 1, 2}));
    h.check("rank [2,1,3](1,1) = 0", P({2, 1, 3}).rank(1, 1) == 0);
    h.check("rank [3,1,2](2,2) = 1", P({3, 1, 2}).rank(2, 2) == 1);
    h.check("bruhat [2,1,3] <= [3,2,1]", bruhat_leq(P({2, 1, 3}), P({3, 2, 1})));
    h.check("bruhat [2,1,3] !<= [1,3,2]", !bruhat_leq(P({2, 1, 3}), P({1, 3, 2})));

    // Polynomial ring fixtures.
    h.check("(x1-t1)(x1+t1) = x1^2-t1^2",
            (X(1) - T(1)) * (X(1) + T(1)) == X(1) * X(1) - T(1) * T(1));
    {
        std::map<VarRef, Polynomial> s{{xvar(1), T(2)}};
        h.check("substitute x1->t2 in x1-t1", (X(1) - T(1)).substitute(s) == T(2) - T(1));
    }
    {
        std::map<VarRef, Polynomial> s{{tvar(1), Polynomial{}}, {tvar(2), A(1)}};
        h.check("substitute t1->0, t2->a1 in t2-t1", (T(2) - T(1)).substitute(s) == A(1));
    }
    h.check("(x1^2-x2^2)/(x1-x2) = x1+x2",
            exact_divide_linear(X(1) * X(1) - X(2) * X(2), xvar(1), xvar(2)) == X(1) + X(2));
    h.check("(x1-t1)(x2-t1) homogeneous of degree 2",
            ((X(1) - T(1)) * (X(2) - T(1))).is_homogeneous(2));

    // Schubert table fixtures.
    SchubertTable t2(2);
    SchubertTable t3(3);
    Polynomial top3 = (X(1) - T(1)) * (X(1) - T(2)) * (X(2) - T(1));
    h.check("d1 of n=3 top class", divided_difference(1, top3) == (X(1) - T(1)) * (X(2) - T(1)));
    h.check("n=2 entry [2,1] = x1-t1", t2.entry(P({2, 1})) == X(1) - T(1));
    h.check("n=2 entry [1,2] = 1", t2.entry(P({1, 2})) == Polynomial::constant(1));
    h.check("n=3 entry [2,3,1]", t3.entry(P({2, 3, 1})) == (X(1) - T(1)) * (X(2) - T(1)));
    h.check("n=3 entry [3,1,2]", t3.entry(P({3, 1, 2})) == (X(1) - T(1)) * (X(1) - T(2)));
    Polynomial loc21 = inject_failure ? T(1) - T(2) : T(2) - T(1);
    h.check("localize [2,1] at [2,1] = t2-t1", t2.localize(P({2, 1}), P({2, 1})) == loc21);
    h.check("localize [2,1,3] at [1,3,2] = 0",
            t3.localize(P({2, 1, 3}), P({1, 3, 2})).is_zero());
    {
        RestrictionVector r = t2.restriction(P({2, 1}));
        h.check("restriction n=2 [2,1]",
                r.values[t2.index_of(P({1, 2}))].is_zero() &&
                    r.values[t2.index_of(P({2, 1}))] == T(2) - T(1));
        RestrictionVector o = t2.opposite_restriction(P({2, 1}));
        h.check("opposite restriction n=2 [2,1]",
                o.values[t2.index_of(P({1, 2}))] == T(1) - T(2) &&
                    o.values[t2.index_of(P({2, 1}))].is_zero());
    }
    {
        RestrictionVector o = t3.opposite_restriction(P({2, 1, 3}));
        h.check("opposite restriction n=3 [2,1,3] at w0 = 0",
                o.values[t3.index_of(P({3, 2, 1}))].is_zero());
    }

    // Expansion fixtures.
    {
        Expansion e = structure_constants(t2, P({2, 1}), P({2, 1}));
        h.check("n=2 s1*s1 = (t2-t1) s1",
                e.coefficients.size() == 1 && e.coefficient(P({2, 1})) == T(2) - T(1));
    }
    {
        Expansion e = structure_constants(t3, P({2, 1, 3}), P({2, 1, 3}));
        h.check("n=3 s1*s1 expansion",
                e.coefficients.size() == 2 && e.coefficient(P({2, 1, 3})) == T(2) - T(1) &&
                    e.coefficient(P({3, 1, 2})) == Polynomial::constant(1));
    }
    {
        RestrictionVector ones{2, {Polynomial::constant(1), Polynomial::constant(1)}};
        h.check("n=2 pushforward of 1 = 0", pushforward(t2, ones).is_zero());
        h.check("n=2 pushforward of opposite [2,1] = 1",
                pushforward(t2, t2.opposite_restriction(P({2, 1}))) == Polynomial::constant(1));
        h.check("n=2 pushforward of restriction [2,1] = 1",
                pushforward(t2, t2.restriction(P({2, 1}))) == Polynomial::constant(1));
    }
    {
        SchubertTable t1(1);
        h.check("duality at the unit = 1",
                duality_constant(t1, P({1}), P({1}), P({1})) == Polynomial::constant(1));
        h.check("n=2 duality s1,s1,s1 = t2-t1",
                duality_constant(t2, P({2, 1}), P({2, 1}), P({2, 1})) == T(2) - T(1));
        h.check("n=2 duality id,id,s1 = 0",
                duality_constant(t2, P({1, 2}), P({1, 2}), P({2, 1})).is_zero());
    }

    // Positivity fixtures.
    h.check("to_alpha(t2-t1) = a1", to_alpha(T(2) - T(1), 2) == A(1));
    h.check("to_alpha(t3-t1) = a1+a2", to_alpha(T(3) - T(1), 3) == A(1) + A(2));
    h.check("to_alpha((t2-t1)^2) = a1^2",
            to_alpha((T(2) - T(1)) * (T(2) - T(1)), 2) == A(1) * A(1));
    h.check("a1^2-a2 is not Graham positive",
            !is_graham_positive(A(1) * A(1) - A(2)).positive);
    {
        PositivityReport r2 = verify_all(t2, {.jobs = 1});
        h.check("verify n=2 all positive", r2.all_positive);
        h.check("verify n=2 c_{s1,s1}^{s1} = a1",
                to_alpha(structure_constants(t2, P({2, 1}), P({2, 1})).coefficient(P({2, 1})),
                         2) == A(1));
        PositivityReport r3 = verify_all(t3, {.jobs = 1});
        h.check("verify n=3: 21 pairs, all positive", r3.all_positive && r3.pairs_checked == 21);
    }

    // Oracle agreement, exhaustive at n=3.
    {
        bool agree = true;
        for (const auto& u : t3.group())
            for (const auto& v : t3.group()) {
                Expansion e = structure_constants(t3, u, v);
                for (const auto& w : t3.group())
                    if (duality_constant(t3, u, v, w) != e.coefficient(w)) agree = false;
            }
        h.check("duality oracle agrees at n=3 (216 triples)", agree);
    }

    out << (h.ok ? "selftest: all checks passed\n" : "selftest: FAILURES\n");
    return h.ok;
}

}  // namespace schubert
