#include "schubert/json_io.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <stdexcept>

namespace schubert {

using nlohmann::json;

namespace {

std::string alphabet_name(Alphabet a) { return std::string(1, alphabet_char(a)); }

Alphabet alphabet_from_name(const std::string& s) {
    if (s == "x") return Alphabet::X;
    if (s == "t") return Alphabet::T;
    if (s == "a") return Alphabet::A;
    throw std::invalid_argument("unknown variable alphabet: " + s);
}

}  // namespace

json perm_to_json(const Permutation& w) { return json(w.word()); }

Permutation perm_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("permutation must be a JSON array");
    return Permutation(j.get<std::vector<int>>());
}

json poly_to_json(const Polynomial& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        json mono = json::array();
        for (const auto& [v, e] : m.factors())
            mono.push_back(json::array({alphabet_name(v.alphabet), v.index, e}));
        terms.push_back(json{{"m", mono}, {"c", c.get_str()}});
    }
    return terms;
}

Polynomial poly_from_json(const json& j) {
    Polynomial p;
    for (const auto& term : j) {
        std::vector<std::pair<VarRef, int>> factors;
        for (const auto& f : term.at("m"))
            factors.emplace_back(
                VarRef{alphabet_from_name(f.at(0).get<std::string>()), f.at(1).get<int>()},
                f.at(2).get<int>());
        p.add_term(Monomial(std::move(factors)), mpz_class(term.at("c").get<std::string>()));
    }
    return p;
}

json expansion_to_json(const Expansion& e) {
    json terms = json::array();
    // Expansion coefficients are keyed by word order; re-sort by
    // (length, lex) for the wire format.
    std::vector<const std::pair<const Permutation, Polynomial>*> items;
    for (const auto& kv : e.coefficients) items.push_back(&kv);
    std::sort(items.begin(), items.end(), [](const auto* a, const auto* b) {
        int la = a->first.length(), lb = b->first.length();
        if (la != lb) return la < lb;
        return a->first.word() < b->first.word();
    });
    for (const auto* kv : items)
        terms.push_back(json{{"w", perm_to_json(kv->first)}, {"coeff_t", poly_to_json(kv->second)}});
    return json{{"n", e.n},
                {"u", perm_to_json(e.u)},
                {"v", perm_to_json(e.v)},
                {"terms", terms}};
}

Expansion expansion_from_json(const json& j) {
    Expansion e{j.at("n").get<int>(), perm_from_json(j.at("u")), perm_from_json(j.at("v")), {}};
    for (const auto& term : j.at("terms"))
        e.coefficients.emplace(perm_from_json(term.at("w")), poly_from_json(term.at("coeff_t")));
    return e;
}

json report_to_json(const PositivityReport& report) {
    json violations = json::array();
    for (const auto& v : report.violations) {
        json mono = json::array();
        for (const auto& [var, e] : v.monomial.factors())
            mono.push_back(json::array({alphabet_name(var.alphabet), var.index, e}));
        violations.push_back(json{{"u", perm_to_json(v.u)},
                                  {"v", perm_to_json(v.v)},
                                  {"w", perm_to_json(v.w)},
                                  {"monomial", mono},
                                  {"coefficient", v.coefficient.get_str()}});
    }
    return json{{"n", report.n},
                {"pairs_checked", report.pairs_checked},
                {"nonzero_constants", report.nonzero_constants},
                {"all_positive", report.all_positive},
                {"violations", violations},
                {"max_coefficient", report.max_coefficient.get_str()},
                {"elapsed_seconds", report.elapsed_seconds}};
}

}  // namespace schubert
