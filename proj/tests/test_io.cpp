#include <doctest.h>

#include <filesystem>
#include <nlohmann/json.hpp>
#include <random>

#include "schubert/cache.hpp"
#include "schubert/json_io.hpp"

using namespace schubert;
using nlohmann::json;

namespace {
Permutation P(std::vector<int> w) { return Permutation(std::move(w)); }

Polynomial random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 6), coeff(-50, 50), expo(0, 2);
    Polynomial p;
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        std::vector<std::pair<VarRef, int>> factors;
        for (int i = 1; i <= 3; ++i) {
            if (int e = expo(rng); e > 1) factors.emplace_back(tvar(i), e - 1);
            if (int e = expo(rng); e > 1) factors.emplace_back(avar(i), e - 1);
        }
        p.add_term(Monomial(std::move(factors)), coeff(rng));
    }
    return p;
}
}  // namespace

TEST_CASE("permutation JSON") {
    CHECK(perm_to_json(P({2, 1, 3})).dump() == "[2,1,3]");
    CHECK(perm_from_json(json::parse("[2,1,3]")) == P({2, 1, 3}));
    CHECK_THROWS(perm_from_json(json::parse("[1,1,3]")));
    CHECK_THROWS(perm_from_json(json::parse("{\"w\": 1}")));
}

TEST_CASE("polynomial JSON round trip") {
    CHECK(poly_to_json(Polynomial{}).dump() == "[]");
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 50; ++trial) {
        Polynomial p = random_poly(rng);
        CHECK(poly_from_json(poly_to_json(p)) == p);
        // Canonical form means serialization is deterministic.
        CHECK(poly_to_json(p).dump() == poly_to_json(poly_from_json(poly_to_json(p))).dump());
    }
    // Coefficients travel as decimal strings, not numbers.
    Polynomial big = Polynomial::constant(mpz_class("123456789012345678901234567890"));
    json j = poly_to_json(big);
    CHECK(j[0]["c"] == "123456789012345678901234567890");
    CHECK(poly_from_json(j) == big);
}

TEST_CASE("expansion JSON shape and ordering") {
    SchubertTable t3(3);
    Expansion e = structure_constants(t3, P({2, 1, 3}), P({2, 1, 3}));
    json j = expansion_to_json(e);
    CHECK(j["n"] == 3);
    CHECK(j["u"].dump() == "[2,1,3]");
    REQUIRE(j["terms"].size() == 2);
    // Sorted by (length, lex word): [2,1,3] before [3,1,2].
    CHECK(j["terms"][0]["w"].dump() == "[2,1,3]");
    CHECK(j["terms"][1]["w"].dump() == "[3,1,2]");

    Expansion back = expansion_from_json(j);
    CHECK(back.coefficients == e.coefficients);
    CHECK(back.u == e.u);
}

TEST_CASE("expansion cache round trip") {
    auto dir = std::filesystem::temp_directory_path() / "schubert-cache-test";
    std::filesystem::remove_all(dir);
    ExpansionCache cache(dir);
    SchubertTable t3(3);

    Permutation u = P({3, 1, 2}), v = P({2, 3, 1});
    CHECK_FALSE(cache.load(3, u, v).has_value());
    Expansion fresh = cached_structure_constants(t3, u, v, cache);
    CHECK(std::filesystem::exists(cache.path_for(3, u, v)));

    auto hit = cache.load(3, u, v);
    REQUIRE(hit.has_value());
    CHECK(hit->coefficients == fresh.coefficients);

    // Different keys land in different files.
    CHECK(cache.path_for(3, u, v) != cache.path_for(3, v, u));
    std::filesystem::remove_all(dir);
}

TEST_CASE("cache dir resolution order") {
    CHECK(ExpansionCache::resolve_dir("/explicit/dir") == "/explicit/dir");
    ::setenv("SCHUBERT_CACHE_DIR", "/from/env", 1);
    CHECK(ExpansionCache::resolve_dir("") == "/from/env");
    ::unsetenv("SCHUBERT_CACHE_DIR");
    CHECK(ExpansionCache::resolve_dir("") == ".schubert-cache");
}

TEST_CASE("report JSON") {
    SchubertTable t2(2);
    PositivityReport r = verify_all(t2, {.jobs = 1});
    json j = report_to_json(r);
    CHECK(j["n"] == 2);
    CHECK(j["all_positive"] == true);
    CHECK(j["pairs_checked"] == 3);
    CHECK(j["violations"].is_array());
    CHECK(j["max_coefficient"].is_string());
}
