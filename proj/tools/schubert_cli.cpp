#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "schubert/cache.hpp"
#include "schubert/errors.hpp"
#include "schubert/expand.hpp"
#include "schubert/json_io.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/positivity.hpp"
#include "schubert/selftest.hpp"
#include "schubert/table.hpp"

using namespace schubert;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

Permutation parse_perm(const std::string& text, int n, const std::string& arg_name) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception&) {
        throw CLI::ValidationError(arg_name, "expected a JSON array like [2,1,3]");
    }
    Permutation w = [&] {
        try {
            return perm_from_json(j);
        } catch (const std::invalid_argument& e) {
            throw CLI::ValidationError(arg_name, e.what());
        }
    }();
    if (w.n() != n)
        throw CLI::ValidationError(arg_name, "permutation rank does not match --n");
    return w;
}

void print_poly(const Polynomial& p, const std::string& format) {
    if (format == "json")
        std::cout << poly_to_json(p).dump() << '\n';
    else
        std::cout << p.to_string() << '\n';
}

std::string alpha_exponents(const Monomial& m, int n) {
    std::string out;
    for (int i = 1; i <= n - 1; ++i) {
        if (i > 1) out += ':';
        out += std::to_string(m.exponent_of(avar(i)));
    }
    return out;
}

void print_expansion(const Expansion& e, const std::string& format) {
    if (format == "json") {
        std::cout << expansion_to_json(e).dump() << '\n';
        return;
    }
    if (format == "csv") {
        std::cout << "n,u,v,w,alpha_exponents,coefficient\n";
        for (const auto& [w, coeff] : e.coefficients) {
            Polynomial a = to_alpha(coeff, e.n);
            for (const auto& [m, c] : a.terms()) {
                std::cout << e.n << ",\"" << e.u.to_string() << "\",\"" << e.v.to_string()
                          << "\",\"" << w.to_string() << "\"," << alpha_exponents(m, e.n) << ','
                          << c.get_str() << '\n';
            }
        }
        return;
    }
    for (const auto& [w, coeff] : e.coefficients)
        std::cout << w.to_string() << ": " << coeff.to_string() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact equivariant Schubert structure constants for S_n"};
    app.require_subcommand(1);

    int n = 0;
    std::string u_text, v_text, w_text, format = "pretty", cache_dir, report_path;
    int jobs = 0;
    bool sample_audit = false, inject_failure = false;

    auto add_common = [&](CLI::App* cmd, bool with_format = true) {
        cmd->add_option("--n", n, "ambient rank")->required()->check(CLI::PositiveNumber);
        if (with_format)
            cmd->add_option("--format", format, "output format")
                ->check(CLI::IsMember({"json", "csv", "pretty"}));
    };

    auto* poly_cmd = app.add_subcommand("poly", "print one double Schubert polynomial");
    add_common(poly_cmd);
    poly_cmd->add_option("--w", w_text, "permutation, one-line JSON array")->required();

    auto* restrict_cmd = app.add_subcommand("restrict", "restriction to a fixed point");
    add_common(restrict_cmd);
    restrict_cmd->add_option("--v", v_text, "class index")->required();
    restrict_cmd->add_option("--w", w_text, "fixed point")->required();

    auto* expand_cmd = app.add_subcommand("expand", "structure constants of a product");
    add_common(expand_cmd);
    expand_cmd->add_option("--u", u_text)->required();
    expand_cmd->add_option("--v", v_text)->required();
    expand_cmd->add_option("--cache-dir", cache_dir, "expansion cache directory");

    auto* dual_cmd = app.add_subcommand("dualcheck",
                                        "compare triangular solve against the duality pushforward");
    add_common(dual_cmd);
    dual_cmd->add_option("--u", u_text)->required();
    dual_cmd->add_option("--v", v_text)->required();
    dual_cmd->add_option("--w", w_text, "single target w (default: all of S_n)");

    auto* verify_cmd = app.add_subcommand("verify", "exhaustive Graham positivity sweep");
    add_common(verify_cmd, false);
    verify_cmd->add_option("--jobs", jobs, "worker count (default: hardware)");
    verify_cmd->add_flag("--sample-audit", sample_audit, "recompute ~1% of pairs swapped");
    verify_cmd->add_option("--report", report_path, "write the JSON report here");

    auto* selftest_cmd = app.add_subcommand("selftest", "run the embedded golden corpus");
    selftest_cmd->add_flag("--inject-failure", inject_failure)->group("");  // hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (selftest_cmd->parsed())
            return run_selftest(std::cout, inject_failure) ? kExitOk : kExitVerifyFail;

        if (poly_cmd->parsed()) {
            Permutation w = parse_perm(w_text, n, "--w");
            print_poly(SchubertTable(n).entry(w), format);
            return kExitOk;
        }
        if (restrict_cmd->parsed()) {
            Permutation v = parse_perm(v_text, n, "--v");
            Permutation w = parse_perm(w_text, n, "--w");
            print_poly(SchubertTable(n).localize(v, w), format);
            return kExitOk;
        }
        if (expand_cmd->parsed()) {
            Permutation u = parse_perm(u_text, n, "--u");
            Permutation v = parse_perm(v_text, n, "--v");
            SchubertTable table(n);
            ExpansionCache cache(ExpansionCache::resolve_dir(cache_dir));
            print_expansion(cached_structure_constants(table, u, v, cache), format);
            return kExitOk;
        }
        if (dual_cmd->parsed()) {
            Permutation u = parse_perm(u_text, n, "--u");
            Permutation v = parse_perm(v_text, n, "--v");
            SchubertTable table(n);
            Expansion e = structure_constants(table, u, v);
            std::vector<Permutation> targets;
            if (!w_text.empty())
                targets.push_back(parse_perm(w_text, n, "--w"));
            else
                targets = table.group();
            bool all_match = true;
            for (const auto& w : targets) {
                bool match = duality_constant(table, u, v, w) == e.coefficient(w);
                if (!match) all_match = false;
                std::cout << w.to_string() << ": " << (match ? "match" : "MISMATCH") << '\n';
            }
            return all_match ? kExitOk : kExitVerifyFail;
        }
        if (verify_cmd->parsed()) {
            SchubertTable table(n);
            PositivityReport report =
                verify_all(table, {.jobs = jobs, .sample_audit = sample_audit});
            json j = report_to_json(report);
            if (!report_path.empty()) {
                std::ofstream out(report_path);
                out << j.dump(2) << '\n';
            }
            std::cout << j.dump(2) << '\n';
            return report.all_positive ? kExitOk : kExitVerifyFail;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NotDivisibleError& e) {
        std::cerr << "internal assertion: " << e.what() << '\n';
        return kExitInternal;
    } catch (const NotTranslationInvariantError& e) {
        std::cerr << "internal assertion: " << e.what() << '\n';
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
