#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "schubert/expand.hpp"
#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/positivity.hpp"

namespace schubert {

nlohmann::json perm_to_json(const Permutation& w);
Permutation perm_from_json(const nlohmann::json& j);

// Array of terms {"m": [[alphabet, index, exponent], ...], "c": "decimal"}
// sorted by the canonical monomial order; the zero polynomial is [].
nlohmann::json poly_to_json(const Polynomial& p);
Polynomial poly_from_json(const nlohmann::json& j);

// {"n": N, "u": [...], "v": [...], "terms": [{"w": [...], "coeff_t": ...}]}
// with terms sorted by (length(w), lex one-line w).
nlohmann::json expansion_to_json(const Expansion& e);
Expansion expansion_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const PositivityReport& report);

}  // namespace schubert
