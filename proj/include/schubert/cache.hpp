#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "schubert/expand.hpp"

namespace schubert {

// Content-addressed store of expansion results, one JSON file per
// (n, u, v) key.  Concurrent readers are fine; writes go through a
// temp-file rename.
class ExpansionCache {
public:
    explicit ExpansionCache(std::filesystem::path dir);

    // Resolution order: explicit flag, SCHUBERT_CACHE_DIR, ".schubert-cache".
    static std::filesystem::path resolve_dir(const std::string& flag_value);

    std::optional<Expansion> load(int n, const Permutation& u, const Permutation& v) const;
    void store(const Expansion& e) const;

    std::filesystem::path path_for(int n, const Permutation& u, const Permutation& v) const;

private:
    std::filesystem::path dir_;
};

// Expansion with read-through caching.
Expansion cached_structure_constants(const SchubertTable& table, const Permutation& u,
                                     const Permutation& v, const ExpansionCache& cache);

}  // namespace schubert
