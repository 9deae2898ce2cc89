#include "schubert/cache.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "schubert/json_io.hpp"

namespace schubert {

namespace {

// FNV-1a, stable across platforms and runs.
std::string stable_hash(const std::string& key) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : key) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

}  // namespace

ExpansionCache::ExpansionCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
}

std::filesystem::path ExpansionCache::resolve_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("SCHUBERT_CACHE_DIR"); env && *env) return env;
    return ".schubert-cache";
}

std::filesystem::path ExpansionCache::path_for(int n, const Permutation& u,
                                               const Permutation& v) const {
    std::ostringstream key;
    key << "n=" << n << ";u=" << u.to_string() << ";v=" << v.to_string();
    return dir_ / ("expansion-" + stable_hash(key.str()) + ".json");
}

std::optional<Expansion> ExpansionCache::load(int n, const Permutation& u,
                                              const Permutation& v) const {
    auto path = path_for(n, u, v);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    nlohmann::json j;
    in >> j;
    Expansion e = expansion_from_json(j);
    // Hash collisions and stale files both show up as a key mismatch.
    if (e.n != n || e.u != u || e.v != v) return std::nullopt;
    return e;
}

void ExpansionCache::store(const Expansion& e) const {
    auto path = path_for(e.n, e.u, e.v);
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        out << expansion_to_json(e).dump(2) << '\n';
    }
    std::filesystem::rename(tmp, path);
}

Expansion cached_structure_constants(const SchubertTable& table, const Permutation& u,
                                     const Permutation& v, const ExpansionCache& cache) {
    if (auto hit = cache.load(table.n(), u, v)) return *hit;
    Expansion e = structure_constants(table, u, v);
    cache.store(e);
    return e;
}

}  // namespace schubert
