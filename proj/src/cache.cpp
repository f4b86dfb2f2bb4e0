#include "altcohom/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace altcohom::cache {

using nlohmann::json;

std::string Key::str() const {
    return std::string(variant == Variant::FNA ? "FNA" : "FN") + "-n" + std::to_string(n) + "-d" + std::to_string(degree);
}

std::vector<Cochain> CohomologyRecord::representatives() const {
    std::vector<Cochain> out;
    for (const auto& v : reps) {
        Cochain c(key.variant, key.n);
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (v.get(i)) c.toggle(cells[i]);
        out.push_back(c);
    }
    return out;
}

CohomologyRecord record_of(const CohomologyBasis& basis) {
    CohomologyRecord r;
    r.key = {basis.variant, basis.n, basis.degree};
    r.cells = basis.cells();
    for (const auto& c : basis.reps) r.reps.push_back(basis.to_vector(c));
    r.cocycle_dim = basis.cocycle_dim;
    r.coboundary_rank = basis.coboundary_rank;
    return r;
}

std::string hex_encode(const BitVec& v) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (uint64_t w : v.words())
        for (int shift = 60; shift >= 0; shift -= 4) out += digits[(w >> shift) & 0xf];
    return out;
}

BitVec hex_decode(const std::string& hex, std::size_t bits) {
    BitVec v(bits);
    if (hex.size() != v.words().size() * 16) throw std::runtime_error("hex payload has the wrong length");
    for (std::size_t k = 0; k < v.words().size(); ++k) {
        std::size_t used = 0;
        uint64_t w = std::stoull(hex.substr(16 * k, 16), &used, 16);
        if (used != 16) throw std::runtime_error("hex payload is not hexadecimal");
        v.words()[k] = w;
    }
    if (bits % 64 && v.words().back() >> (bits % 64)) throw std::runtime_error("hex payload has bits past the end");
    return v;
}

std::string to_json(const CohomologyRecord& r) {
    json cells = json::array();
    for (const auto& c : r.cells) cells.push_back(json{{"a", c.a}, {"charge", c.charge}});
    json reps = json::array();
    for (const auto& v : r.reps) reps.push_back(hex_encode(v));
    json j{
        {"schema_version", kSchemaVersion},
        {"variant", r.key.variant == Variant::FNA ? "FNA" : "FN"},
        {"n", r.key.n},
        {"degree", r.key.degree},
        {"cells", cells},
        {"reps", reps},
        {"cocycle_dim", r.cocycle_dim},
        {"coboundary_rank", r.coboundary_rank},
    };
    return j.dump() + "\n";
}

CohomologyRecord from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("malformed cache JSON: ") + e.what());
    }
    try {
        if (j.at("schema_version").get<int>() != kSchemaVersion) throw std::runtime_error("cache schema version mismatch");
        CohomologyRecord r;
        std::string variant = j.at("variant").get<std::string>();
        if (variant != "FN" && variant != "FNA") throw std::runtime_error("unknown variant " + variant);
        r.key = {variant == "FNA" ? Variant::FNA : Variant::FN, j.at("n").get<int>(), j.at("degree").get<int>()};
        for (const auto& c : j.at("cells")) r.cells.push_back(Cell{c.at("a").get<std::vector<int>>(), c.at("charge").get<int>()});
        for (const auto& h : j.at("reps")) r.reps.push_back(hex_decode(h.get<std::string>(), r.cells.size()));
        r.cocycle_dim = j.at("cocycle_dim").get<std::size_t>();
        r.coboundary_rank = j.at("coboundary_rank").get<std::size_t>();
        return r;
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("malformed cache record: ") + e.what());
    }
}

Cache::Cache(std::optional<std::filesystem::path> dir) {
    if (dir && std::filesystem::is_directory(*dir)) dir_ = dir;
    else if (dir) warnings_.push_back("cache directory " + dir->string() + " does not exist; caching in memory only");
}

Cache Cache::from_env() {
    const char* env = std::getenv("ALTCOHOM_CACHE");
    if (!env || !*env) return Cache();
    return Cache(std::filesystem::path(env));
}

std::filesystem::path Cache::path_for(const Key& k) const {
    return (dir_ ? *dir_ : std::filesystem::path()) / (k.str() + ".json");
}

std::optional<CohomologyRecord> Cache::get(const Key& k) {
    if (auto it = memory_.find(k); it != memory_.end()) return it->second;
    if (!dir_) return std::nullopt;
    auto p = path_for(k);
    std::ifstream in(p);
    if (!in) return std::nullopt;
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    try {
        json j = json::parse(text);
        if (j.is_object() && j.contains("schema_version") && j["schema_version"] != kSchemaVersion) return std::nullopt;
        auto r = from_json(text);
        if (r.key != k) throw std::runtime_error("record key " + r.key.str() + " does not match the file name");
        memory_.emplace(k, r);
        return r;
    } catch (const std::exception& e) {
        warnings_.push_back("ignoring corrupt cache file " + p.string() + ": " + e.what());
        return std::nullopt;
    }
}

void Cache::put(const CohomologyRecord& r) {
    memory_[r.key] = r;
    if (!dir_) return;
    auto p = path_for(r.key);
    auto tmp = p;
    tmp += ".tmp" + std::to_string(std::random_device{}());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << to_json(r);
        if (!out) {
            warnings_.push_back("could not write cache file " + tmp.string());
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            return;
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, p, ec);
    if (ec) {
        warnings_.push_back("could not move cache file into place: " + ec.message());
        std::filesystem::remove(tmp, ec);
    }
}

CohomologyRecord Cache::cohomology(const Key& k) {
    if (auto r = get(k)) return *r;
    auto r = record_of(altcohom::cohomology(k.n, k.degree, k.variant));
    put(r);
    return r;
}

}  // namespace altcohom::cache
