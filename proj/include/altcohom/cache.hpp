#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "altcohom/fn.hpp"

namespace altcohom::cache {

// Bumped whenever the stored layout or the computation behind it changes; older files are misses.
inline constexpr int kSchemaVersion = 1;

struct Key {
    Variant variant = Variant::FNA;
    int n = 0, degree = 0;
    auto operator<=>(const Key&) const = default;
    std::string str() const;  // "FNA-n8-d6"
};

// Cohomology of one (variant, n, degree) cell: representatives as bit vectors over `cells`.
struct CohomologyRecord {
    Key key;
    std::vector<Cell> cells;
    std::vector<BitVec> reps;
    std::size_t cocycle_dim = 0, coboundary_rank = 0;
    bool operator==(const CohomologyRecord&) const = default;
    std::size_t dim() const { return reps.size(); }
    std::vector<Cochain> representatives() const;
};

CohomologyRecord record_of(const CohomologyBasis& basis);

// Canonical JSON text (sorted keys, hex bit payloads, little-endian word order).
std::string to_json(const CohomologyRecord& r);
// Throws std::runtime_error on malformed input or a schema version other than kSchemaVersion.
CohomologyRecord from_json(const std::string& text);

std::string hex_encode(const BitVec& v);
BitVec hex_decode(const std::string& hex, std::size_t bits);

class Cache {
public:
    // No directory, or a directory that does not exist: in-memory only.
    explicit Cache(std::optional<std::filesystem::path> dir = std::nullopt);
    // directory from ALTCOHOM_CACHE
    static Cache from_env();

    bool persistent() const { return dir_.has_value(); }
    std::optional<CohomologyRecord> get(const Key& k);
    void put(const CohomologyRecord& r);
    // get, or compute with cohomology() and store
    CohomologyRecord cohomology(const Key& k);

    std::filesystem::path path_for(const Key& k) const;
    const std::vector<std::string>& warnings() const { return warnings_; }

private:
    std::optional<std::filesystem::path> dir_;
    std::map<Key, CohomologyRecord> memory_;
    std::vector<std::string> warnings_;
};

}  // namespace altcohom::cache
