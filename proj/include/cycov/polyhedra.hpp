#pragma once

// Symmetric quotient graphs, tiling genus, and the catalog of regular
// triply periodic polyhedral surfaces.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cycov/covers.hpp"

namespace cycov {

struct GraphParams {
    long g = 0;
    long v = 0;
    long d = 0;
    long e = 0;
    /// Edge list of a representative multigraph, when one is stored.
    std::optional<std::vector<std::pair<int, int>>> edges;
};

/// Sorted by v. Throws for g < 2.
std::vector<GraphParams> quotient_graph_params(long g);

/// Genus of a closed surface tiled by `faces` regular p-gons, q at each
/// vertex. Throws when the counts cannot close up.
long tiling_genus(long p, long q, long faces);

struct Schlafli {
    long p = 0;
    long q = 0;
    std::optional<long> r;
    /// Other symbols the same surface has been given; non-empty means the
    /// symbol is ambiguous.
    std::vector<std::vector<long>> alternatives;
    std::string str() const;
};

struct CatalogCover {
    BranchingData cover;
    std::string note;
};

struct CatalogEntry {
    std::string name;
    Schlafli schlafli;
    long fundamental_faces = 0;
    std::vector<CatalogCover> covers;
    std::string decoration;
    std::string source_note;
};

const std::vector<CatalogEntry>& catalog();

/// Case-insensitive name match.
std::optional<CatalogEntry> lookup(const std::string& name);

nlohmann::json catalog_to_json(const std::vector<CatalogEntry>& entries);
/// Throws on malformed input, including invalid covers.
std::vector<CatalogEntry> catalog_from_json(const nlohmann::json& j);

/// One message per inconsistency: tiling genus vs cover genus, and covers
/// of one entry with different genera. Empty means consistent.
std::vector<std::string> check_catalog(const std::vector<CatalogEntry>& entries);

}  // namespace cycov
