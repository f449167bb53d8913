#include "cycov/polyhedra.hpp"

#include <algorithm>
#include <cctype>

namespace cycov {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

std::optional<EdgeList> stored_graph(long g, long v)
{
    if (g != 3 && g != 4) return std::nullopt;
    EdgeList e;
    if (v == 1) {
        for (long k = 0; k < g; ++k) e.emplace_back(0, 0);
    }
    else if (v == 2) {
        for (long k = 0; k < g + 1; ++k) e.emplace_back(0, 1);
    }
    else if (g == 3 && v == 4) {
        e = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    }
    else if (g == 4 && v == 3) {
        e = {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {0, 2}, {0, 2}};
    }
    else if (g == 4 && v == 6) {
        for (int a = 0; a < 3; ++a)
            for (int b = 3; b < 6; ++b) e.emplace_back(a, b);
    }
    else {
        return std::nullopt;
    }
    return e;
}

}  // namespace

std::vector<GraphParams> quotient_graph_params(long g)
{
    if (g < 2) throw Error("quotient graphs need genus at least 2, got " + std::to_string(g));
    std::vector<GraphParams> out;
    const long m = 2 * g - 2;
    for (long v = 1; v <= m; ++v) {
        if (m % v != 0) continue;
        const long d = m / v + 2;
        out.push_back({g, v, d, v * d / 2, stored_graph(g, v)});
    }
    return out;
}

long tiling_genus(long p, long q, long faces)
{
    if (p < 3 || q < 3 || faces < 1) throw Error("tiling needs p >= 3, q >= 3 and at least one face");
    const long corners = p * faces;
    if (corners % q != 0 || corners % 2 != 0) throw Error("counts incompatible with a closed regular tiling");
    const long V = corners / q, E = corners / 2;
    const long chi = V - E + faces;
    if (chi % 2 != 0 || chi > 2) throw Error("counts incompatible with a closed regular tiling");
    return 1 - chi / 2;
}

std::string Schlafli::str() const
{
    std::string s = "{" + std::to_string(p) + "," + std::to_string(q);
    if (r) s += "|" + std::to_string(*r);
    return s + "}";
}

namespace {

CatalogCover cover(long d, Indices idx, std::string note)
{
    return {BranchingData::make(d, std::move(idx)), std::move(note)};
}

std::vector<CatalogEntry> build_catalog()
{
    const std::string from_metric = "cover read off the cone metric of the fundamental piece";
    const std::string none = "cover not identified";
    std::vector<CatalogEntry> c;
    c.push_back({"Octa-4", {3, 8, 3, {}}, 32, {cover(8, {1, 2, 5}, "")},
                 "two octahedra joined by four triangular anti-prisms along tetrahedral directions", from_metric});
    c.push_back({"Mucube", {4, 6, 4, {}}, 12,
                 {cover(6, {1, 3, 5, 3}, "sixfold"), cover(4, {1, 1, 3, 3}, "fourfold")},
                 "cube with six square prisms", from_metric});
    c.push_back({"Muoctahedron", {6, 4, 4, {}}, 8,
                 {cover(6, {1, 3, 5, 3}, "sixfold"), cover(4, {1, 1, 3, 3}, "fourfold")},
                 "truncated octahedra glued along square faces", from_metric + "; face count derived from the tiling"});
    c.push_back({"Mutetrahedron", {6, 6, 3, {{6, 3, 3}}}, 4,
                 {cover(6, {1, 3, 5, 3}, "sixfold"), cover(4, {1, 1, 3, 3}, "fourfold")},
                 "tetrahedron and truncated tetrahedron glued along triangles",
                 from_metric + "; symbol also given as {6,3|3}, which does not close up at genus 3"});
    c.push_back({"Octahedron with six anti-prisms", {3, 10, 3, {}}, 20, {},
                 "octahedron with six triangular anti-prisms on a one-vertex quotient graph", none});
    c.push_back({"Two icosahedra with four anti-prisms", {3, 7, 3, {}}, 56, {},
                 "two icosahedra joined by four triangular anti-prisms", none});
    c.push_back({"Two tetrahedra with anti-prisms", {3, 9, 3, {}}, 24, {},
                 "two tetrahedra joined by triangular anti-prisms", none});
    c.push_back({"Two cubes with four prisms", {4, 5, 4, {}}, 20, {},
                 "two cubes joined by square prisms on two pairs of opposite faces", none});
    c.push_back({"Two octahedra with four anti-prisms", {3, 8, 3, {}}, 32, {},
                 "two octahedra joined by anti-prisms on two pairs of opposite faces", none});
    c.push_back({"Octa-8", {3, 12, 3, {}}, 24, {cover(12, {1, 4, 7}, "")},
                 "octahedron with eight triangular anti-prisms", from_metric});
    c.push_back({"Icosahedron with eight anti-prisms", {3, 9, 3, {}}, 36, {},
                 "icosahedron with eight triangular anti-prisms", none});
    c.push_back({"Truncated Octa-8", {4, 5, 6, {}}, 30, {cover(5, {1, 2, 4, 3}, "")},
                 "truncated octahedron with eight hexagonal prisms", from_metric + "; face count derived from the tiling"});
    c.push_back({"Three cubes with four prisms", {4, 5, 4, {}}, 30, {},
                 "three cubes joined by square prisms", none});
    c.push_back({"Three octahedra with four anti-prisms", {3, 8, 3, {}}, 48, {},
                 "three octahedra joined by triangular anti-prisms", none});
    c.push_back({"Klein quartic", {3, 7, std::nullopt, {}}, 56, {cover(7, {1, 2, 4}, "")},
                 "abstract regular map, not a polyhedral surface", "cover from the order-seven symmetry"});
    return c;
}

std::string lower(std::string s)
{
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    return s;
}

}  // namespace

const std::vector<CatalogEntry>& catalog()
{
    static const std::vector<CatalogEntry> entries = [] {
        auto c = build_catalog();
        const auto problems = check_catalog(c);
        if (!problems.empty()) throw InternalError("built-in catalog inconsistent: " + problems.front());
        return c;
    }();
    return entries;
}

std::optional<CatalogEntry> lookup(const std::string& name)
{
    const std::string key = lower(name);
    for (const auto& e : catalog())
        if (lower(e.name) == key) return e;
    return std::nullopt;
}

std::vector<std::string> check_catalog(const std::vector<CatalogEntry>& entries)
{
    std::vector<std::string> problems;
    for (const auto& e : entries) {
        long tg = -1;
        try {
            tg = tiling_genus(e.schlafli.p, e.schlafli.q, e.fundamental_faces);
        }
        catch (const Error& err) {
            problems.push_back(e.name + ": " + err.what());
            continue;
        }
        for (const auto& c : e.covers) {
            const long cg = genus(c.cover);
            if (cg != tg)
                problems.push_back(e.name + ": cover " + c.cover.str() + " has genus " + std::to_string(cg) +
                                   " but the tiling " + e.schlafli.str() + " with " +
                                   std::to_string(e.fundamental_faces) + " faces has genus " + std::to_string(tg));
        }
    }
    return problems;
}

nlohmann::json catalog_to_json(const std::vector<CatalogEntry>& entries)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : entries) {
        nlohmann::json s = {{"p", e.schlafli.p}, {"q", e.schlafli.q}, {"alternatives", e.schlafli.alternatives},
                            {"ambiguous", !e.schlafli.alternatives.empty()}};
        s["r"] = e.schlafli.r ? nlohmann::json(*e.schlafli.r) : nlohmann::json(nullptr);
        nlohmann::json covers = nlohmann::json::array();
        for (const auto& c : e.covers)
            covers.push_back({{"d", c.cover.d()}, {"indices", c.cover.indices()}, {"note", c.note}});
        arr.push_back({{"name", e.name},
                       {"schlafli", s},
                       {"fundamental_faces", e.fundamental_faces},
                       {"covers", covers},
                       {"decoration", e.decoration},
                       {"source_note", e.source_note}});
    }
    return arr;
}

std::vector<CatalogEntry> catalog_from_json(const nlohmann::json& j)
{
    if (!j.is_array()) throw Error("catalog JSON must be an array");
    std::vector<CatalogEntry> out;
    try {
        for (const auto& x : j) {
            CatalogEntry e;
            e.name = x.at("name").get<std::string>();
            const auto& s = x.at("schlafli");
            e.schlafli.p = s.at("p").get<long>();
            e.schlafli.q = s.at("q").get<long>();
            if (s.contains("r") && !s.at("r").is_null()) e.schlafli.r = s.at("r").get<long>();
            if (s.contains("alternatives")) e.schlafli.alternatives = s.at("alternatives").get<std::vector<std::vector<long>>>();
            e.fundamental_faces = x.at("fundamental_faces").get<long>();
            for (const auto& c : x.at("covers"))
                e.covers.push_back({BranchingData::make(c.at("d").get<long>(), c.at("indices").get<Indices>()),
                                    c.value("note", std::string())});
            e.decoration = x.value("decoration", std::string());
            e.source_note = x.value("source_note", std::string());
            out.push_back(std::move(e));
        }
    }
    catch (const nlohmann::json::exception& err) {
        throw Error(std::string("malformed catalog JSON: ") + err.what());
    }
    return out;
}

}  // namespace cycov
