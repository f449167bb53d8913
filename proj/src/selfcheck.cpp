#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "cycov/cli.hpp"
#include "cycov/conemetrics.hpp"
#include "cycov/covers.hpp"
#include "cycov/polyhedra.hpp"
#include "cycov/reference.hpp"
#include "cycov/wronski.hpp"

namespace cycov {

namespace {

using Key = std::pair<long, Indices>;

std::string key_str(const Key& k)
{
    std::string s = std::to_string(k.first) + " {";
    for (std::size_t i = 0; i < k.second.size(); ++i) s += (i ? "," : "") + std::to_string(k.second[i]);
    return s + "}";
}

std::string diff_str(const std::set<Key>& got, const std::set<Key>& want)
{
    std::string extra, missing;
    for (const auto& k : got)
        if (!want.count(k)) extra += (extra.empty() ? "" : ", ") + key_str(k);
    for (const auto& k : want)
        if (!got.count(k)) missing += (missing.empty() ? "" : ", ") + key_str(k);
    std::string s;
    if (!extra.empty()) s += "unexpected: " + extra;
    if (!missing.empty()) s += std::string(s.empty() ? "" : "; ") + "missing: " + missing;
    return s;
}

SuiteResult golden_triples(long G)
{
    SuiteResult r{"golden_triples", true, ""};
    const long top = std::min<long>(G, 5);
    if (top < 3) {
        r.detail = "no published triples below genus 3";
        return r;
    }
    std::set<Key> got, want;
    for (const auto& c : enumerate({top, 3, 3, Equivalence::Dihedral})) got.insert({c.cover.d(), c.cover.indices()});
    for (const auto& p : published_triples())
        if (p.genus <= top) want.insert({p.d, p.indices});
    r.passed = got == want;
    r.detail = r.passed ? std::to_string(got.size()) + " triples match" : diff_str(got, want);
    return r;
}

SuiteResult golden_tables(long G)
{
    SuiteResult r{"golden_tables", true, ""};
    std::string notes;
    for (long g = 3; g <= std::min<long>(G, 5); ++g) {
        std::set<Key> got, want;
        for (const auto& c : enumerate({g, g, std::nullopt, Equivalence::Multiset}))
            got.insert({c.cover.d(), c.cover.indices()});
        auto add = [&](const PublishedCover& p) {
            want.insert({p.d, normalize_multiset(BranchingData::make(p.d, p.indices)).indices()});
        };
        for (const auto& p : published_table(g)) add(p);
        std::string omitted;
        for (const auto& p : published_table_omissions(g)) {
            add(p);
            omitted += (omitted.empty() ? "" : ", ") + key_str({p.d, p.indices});
        }
        if (got != want) {
            r.passed = false;
            notes += "genus " + std::to_string(g) + ": " + diff_str(got, want) + ". ";
            continue;
        }
        notes += "genus " + std::to_string(g) + ": " + std::to_string(got.size()) + " covers";
        if (!omitted.empty()) notes += " (table rows plus omitted " + omitted + ")";
        notes += ". ";
    }
    if (notes.empty()) notes = "no published tables below genus 3";
    r.detail = notes;
    return r;
}

SuiteResult oracle_equivalence(long max_d, long max_n)
{
    SuiteResult r{"oracle_equivalence", true, ""};
    long checked = 0;
    for (long d = 2; d <= max_d && r.passed; ++d) {
        for (long n = 3; n <= max_n && r.passed; ++n) {
            Indices t(static_cast<std::size_t>(n));
            // non-decreasing tuples: both sides sum over punctures independently
            std::function<void(std::size_t, long, long)> walk = [&](std::size_t pos, long lo, long sum) {
                if (!r.passed) return;
                if (pos == t.size()) {
                    if (sum % d != 0) return;
                    auto v = validate(d, t);
                    if (!v.ok()) return;
                    ++checked;
                    if (genus(*v.data) != genus_oracle(*v.data)) {
                        r.passed = false;
                        r.detail = "mismatch at " + v.data->str();
                    }
                    return;
                }
                for (long x = lo; x < d; ++x) {
                    t[pos] = x;
                    walk(pos + 1, x, sum + x);
                }
            };
            walk(0, 1, 0);
        }
    }
    if (r.passed)
        r.detail = std::to_string(checked) + " covers with d <= " + std::to_string(max_d) + ", n <= " +
                   std::to_string(max_n);
    return r;
}

SuiteResult total_weight_sweep(const std::vector<EnumeratedCover>& covers)
{
    SuiteResult r{"total_weight", true, ""};
    for (const auto& c : covers) {
        try {
            const auto basis = default_basis(c.cover);
            const auto rep = wronskian(c.cover, basis, default_punctures(c.cover.n()));
            total_weight(rep, c.cover, c.genus);
        }
        catch (const std::exception& e) {
            r.passed = false;
            r.detail = c.cover.str() + ": " + e.what();
            return r;
        }
    }
    r.detail = "(g-1)g(g+1) holds for " + std::to_string(covers.size()) + " covers";
    return r;
}

SuiteResult census(const std::vector<EnumeratedCover>& covers)
{
    SuiteResult r{"conjecture_census", true, ""};
    long triples = 0;
    for (const auto& c : covers) {
        const auto cc = count_checks(c.cover);
        if (c.cover.n() == 3) {
            ++triples;
            if (!cc.exactly_g) {
                r.passed = false;
                r.detail = c.cover.str() + ": " + std::to_string(cc.count) + " metrics, genus " + std::to_string(cc.genus);
                return r;
            }
        }
        if (!cc.at_least_g) {
            r.passed = false;
            r.detail = "count < g at " + c.cover.str() + ": " + std::to_string(cc.count) + " metrics, genus " +
                       std::to_string(cc.genus);
            return r;
        }
    }
    r.detail = ">= g holds for all " + std::to_string(covers.size()) + " covers; exactly g for all " +
               std::to_string(triples) + " triples";
    return r;
}

SuiteResult bounds(const std::vector<EnumeratedCover>& covers)
{
    SuiteResult r{"degree_bounds", true, ""};
    for (const auto& c : covers) {
        const auto b = degree_bounds(c.genus, static_cast<long>(c.cover.n()));
        if (c.cover.d() < b.lower || c.cover.d() > b.upper) {
            r.passed = false;
            r.detail = c.cover.str() + " outside [" + std::to_string(b.lower) + ", " + std::to_string(b.upper) + "]";
            return r;
        }
    }
    r.detail = std::to_string(covers.size()) + " covers within bounds";
    return r;
}

SuiteResult catalog_suite(const std::optional<std::string>& file)
{
    SuiteResult r{"catalog", true, ""};
    std::vector<CatalogEntry> entries;
    if (file) {
        std::ifstream in(*file);
        if (!in) throw Error("cannot read catalog file " + *file);
        try {
            entries = catalog_from_json(nlohmann::json::parse(in));
        }
        catch (const std::exception& e) {
            r.passed = false;
            r.detail = e.what();
            return r;
        }
    }
    else {
        entries = catalog();
    }
    const auto problems = check_catalog(entries);
    r.passed = problems.empty();
    r.detail = r.passed ? std::to_string(entries.size()) + " entries consistent" : problems.front();
    return r;
}

}  // namespace

std::vector<SuiteResult> run_selfcheck(const SelfcheckOptions& options)
{
    const long G = options.max_genus;
    if (G < 2) throw Error("selfcheck needs max genus at least 2");
    const auto covers = enumerate({G, 2, std::nullopt, Equivalence::Dihedral});
    std::vector<SuiteResult> out;
    out.push_back(golden_triples(G));
    out.push_back(golden_tables(G));
    out.push_back(oracle_equivalence(20, 6));
    out.push_back(total_weight_sweep(covers));
    out.push_back(census(covers));
    out.push_back(bounds(covers));
    out.push_back(catalog_suite(options.catalog_file));
    return out;
}

}  // namespace cycov
