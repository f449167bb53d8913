#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "cycov/covers.hpp"

namespace cycov {
namespace {

struct Sweep {
    long d = 0;
    long n = 0;
    long min_genus = 0;
    long max_genus = 0;
    std::vector<long> gcd_with_d;  // gcd(d, x) for x in 0..d-1
    Indices tuple;
    std::set<std::pair<long, BranchingData>>* out = nullptr;

    void visit(std::size_t pos, long partial_sum, long partial_gcd_sum, long partial_gcd)
    {
        if (pos + 1 == static_cast<std::size_t>(n)) {
            const long last = (d - partial_sum % d) % d;
            if (last == 0) return;
            if (std::gcd(partial_gcd, last) != 1) return;
            const long twice = d * (n - 2) + 2 - partial_gcd_sum - gcd_with_d[static_cast<std::size_t>(last)];
            const long g = twice / 2;
            if (g < min_genus || g > max_genus) return;
            tuple[pos] = last;
            out->insert({g, normalize(BranchingData::make(d, tuple))});
            return;
        }
        for (long x = 1; x < d; ++x) {
            tuple[pos] = x;
            visit(pos + 1, partial_sum + x, partial_gcd_sum + gcd_with_d[static_cast<std::size_t>(x)],
                  std::gcd(partial_gcd, x));
        }
    }
};

}  // namespace

std::vector<EnumeratedCover> enumerate(const EnumerateOptions& options)
{
    const long G = options.max_genus;
    if (G < 2) throw Error("max genus must be at least 2, got " + std::to_string(G));
    const long gmin = std::max<long>(2, options.min_genus);
    if (options.punctures && *options.punctures < 3)
        throw Error("at least 3 punctures required, got " + std::to_string(*options.punctures));

    const long n_lo = options.punctures ? *options.punctures : 3;
    const long n_hi = options.punctures ? *options.punctures : 2 * G + 2;

    std::set<std::pair<long, BranchingData>> found;
    for (long n = n_lo; n <= n_hi; ++n) {
        long lo = -1, hi = -1;
        for (long g = gmin; g <= G; ++g) {
            const auto bd = degree_bounds(g, n);
            if (bd.lower > bd.upper) continue;
            lo = lo < 0 ? bd.lower : std::min(lo, bd.lower);
            hi = std::max(hi, bd.upper);
        }
        if (lo < 0) continue;
        for (long d = std::max<long>(lo, 2); d <= hi; ++d) {
            Sweep s;
            s.d = d;
            s.n = n;
            s.min_genus = gmin;
            s.max_genus = G;
            s.gcd_with_d.resize(static_cast<std::size_t>(d));
            for (long x = 0; x < d; ++x) s.gcd_with_d[static_cast<std::size_t>(x)] = std::gcd(d, x);
            s.tuple.assign(static_cast<std::size_t>(n), 0);
            s.out = &found;
            s.visit(0, 0, 0, d);
        }
    }

    std::vector<EnumeratedCover> out;
    if (options.equivalence == Equivalence::Dihedral) {
        for (auto& [g, b] : found) out.push_back({b, g});
    }
    else {
        std::set<std::pair<long, BranchingData>> coarse;
        for (auto& [g, b] : found) coarse.insert({g, normalize_multiset(b)});
        for (auto& [g, b] : coarse) out.push_back({b, g});
    }
    std::sort(out.begin(), out.end(), [](const EnumeratedCover& x, const EnumeratedCover& y) {
        if (x.genus != y.genus) return x.genus < y.genus;
        if (x.cover.n() != y.cover.n()) return x.cover.n() < y.cover.n();
        if (x.cover.d() != y.cover.d()) return x.cover.d() < y.cover.d();
        return x.cover.indices() < y.cover.indices();
    });
    return out;
}

}  // namespace cycov
