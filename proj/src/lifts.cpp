#include "cycov/lifts.hpp"

#include <algorithm>
#include <numeric>

namespace cycov {

std::vector<std::vector<std::size_t>> dihedral_maps(std::size_t n)
{
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<std::size_t> rot(n), ref(n);
        for (std::size_t i = 0; i < n; ++i) {
            rot[i] = (i + k) % n;
            ref[i] = (k + n - i) % n;
        }
        out.push_back(rot);
        out.push_back(ref);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

IndexMap IndexMap::make(const BranchingData& source, const BranchingData& target, std::vector<std::size_t> phi)
{
    if (phi.size() != source.n())
        throw Error("index map has " + std::to_string(phi.size()) + " entries for " + std::to_string(source.n()) +
                    " punctures");
    if (source.n() != target.n()) throw Error("source and target have different numbers of punctures");
    std::vector<std::size_t> sorted = phi;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != i) throw Error("index map is not a bijection of the punctures");
    if (source == target) {
        const auto maps = dihedral_maps(source.n());
        if (std::find(maps.begin(), maps.end(), phi) == maps.end())
            throw Error("index map is not a rotation or reflection of the branch-cut order");
    }
    return IndexMap(source, target, std::move(phi));
}

IndexMap IndexMap::identity(const BranchingData& b)
{
    std::vector<std::size_t> phi(b.n());
    std::iota(phi.begin(), phi.end(), std::size_t{0});
    return IndexMap(b, b, std::move(phi));
}

long IndexMap::perm_order() const
{
    if (!is_endomorphism()) return 0;
    std::vector<std::size_t> cur = phi_;
    for (long t = 1;; ++t) {
        bool id = true;
        for (std::size_t i = 0; i < cur.size() && id; ++i) id = cur[i] == i;
        if (id) return t;
        for (auto& x : cur) x = phi_[x];
    }
}

std::vector<long> compatible_mus(const IndexMap& m)
{
    const long dp = m.target().d();
    std::vector<long> out;
    for (long mu = 0; mu < dp; ++mu) {
        bool ok = true;
        for (std::size_t i = 0; i < m.phi().size() && ok; ++i)
            ok = ((m.target().index(m.phi()[i]) - mu * m.source().index(i)) % dp + dp) % dp == 0;
        if (ok) out.push_back(mu);
    }
    return out;
}

long affine_order(const AffineLift& lift)
{
    const long d = lift.modulus;
    if (d < 1) throw Error("affine lift modulus must be positive");
    const long mu = ((lift.mu % d) + d) % d;
    const long nu = ((lift.nu % d) + d) % d;
    if (std::gcd(mu, d) != 1) throw Error("multiplier " + std::to_string(lift.mu) + " is not invertible mod " +
                                          std::to_string(d) + "; not a deck-compatible lift");
    // iterate (a, b) with j -> a*j + b until it is the identity
    long a = mu, b = nu;
    for (long t = 1;; ++t) {
        if (a % d == 1 % d && b % d == 0) return t;
        a = (a * mu) % d;
        b = (b * mu + nu) % d;
    }
}

namespace {

void require_compatible(const IndexMap& m, const AffineLift& lift)
{
    if (lift.modulus != m.target().d()) throw Error("lift modulus does not match the target degree");
    const auto mus = compatible_mus(m);
    const long mu = ((lift.mu % lift.modulus) + lift.modulus) % lift.modulus;
    if (std::find(mus.begin(), mus.end(), mu) == mus.end())
        throw Error("multiplier " + std::to_string(lift.mu) + " violates the compatibility congruence");
}

}  // namespace

long lift_order(const IndexMap& m, const AffineLift& lift)
{
    if (!m.is_endomorphism()) throw Error("lift order needs source and target to coincide");
    require_compatible(m, lift);
    return std::lcm(m.perm_order(), affine_order(lift));
}

LabelAction preimage_action(const IndexMap& m, const AffineLift& lift)
{
    if (!m.is_endomorphism()) throw Error("label action needs source and target to coincide");
    require_compatible(m, lift);
    const BranchingData& b = m.source();
    const long d = b.d();
    LabelAction out;
    for (std::size_t i = 0; i < b.n(); ++i) {
        const long gi = std::gcd(d, b.index(i));
        const std::size_t t = m.phi()[i];
        const long gt = std::gcd(d, b.index(t));
        for (long s = 0; s < gi; ++s) {
            const long img = (((lift.mu * s + lift.nu) % gt) + gt) % gt;
            out.map[{i, s}] = {t, img};
        }
    }
    for (const auto& [p, q] : out.map) {
        if (p == q) out.fixed.push_back(p);
        else if (p < q && out.map.at(q) == p) out.swaps.emplace_back(p, q);
    }
    return out;
}

std::vector<LiftEntry> enumerate_lifts(const IndexMap& m)
{
    const long d = m.target().d();
    std::vector<LiftEntry> out;
    std::vector<std::map<PointLabel, PointLabel>> classes;
    for (long mu : compatible_mus(m)) {
        if (mu == 0 || std::gcd(mu, d) != 1) continue;
        for (long nu = 0; nu < d; ++nu) {
            LiftEntry e{{mu, nu, d}, 0, 0};
            if (m.is_endomorphism()) {
                e.order = lift_order(m, e.lift);
                auto act = preimage_action(m, e.lift).map;
                auto it = std::find(classes.begin(), classes.end(), act);
                e.label_class = static_cast<std::size_t>(it - classes.begin());
                if (it == classes.end()) classes.push_back(std::move(act));
            }
            out.push_back(e);
        }
    }
    return out;
}

}  // namespace cycov
