#include "cycov/conemetrics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace cycov {

void Divisor::add(const PointLabel& p, long order)
{
    if (order == 0) return;
    auto it = entries_.find(p);
    if (it == entries_.end()) {
        entries_.emplace(p, order);
        return;
    }
    it->second += order;
    if (it->second == 0) entries_.erase(it);
}

long Divisor::at(const PointLabel& p) const
{
    auto it = entries_.find(p);
    return it == entries_.end() ? 0 : it->second;
}

long Divisor::degree() const
{
    long s = 0;
    for (const auto& [p, k] : entries_) s += k;
    return s;
}

bool Divisor::effective() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.second >= 0; });
}

std::string Divisor::str(const BranchingData& b) const
{
    if (entries_.empty()) return "0";
    std::string out;
    for (const auto& [p, k] : entries_) {
        std::string term = "p" + std::to_string(p.puncture + 1);
        if (std::gcd(b.d(), b.index(p.puncture)) > 1) term += "," + std::to_string(p.sheet_class);
        if (!out.empty()) out += k < 0 ? "-" : "+";
        else if (k < 0) out += "-";
        const long m = k < 0 ? -k : k;
        out += (m == 1 ? "" : std::to_string(m) + "*") + term;
    }
    return out;
}

Divisor operator+(const Divisor& x, const Divisor& y)
{
    Divisor out = x;
    for (const auto& [p, k] : y.entries_) out.add(p, k);
    return out;
}

Divisor operator*(long k, const Divisor& x)
{
    Divisor out;
    for (const auto& [p, m] : x.entries_) out.add(p, k * m);
    return out;
}

std::vector<ConeMetric> all_admissible(const BranchingData& b)
{
    const long d = b.d();
    const std::size_t n = b.n();
    const long target = d * (static_cast<long>(n) - 2);
    std::set<std::pair<long, std::vector<long>>> found;
    for (long mu = 1; mu < d; ++mu) {
        std::vector<long> base(n);
        long sum = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const long r = (mu * b.index(i)) % d;
            base[i] = r == 0 ? d : r;
            sum += base[i];
        }
        if (sum > target) continue;
        const long extra = (target - sum) / d;
        std::vector<long> a = base;
        std::function<void(std::size_t, long)> spread = [&](std::size_t i, long left) {
            if (i + 1 == n) {
                a[i] = base[i] + d * left;
                found.insert({mu, a});
                return;
            }
            for (long k = 0; k <= left; ++k) {
                a[i] = base[i] + d * k;
                spread(i + 1, left - k);
            }
        };
        spread(0, extra);
    }
    std::vector<ConeMetric> out;
    out.reserve(found.size());
    for (auto& [mu, a] : found) out.push_back({b, a, mu});
    return out;
}

bool is_admissible_oracle(const BranchingData& b, const std::vector<long>& a)
{
    const long d = b.d();
    const std::size_t n = b.n();
    if (a.size() != n) return false;
    long sum = 0;
    for (long x : a) {
        if (x < 1) return false;
        sum += x;
    }
    if (sum != d * (static_cast<long>(n) - 2)) return false;
    auto mod = [d](long x) { return ((x % d) + d) % d; };
    // d*e_i for every i, then d_j*e_i - d_i*e_j
    for (std::size_t i = 0; i < n; ++i)
        if (mod(d * a[i]) != 0) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (mod(b.index(j) * a[i] - b.index(i) * a[j]) != 0) return false;
    return true;
}

long admissible_multiplier(const BranchingData& b, const std::vector<long>& a)
{
    const long d = b.d();
    const std::size_t n = b.n();
    if (a.size() != n) return -1;
    long sum = 0;
    for (long x : a) {
        if (x < 1) return -1;
        sum += x;
    }
    if (sum != d * (static_cast<long>(n) - 2)) return -1;
    for (long mu = 1; mu < d; ++mu) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) ok = (mu * b.index(i) - a[i]) % d == 0;
        if (ok) return mu;
    }
    return -1;
}

ConeMetric make_metric(const BranchingData& b, const std::vector<long>& a)
{
    const long mu = admissible_multiplier(b, a);
    if (mu < 0) {
        std::string s;
        for (long x : a) s += (s.empty() ? "" : ",") + std::to_string(x);
        throw Error("cone metric (" + s + ") is not admissible for " + b.str());
    }
    return {b, a, mu};
}

Divisor divisor_of(const ConeMetric& m)
{
    const long d = m.base.d();
    Divisor out;
    for (std::size_t i = 0; i < m.a.size(); ++i) {
        const long g = std::gcd(d, m.base.index(i));
        if (m.a[i] % g != 0)
            throw InternalError("cone angle " + std::to_string(m.a[i]) + " at p" + std::to_string(i + 1) +
                                " not divisible by " + std::to_string(g));
        const long order = m.a[i] / g - 1;
        for (long s = 0; s < g; ++s) out.add({i, s}, order);
    }
    return out;
}

CountCheck count_checks(const BranchingData& b)
{
    CountCheck c;
    c.count = static_cast<long>(all_admissible(b).size());
    c.genus = genus(b);
    c.exactly_g = c.count == c.genus;
    c.at_least_g = c.count >= c.genus;
    return c;
}

InvolutionPairing involution_pairing(const BranchingData& b)
{
    if (b.n() != 3) throw Error("involution pairing needs exactly 3 punctures, got " + std::to_string(b.n()));
    const long d = b.d();
    InvolutionPairing out;
    out.genus = genus(b);
    bool sums_ok = true;
    for (long mu = 1; mu < d; ++mu) {
        std::vector<long> r(3);
        long sum = 0;
        bool zero = false;
        for (std::size_t i = 0; i < 3; ++i) {
            r[i] = (mu * b.index(i)) % d;
            zero = zero || r[i] == 0;
            sum += r[i];
        }
        if (zero) continue;
        ++out.zero_free_residues;
        if (sum == d) {
            std::vector<long> partner(3);
            long psum = 0;
            for (std::size_t i = 0; i < 3; ++i) psum += partner[i] = d - r[i];
            sums_ok = sums_ok && psum == 2 * d && !is_admissible_oracle(b, partner);
            out.pairs.push_back({r, partner});
        }
        else {
            sums_ok = sums_ok && sum == 2 * d;
        }
    }
    out.consistent = sums_ok && out.zero_free_residues == 2 * out.genus &&
                     static_cast<long>(out.pairs.size()) == out.genus;
    return out;
}

std::string monomial_str(const Monomial& m)
{
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (int k = 0; k < m[i]; ++k) out += (out.empty() ? "" : "*") + std::string("w") + std::to_string(i + 1);
    }
    return out.empty() ? "1" : out;
}

std::vector<MonomialRelation> monomial_relations(const std::vector<Divisor>& divisors, int k)
{
    if (k < 2) throw Error("relation degree must be at least 2, got " + std::to_string(k));
    const std::size_t m = divisors.size();
    std::vector<Monomial> monos;
    Monomial cur(m, 0);
    std::function<void(std::size_t, int)> gen = [&](std::size_t i, int left) {
        if (i + 1 >= m) {
            if (m > 0) {
                cur[m - 1] = left;
                monos.push_back(cur);
            }
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[i] = e;
            gen(i + 1, left - e);
        }
    };
    gen(0, k);

    std::vector<Divisor> sums;
    sums.reserve(monos.size());
    for (const auto& mono : monos) {
        Divisor s;
        for (std::size_t i = 0; i < m; ++i) s = s + static_cast<long>(mono[i]) * divisors[i];
        sums.push_back(std::move(s));
    }
    auto pure = [k](const Monomial& mono) { return std::find(mono.begin(), mono.end(), k) != mono.end(); };
    std::vector<MonomialRelation> out;
    for (std::size_t i = 0; i < monos.size(); ++i)
        for (std::size_t j = i + 1; j < monos.size(); ++j)
            if (sums[i] == sums[j]) out.push_back({monos[i], monos[j], sums[i], pure(monos[i]) || pure(monos[j])});
    return out;
}

}  // namespace cycov
