#include "cycov/covers.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cycov {

const char* to_string(ViolationKind kind)
{
    switch (kind) {
    case ViolationKind::DegreeTooSmall: return "degree_too_small";
    case ViolationKind::TooFewPunctures: return "too_few_punctures";
    case ViolationKind::IndexOutOfRange: return "index_out_of_range";
    case ViolationKind::SumNotDivisible: return "sum_not_divisible";
    case ViolationKind::Disconnected: return "disconnected";
    }
    return "unknown";
}

namespace {

std::string join_violations(const std::vector<Violation>& v)
{
    std::string out;
    for (const auto& x : v) {
        if (!out.empty()) out += "; ";
        out += x.message;
    }
    return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations, long components)
    : Error("invalid branching data: " + join_violations(violations)),
      violations_(std::move(violations)),
      components_(components)
{
}

Validation validate(long d, const Indices& indices)
{
    Validation out;
    auto add = [&](ViolationKind k, std::string msg) { out.violations.push_back({k, std::move(msg)}); };
    if (d < 2) add(ViolationKind::DegreeTooSmall, "degree " + std::to_string(d) + " is less than 2");
    if (indices.size() < 3)
        add(ViolationKind::TooFewPunctures, std::to_string(indices.size()) + " punctures, at least 3 required");
    if (!out.violations.empty()) return out;

    for (std::size_t i = 0; i < indices.size(); ++i) {
        const long x = indices[i];
        if (x < 1 || x > d - 1)
            add(ViolationKind::IndexOutOfRange, "index " + std::to_string(x) + " at position " + std::to_string(i + 1) +
                                                    " outside 1.." + std::to_string(d - 1));
    }
    long sum = 0;
    for (long x : indices) sum += x;
    if (((sum % d) + d) % d != 0)
        add(ViolationKind::SumNotDivisible, "sum " + std::to_string(sum) + " not divisible by " + std::to_string(d));
    long g = d;
    for (long x : indices) g = std::gcd(g, x);
    if (g > 1) {
        out.components = g;
        add(ViolationKind::Disconnected,
            "gcd " + std::to_string(g) + ": disconnected with " + std::to_string(g) + " components");
    }
    if (out.violations.empty()) out.data = BranchingData::make(d, indices);
    return out;
}

BranchingData BranchingData::make(long d, Indices indices)
{
    bool ok = d >= 2 && indices.size() >= 3;
    long sum = 0, g = d;
    for (long x : indices) {
        ok = ok && x >= 1 && x <= d - 1;
        sum += x;
        g = std::gcd(g, x);
    }
    ok = ok && d > 0 && sum % d == 0 && g == 1;
    if (!ok) {
        auto v = validate(d, indices);
        throw ValidationError(std::move(v.violations), v.components);
    }
    return BranchingData(d, std::move(indices));
}

std::string BranchingData::str() const
{
    std::ostringstream os;
    os << "(" << d_ << ",(";
    for (std::size_t i = 0; i < indices_.size(); ++i) os << (i ? "," : "") << indices_[i];
    os << "))";
    return os.str();
}

CoverSummary summarize(const BranchingData& b)
{
    CoverSummary s;
    const long d = b.d();
    const long n = static_cast<long>(b.n());
    long total = 0;
    for (long x : b.indices()) {
        const long g = std::gcd(d, x);
        s.preimage_counts.push_back(g);
        s.degree_at_preimage.push_back(d / g);
        total += g;
    }
    const long twice = d * (n - 2) + 2 - total;
    if (twice < 0 || twice % 2 != 0) throw InternalError("genus formula gave a non-integer for " + b.str());
    s.genus = twice / 2;
    return s;
}

long genus(const BranchingData& b) { return summarize(b).genus; }

long genus_oracle(const BranchingData& b)
{
    const long d = b.d();
    const long n = static_cast<long>(b.n());
    long vertices = d;  // sheets over the base point
    std::vector<char> seen(static_cast<std::size_t>(d));
    for (long shift : b.indices()) {
        std::fill(seen.begin(), seen.end(), 0);
        for (long j = 0; j < d; ++j) {
            if (seen[static_cast<std::size_t>(j)]) continue;
            ++vertices;
            for (long k = j; !seen[static_cast<std::size_t>(k)];) {
                seen[static_cast<std::size_t>(k)] = 1;
                k += shift;
                if (k >= d) k -= d;
            }
        }
    }
    const long edges = d * n;
    const long faces = d;
    const long chi = vertices - edges + faces;
    if (chi % 2 != 0) throw InternalError("odd Euler characteristic for " + b.str());
    return 1 - chi / 2;
}

DegreeBounds degree_bounds(long g, long n)
{
    if (g < 2) throw Error("degree bounds need genus at least 2, got " + std::to_string(g));
    if (n < 3) throw Error("degree bounds need at least 3 punctures, got " + std::to_string(n));
    if (n == 3) return {2, 84 * (g - 1)};
    if (n == 4) return {2, 12 * (g - 1)};
    // ceil(2g/(n-2) + 1) and floor(4(g-1)/(n-4))
    const long lower = (2 * g + (n - 2) - 1) / (n - 2) + 1;
    const long upper = 4 * (g - 1) / (n - 4);
    return {lower, upper};
}

namespace {

Indices scaled(const Indices& v, long a, long d)
{
    Indices out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = (a * v[i]) % d;
    return out;
}

std::vector<long> units(long d)
{
    std::vector<long> u;
    for (long a = 1; a < d; ++a)
        if (std::gcd(a, d) == 1) u.push_back(a);
    return u;
}

}  // namespace

BranchingData normalize(const BranchingData& b)
{
    const long d = b.d();
    const std::size_t n = b.n();
    Indices best = b.indices();
    const Indices rev(b.indices().rbegin(), b.indices().rend());
    Indices cand(n);
    for (long a : units(d)) {
        for (const Indices* src : {&b.indices(), &rev}) {
            const Indices s = scaled(*src, a, d);
            for (std::size_t k = 0; k < n; ++k) {
                std::rotate_copy(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(k), s.end(), cand.begin());
                if (cand < best) best = cand;
            }
        }
    }
    return BranchingData::make(d, std::move(best));
}

BranchingData normalize_multiset(const BranchingData& b)
{
    const long d = b.d();
    Indices best;
    for (long a : units(d)) {
        Indices s = scaled(b.indices(), a, d);
        std::sort(s.begin(), s.end());
        if (best.empty() || s < best) best = std::move(s);
    }
    return BranchingData::make(d, std::move(best));
}

BranchingData normalize(const BranchingData& b, Equivalence eq)
{
    return eq == Equivalence::Dihedral ? normalize(b) : normalize_multiset(b);
}

LiftClosure lift_closure(const BranchingData& b, const std::vector<long>& winding)
{
    if (winding.size() != b.n())
        throw Error("winding vector has " + std::to_string(winding.size()) + " entries, cover has " +
                    std::to_string(b.n()) + " punctures");
    const long d = b.d();
    long s = 0;
    for (std::size_t i = 0; i < winding.size(); ++i) s = (s + (winding[i] % d) * b.index(i)) % d;
    s = (s + d) % d;
    LiftClosure out;
    out.closed = s == 0;
    out.length_multiplier = s == 0 ? 1 : d / std::gcd(d, s);
    out.components = d / out.length_multiplier;
    return out;
}

}  // namespace cycov
