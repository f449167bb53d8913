#include "cycov/wronski.hpp"

#include <algorithm>
#include <numeric>

namespace cycov {

PunctureConfig default_punctures(std::size_t n)
{
    PunctureConfig c;
    c.p.emplace_back(0);
    for (long k = 1; c.p.size() < n; ++k) {
        c.p.emplace_back(k);
        if (c.p.size() < n) c.p.emplace_back(-k);
    }
    return c;
}

WeightMismatch::WeightMismatch(long computed, long expected)
    : InternalError("total weight " + std::to_string(computed) + " differs from (g-1)g(g+1) = " +
                    std::to_string(expected)),
      computed_(computed),
      expected_(expected)
{
}

namespace {

void check_punctures(const PunctureConfig& pc, std::size_t n)
{
    if (pc.p.size() != n)
        throw Error(std::to_string(pc.p.size()) + " puncture positions given for " + std::to_string(n) + " punctures");
    std::vector<Rational> s = pc.p;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw Error("puncture positions must be distinct");
}

// P_0 = 1, P_{j+1} = N P_j / d + P_j' D - j P_j D'
std::vector<Polynomial> derivative_rows(const BranchingData& b, const ConeMetric& m, const PunctureConfig& pc,
                                        const Polynomial& D, std::size_t count)
{
    const std::size_t n = b.n();
    Polynomial N;
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial term = Polynomial::constant(Rational(m.a[i]));
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) term = term * Polynomial::linear(pc.p[j]);
        N += term;
    }
    const Polynomial Dp = D.derivative();
    const Rational inv_d = Rational(1, b.d());
    std::vector<Polynomial> rows{Polynomial::constant(1)};
    while (rows.size() < count) {
        const Polynomial& P = rows.back();
        const long j = static_cast<long>(rows.size()) - 1;
        rows.push_back((N * P).scaled(inv_d) + P.derivative() * D - (P * Dp).scaled(Rational(j)));
    }
    return rows;
}

Polynomial determinant(const std::vector<std::vector<Polynomial>>& M)
{
    const std::size_t m = M.size();
    if (m == 0) return Polynomial::constant(1);
    std::vector<Polynomial> dp(std::size_t{1} << m);
    dp[0] = Polynomial::constant(1);
    for (std::size_t mask = 0; mask < dp.size(); ++mask) {
        if (dp[mask].is_zero()) continue;
        const std::size_t col = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (col == m) continue;
        for (std::size_t r = 0; r < m; ++r) {
            if (mask & (std::size_t{1} << r)) continue;
            if (M[r][col].is_zero()) continue;
            const int above = __builtin_popcountll(mask >> (r + 1));
            Polynomial t = dp[mask] * M[r][col];
            if (above % 2) dp[mask | (std::size_t{1} << r)] -= t;
            else dp[mask | (std::size_t{1} << r)] += t;
        }
    }
    return dp.back();
}

struct ChartResult {
    Polynomial w1;
    Rational scalar;
    std::vector<Rational> beta;
    std::vector<Rational> b;
    std::vector<long> weights;
};

ChartResult run_chart(const BranchingData& b, const std::vector<ConeMetric>& metrics, const PunctureConfig& pc,
                      long g)
{
    const Polynomial det = wronski_numerator(b, metrics, pc);
    if (det.is_zero()) throw Error("Wronskian vanishes identically; the metrics give dependent 1-forms");
    const long d = b.d();
    const long h = g * (g - 1) / 2;
    ChartResult r;
    Polynomial rest = det;
    for (std::size_t i = 0; i < b.n(); ++i) {
        Rational beta;
        for (const auto& m : metrics) beta += Rational(m.a[i], d);
        const int ord = multiplicity(rest, pc.p[i]);
        rest = deflate(rest, pc.p[i], ord);
        const Rational bi = beta + Rational(ord - h);
        const long gi = std::gcd(d, b.index(i));
        const Rational wt = Rational(d / gi) * (Rational(h) + bi) - Rational(g * (g + 1) / 2);
        if (!wt.is_integer() || wt.sign() < 0)
            throw InternalError("weight " + wt.str() + " at p" + std::to_string(i + 1) + " of " + b.str() +
                                " is not a nonnegative integer");
        r.beta.push_back(beta);
        r.b.push_back(bi);
        r.weights.push_back(wt.to_long());
    }
    for (std::size_t i = 0; i < b.n(); ++i)
        if (rest(pc.p[i]).is_zero()) throw InternalError("W1 still vanishes at a puncture after deflation");
    r.scalar = rest.leading();
    r.w1 = rest.monic();
    return r;
}

}  // namespace

Polynomial wronski_numerator(const BranchingData& b, const std::vector<ConeMetric>& metrics,
                             const PunctureConfig& punctures)
{
    check_punctures(punctures, b.n());
    const std::vector<long> exps(b.n(), 1);
    const Polynomial D = Polynomial::from_roots(punctures.p, exps);
    std::vector<std::vector<Polynomial>> M;
    for (const auto& m : metrics) {
        if (m.a.size() != b.n()) throw Error("metric length does not match the number of punctures");
        M.push_back(derivative_rows(b, m, punctures, D, metrics.size()));
    }
    return determinant(M);
}

WronskiReport wronskian(const BranchingData& b, const std::vector<ConeMetric>& metrics,
                        const PunctureConfig& punctures)
{
    const long g = genus(b);
    if (g < 2) throw Error("Wronski computation needs genus at least 2, " + b.str() + " has genus " + std::to_string(g));
    if (static_cast<long>(metrics.size()) != g)
        throw Error(std::to_string(metrics.size()) + " metrics given, genus is " + std::to_string(g));
    for (const auto& m : metrics) {
        if (!(m.base == b)) throw Error("metric belongs to " + m.base.str() + ", not " + b.str());
        if (admissible_multiplier(b, m.a) < 0) throw Error("non-admissible metric in the basis");
    }
    check_punctures(punctures, b.n());

    WronskiReport rep;
    rep.genus = g;
    rep.degree = b.d();
    rep.preimage_counts = summarize(b).preimage_counts;
    rep.punctures = punctures;

    ChartResult z = run_chart(b, metrics, punctures, g);
    rep.w1 = z.w1;
    rep.w1_scalar = z.scalar;
    rep.branch_exponents = z.beta;
    rep.b = z.b;
    rep.weights = z.weights;

    const RootFactorization rf = rational_roots(rep.w1);
    for (const auto& r : rf.roots) rep.extra_points.push_back({Polynomial::linear(r.root), r.root, r.multiplicity});
    for (const auto& f : squarefree_decomposition(rf.cofactor))
        rep.extra_points.push_back({f.factor, std::nullopt, f.multiplicity});

    long c = 1;
    auto taken = [&](long x) {
        const Rational rx(x);
        if (std::find(punctures.p.begin(), punctures.p.end(), rx) != punctures.p.end()) return true;
        return std::any_of(rf.roots.begin(), rf.roots.end(), [&](const RationalRoot& r) { return r.root == rx; });
    };
    while (taken(c)) ++c;
    rep.mobius_center = c;

    PunctureConfig q;
    for (const auto& p : punctures.p) q.p.push_back(Rational(1) / (p - Rational(c)));
    ChartResult w = run_chart(b, metrics, q, g);
    if (w.weights != z.weights) throw InternalError("cone-point weights differ between charts for " + b.str());
    rep.infinity_weight = multiplicity(w.w1, Rational(0));
    return rep;
}

long total_weight(const WronskiReport& report, const BranchingData& b, long g)
{
    long total = 0;
    for (std::size_t i = 0; i < report.weights.size(); ++i) total += std::gcd(b.d(), b.index(i)) * report.weights[i];
    long off = 0;
    for (const auto& e : report.extra_points) off += e.multiplicity * e.factor.degree();
    total += b.d() * off + b.d() * report.infinity_weight;
    const long expected = (g - 1) * g * (g + 1);
    if (total != expected) throw WeightMismatch(total, expected);
    return total;
}

std::vector<long> weight_multiset(const WronskiReport& report)
{
    std::vector<long> w;
    for (std::size_t i = 0; i < report.weights.size(); ++i)
        if (report.weights[i] > 0) w.insert(w.end(), static_cast<std::size_t>(report.preimage_counts[i]), report.weights[i]);
    for (const auto& e : report.extra_points)
        w.insert(w.end(), static_cast<std::size_t>(report.degree * e.factor.degree()), e.multiplicity);
    if (report.infinity_weight > 0)
        w.insert(w.end(), static_cast<std::size_t>(report.degree), report.infinity_weight);
    std::sort(w.rbegin(), w.rend());
    return w;
}

bool hyperelliptic_test(const WronskiReport& report, long g)
{
    const std::vector<long> w = weight_multiset(report);
    const long h = g * (g - 1) / 2;
    return static_cast<long>(w.size()) == 2 * g + 2 && std::all_of(w.begin(), w.end(), [h](long x) { return x == h; });
}

std::vector<ConeMetric> default_basis(const BranchingData& b)
{
    const long g = genus(b);
    std::vector<ConeMetric> all = all_admissible(b);
    if (static_cast<long>(all.size()) < g)
        throw Error(b.str() + " has " + std::to_string(all.size()) + " admissible metrics, fewer than genus " +
                    std::to_string(g));
    if (static_cast<long>(all.size()) == g) return all;
    const PunctureConfig pc = default_punctures(b.n());
    std::vector<ConeMetric> chosen;
    for (const auto& m : all) {
        chosen.push_back(m);
        if (wronski_numerator(b, chosen, pc).is_zero()) chosen.pop_back();
        if (static_cast<long>(chosen.size()) == g) return chosen;
    }
    throw Error(b.str() + ": admissible metrics span fewer than " + std::to_string(g) + " dimensions");
}

}  // namespace cycov
