#include "cycov/exactmath.hpp"

#include <algorithm>

namespace cycov {
namespace {

using ZPoly = std::vector<Integer>;  // low degree first, trimmed
using PPoly = std::vector<long long>;

// Scale to integer coefficients and divide by the content.
ZPoly primitive_part(const Polynomial& p)
{
    Integer l = 1;
    for (const auto& c : p.coefficients()) l = lcm(l, c.denominator());
    ZPoly z;
    for (const auto& c : p.coefficients()) z.push_back(c.numerator() * (l / c.denominator()));
    Integer g = 0;
    for (const auto& c : z) g = gcd(g, c);
    if (sgn(z.back()) < 0) g = -g;
    for (auto& c : z) c /= g;
    return z;
}

Integer eval_mod(const ZPoly& z, const Integer& x, const Integer& m)
{
    Integer acc = 0;
    for (auto it = z.rbegin(); it != z.rend(); ++it) {
        acc = acc * x + *it;
        mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
    }
    return acc;
}

void ptrim(PPoly& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

long long inv_mod(long long a, long long p)
{
    long long r = 1, e = p - 2;
    a %= p;
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

PPoly pmod(PPoly a, const PPoly& b, long long p)
{
    const long long inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const long long q = a.back() * inv % p;
        const std::size_t off = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) a[off + j] = ((a[off + j] - q * b[j]) % p + p) % p;
        ptrim(a);
    }
    return a;
}

// Degree of gcd(a, b) mod p.
int pgcd_degree(PPoly a, PPoly b, long long p)
{
    while (!b.empty()) {
        PPoly r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return static_cast<int>(a.size()) - 1;
}

bool is_prime(long long n)
{
    if (n < 2) return false;
    for (long long k = 2; k * k <= n; ++k)
        if (n % k == 0) return false;
    return true;
}

// a/b with |a| <= n, 0 < b <= d and a = b*u mod m, when it exists.
bool reconstruct(const Integer& u, const Integer& m, const Integer& n, const Integer& d, Rational& out)
{
    Integer r0 = m, s0 = 0, r1 = u, s1 = 1;
    while (r1 > n) {
        const Integer q = r0 / r1;
        Integer t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    if (s1 == 0 || abs(s1) > d) return false;
    out = Rational(r1, s1);
    return true;
}

std::vector<Rational> squarefree_roots(ZPoly z)
{
    std::vector<Rational> found;
    if (z.front() == 0) {
        found.emplace_back(0);
        z.erase(z.begin());
    }
    if (z.size() <= 1) return found;

    const Integer lc = abs(z.back()), tc = abs(z.front());
    ZPoly dz;
    for (std::size_t i = 1; i < z.size(); ++i) dz.push_back(z[i] * static_cast<unsigned long>(i));

    long long p = 3;
    PPoly zp, dp;
    for (;; p += 2) {
        if (!is_prime(p) || mpz_divisible_ui_p(lc.get_mpz_t(), static_cast<unsigned long>(p))) continue;
        zp.clear();
        dp.clear();
        for (const auto& c : z) zp.push_back(mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(p)));
        for (const auto& c : dz) dp.push_back(mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(p)));
        ptrim(dp);
        if (dp.empty()) continue;
        if (pgcd_degree(zp, dp, p) == 0) break;
    }

    const Integer bound = 2 * std::max(lc, tc) * std::max(lc, tc);
    const Integer pz(static_cast<long>(p));
    for (long long r = 0; r < p; ++r) {
        if (eval_mod(z, Integer(static_cast<long>(r)), pz) != 0) continue;
        Integer u = static_cast<long>(r), m = pz;
        while (m <= bound) {
            m *= m;
            Integer fu = eval_mod(z, u, m), du = eval_mod(dz, u, m), inv;
            mpz_invert(inv.get_mpz_t(), du.get_mpz_t(), m.get_mpz_t());
            u = u - fu * inv;
            mpz_mod(u.get_mpz_t(), u.get_mpz_t(), m.get_mpz_t());
        }
        Rational cand;
        if (!reconstruct(u, m, std::max(lc, tc), std::max(lc, tc), cand)) continue;
        // exact check: b^n z(a/b) = 0
        const Integer a = cand.numerator(), b = cand.denominator();
        Integer acc = 0, bpow = 1;
        for (auto it = z.rbegin(); it != z.rend(); ++it) {
            acc = acc * a + *it * bpow;
            bpow *= b;
        }
        if (acc == 0) found.push_back(cand);
    }
    return found;
}

}  // namespace

RootFactorization rational_roots(const Polynomial& p)
{
    if (p.is_zero()) throw Error("rational roots of the zero polynomial");
    RootFactorization out;
    out.scalar = p.leading();
    if (p.degree() == 0) {
        out.cofactor = Polynomial::constant(1);
        return out;
    }
    const Polynomial sq = Polynomial::divmod(p, gcd(p, p.derivative())).first;
    std::vector<Rational> roots = squarefree_roots(primitive_part(sq));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());

    Polynomial rest = p.monic();
    for (const auto& r : roots) {
        const int m = multiplicity(rest, r);
        if (m == 0) throw InternalError("reconstructed root " + r.str() + " does not divide");
        rest = deflate(rest, r, m);
        out.roots.push_back({r, m});
    }
    out.cofactor = rest.monic();
    return out;
}

std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial& p)
{
    std::vector<SquarefreeFactor> out;
    if (p.degree() < 1) return out;
    const Polynomial f = p.monic();
    const Polynomial a0 = gcd(f, f.derivative());
    Polynomial b = Polynomial::divmod(f, a0).first;
    Polynomial c = Polynomial::divmod(f.derivative(), a0).first;
    Polynomial d = c - b.derivative();
    for (int i = 1; b.degree() >= 1; ++i) {
        const Polynomial a = gcd(b, d);
        b = Polynomial::divmod(b, a).first;
        c = Polynomial::divmod(d, a).first;
        d = c - b.derivative();
        if (a.degree() >= 1) out.push_back({a, i});
    }
    return out;
}

}  // namespace cycov
