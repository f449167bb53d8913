#include "cycov/exactmath.hpp"

#include <algorithm>

namespace cycov {

Polynomial::Polynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

void Polynomial::trim()
{
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree)
{
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::linear(const Rational& root) { return Polynomial({-root, Rational(1)}); }

Polynomial Polynomial::from_roots(std::span<const Rational> points, std::span<const long> exponents)
{
    if (points.size() != exponents.size()) throw Error("from_roots: size mismatch");
    Polynomial out = constant(1);
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (exponents[i] < 0) throw Error("from_roots: negative exponent");
        for (long k = 0; k < exponents[i]; ++k) out = out * linear(points[i]);
    }
    return out;
}

Rational Polynomial::coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

const Rational& Polynomial::leading() const
{
    if (c_.empty()) throw Error("leading coefficient of the zero polynomial");
    return c_.back();
}

Rational Polynomial::operator()(const Rational& x) const
{
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const
{
    if (c_.size() <= 1) return {};
    std::vector<Rational> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Polynomial(std::move(v));
}

Polynomial Polynomial::monic() const
{
    if (c_.empty()) return {};
    return scaled(Rational(1) / c_.back());
}

Polynomial Polynomial::pow(unsigned e) const
{
    Polynomial out = constant(1), base = *this;
    while (e) {
        if (e & 1U) out = out * base;
        e >>= 1U;
        if (e) base = base * base;
    }
    return out;
}

Polynomial Polynomial::scaled(const Rational& s) const
{
    if (s.is_zero()) return {};
    std::vector<Rational> v = c_;
    for (auto& x : v) x *= s;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const { return scaled(Rational(-1)); }

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> v(a.c_.size() + b.c_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i].value() * b.c_[j].value();
    }
    std::vector<Rational> r;
    r.reserve(v.size());
    for (auto& x : v) r.emplace_back(std::move(x));
    return Polynomial(std::move(r));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b)
{
    if (b.is_zero()) throw Error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial(), a};
    std::vector<Rational> rem = a.c_;
    std::vector<Rational> quo(a.c_.size() - b.c_.size() + 1);
    const Rational inv = Rational(1) / b.c_.back();
    for (std::size_t k = quo.size(); k-- > 0;) {
        const Rational q = rem[k + b.c_.size() - 1] * inv;
        quo[k] = q;
        if (q.is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= q * b.c_[j];
    }
    rem.resize(b.c_.size() - 1);
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

std::string Polynomial::str(char var) const
{
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Rational& c = c_[k];
        if (c.is_zero()) continue;
        const bool neg = c.sign() < 0;
        const Rational a = neg ? -c : c;
        if (!out.empty()) out += neg ? "-" : "+";
        else if (neg) out += "-";
        const bool unit = a == Rational(1);
        if (k == 0) {
            out += a.str();
            continue;
        }
        if (!unit) out += a.str() + "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b)
{
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        auto r = Polynomial::divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

int multiplicity(const Polynomial& p, const Rational& c)
{
    if (p.is_zero()) throw Error("multiplicity in the zero polynomial");
    int m = 0;
    Polynomial q = p;
    const Polynomial lin = Polynomial::linear(c);
    while (q.degree() >= 1 && q(c).is_zero()) {
        q = Polynomial::divmod(q, lin).first;
        ++m;
    }
    return m;
}

Polynomial deflate(const Polynomial& p, const Rational& c, int times)
{
    Polynomial q = p;
    const Polynomial lin = Polynomial::linear(c);
    for (int i = 0; i < times; ++i) {
        auto [quo, rem] = Polynomial::divmod(q, lin);
        if (!rem.is_zero() || q.is_zero()) throw Error("deflate: (x - " + c.str() + ") does not divide");
        q = std::move(quo);
    }
    return q;
}

}  // namespace cycov
