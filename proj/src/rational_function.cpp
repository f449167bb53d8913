#include "cycov/exactmath.hpp"

namespace cycov {

RationalFunction::RationalFunction(const Polynomial& num) : num_(num), den_(Polynomial::constant(1)) {}

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den)
{
    if (den.is_zero()) throw Error("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = Polynomial::constant(1);
        return;
    }
    const Polynomial g = gcd(num, den);
    Polynomial n = Polynomial::divmod(num, g).first;
    Polynomial d = Polynomial::divmod(den, g).first;
    const Rational lc = d.leading();
    num_ = n.scaled(Rational(1) / lc);
    den_ = d.monic();
}

RationalFunction RationalFunction::from_factors(std::span<const Rational> points, std::span<const long> exponents)
{
    if (points.size() != exponents.size()) throw Error("from_factors: size mismatch");
    Polynomial n = Polynomial::constant(1), d = Polynomial::constant(1);
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Polynomial lin = Polynomial::linear(points[i]);
        const long e = exponents[i];
        if (e > 0) n = n * lin.pow(static_cast<unsigned>(e));
        if (e < 0) d = d * lin.pow(static_cast<unsigned>(-e));
    }
    return {n, d};
}

Rational RationalFunction::operator()(const Rational& x) const
{
    const Rational dv = den_(x);
    if (dv.is_zero()) throw Error("rational function has a pole at " + x.str());
    return num_(x) / dv;
}

RationalFunction RationalFunction::operator-() const { return {-num_, den_}; }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
{
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
{
    return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b)
{
    if (b.is_zero()) throw Error("rational function division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
}

std::string RationalFunction::str(char var) const
{
    if (den_.is_constant()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

RationalFunction derivative(const RationalFunction& f)
{
    const Polynomial& n = f.num();
    const Polynomial& d = f.den();
    return {n.derivative() * d - n * d.derivative(), d * d};
}

RationalFunction log_derivative(const RationalFunction& f)
{
    if (f.is_zero()) throw Error("log derivative of zero");
    return derivative(f) / f;
}

int order_at(const RationalFunction& f, const Rational& c)
{
    if (f.is_zero()) throw Error("order of the zero function");
    return multiplicity(f.num(), c) - multiplicity(f.den(), c);
}

}  // namespace cycov
