#include "cycov/exactmath.hpp"

#include <string>

namespace cycov {

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational::Rational(const Integer& num, const Integer& den)
{
    if (den == 0) throw Error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text)
{
    std::string s(text);
    const auto bad = [&] { return Error("not a rational number: '" + s + "'"); };
    if (s.empty()) throw bad();
    const auto slash = s.find('/');
    const auto is_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+') throw bad();
    if (num[0] == '+') num.erase(0, 1);
    Integer n(num), m(den);
    if (m == 0) throw Error("rational with zero denominator: '" + s + "'");
    return Rational(n, m);
}

long Rational::to_long() const
{
    if (!is_integer() || !q_.get_num().fits_slong_p()) throw Error("rational " + str() + " is not a machine integer");
    return q_.get_num().get_si();
}

std::string Rational::str() const
{
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o)
{
    q_ += o.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    q_ -= o.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    q_ *= o.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) throw Error("division by zero");
    q_ /= o.q_;
    return *this;
}

}  // namespace cycov
