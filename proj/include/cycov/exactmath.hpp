#pragma once

// Exact arithmetic over Q: rationals, dense univariate polynomials and
// rational functions. Everything here is a value type; no global state.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cycov/error.hpp"

namespace cycov {

using Integer = mpz_class;

/// Rational number in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    Rational(const Integer& num, const Integer& den);
    explicit Rational(mpq_class q);

    /// Accepts "a", "-a", "a/b".
    static Rational parse(std::string_view text);

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }
    const mpq_class& value() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }
    double to_double() const { return q_.get_d(); }
    /// Only valid when is_integer() and the value fits in a long.
    long to_long() const;

    /// "num/den", or "num" when the denominator is 1.
    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_{0};
};

/// Dense polynomial over Q; coefficient i multiplies x^i. The zero
/// polynomial has no coefficients, otherwise the leading one is nonzero.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, std::size_t degree);
    /// x - root
    static Polynomial linear(const Rational& root);
    /// Product of (x - points[i])^exponents[i]; exponents must be >= 0.
    static Polynomial from_roots(std::span<const Rational> points, std::span<const long> exponents);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    std::span<const Rational> coefficients() const { return c_; }
    /// Zero beyond the degree.
    Rational coefficient(std::size_t i) const;
    const Rational& leading() const;

    Rational operator()(const Rational& x) const;
    Polynomial derivative() const;
    Polynomial monic() const;
    Polynomial pow(unsigned e) const;
    /// Multiply every coefficient by s.
    Polynomial scaled(const Rational& s) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    /// Euclidean division; throws on division by zero.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

    /// Human-readable, highest degree first, e.g. "x^2+2/3*x-1".
    std::string str(char var = 'x') const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Largest m with (x - c)^m dividing p. p must be nonzero.
int multiplicity(const Polynomial& p, const Rational& c);

/// Divide out (x - c) exactly `times` times; throws if it does not divide.
Polynomial deflate(const Polynomial& p, const Rational& c, int times);

/// Reduced quotient num/den with a monic denominator.
class RationalFunction {
public:
    RationalFunction() : den_(Polynomial::constant(1)) {}
    RationalFunction(const Polynomial& num);  // NOLINT(google-explicit-constructor)
    RationalFunction(const Polynomial& num, const Polynomial& den);

    /// Product of (x - points[i])^exponents[i]; exponents may be negative.
    static RationalFunction from_factors(std::span<const Rational> points, std::span<const long> exponents);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    /// Throws at a pole.
    Rational operator()(const Rational& x) const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

    std::string str(char var = 'x') const;

private:
    Polynomial num_;
    Polynomial den_;
};

RationalFunction derivative(const RationalFunction& f);

/// f'/f, fully cancelled. Throws on zero input.
RationalFunction log_derivative(const RationalFunction& f);

/// The m with f = (x - c)^m g, g(c) finite and nonzero. Throws on zero input.
int order_at(const RationalFunction& f, const Rational& c);

struct RationalRoot {
    Rational root;
    int multiplicity = 0;
    friend bool operator==(const RationalRoot&, const RationalRoot&) = default;
};

/// p = scalar * prod (x - root)^multiplicity * cofactor, cofactor monic with
/// no rational roots. Roots are sorted ascending.
struct RootFactorization {
    std::vector<RationalRoot> roots;
    Polynomial cofactor;
    Rational scalar;
};

/// Exact: modular root finding, Hensel lifting and rational reconstruction,
/// each candidate verified by evaluation. Throws on the zero polynomial.
RootFactorization rational_roots(const Polynomial& p);

struct SquarefreeFactor {
    Polynomial factor;  // monic, squarefree
    int multiplicity = 0;
};

/// Yun's algorithm. Returns monic factors with increasing multiplicity;
/// constant input gives an empty list.
std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial& p);

}  // namespace cycov
