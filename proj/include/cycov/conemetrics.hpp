#pragma once

// Admissible cone metrics on the base sphere and the divisors of the
// holomorphic 1-forms they induce on the cover.

#include <map>
#include <string>
#include <vector>

#include "cycov/covers.hpp"

namespace cycov {

/// Cone angles 2*pi*a_i/d. mu is the multiplier with a_i = mu*d_i (mod d).
struct ConeMetric {
    BranchingData base;
    std::vector<long> a;
    long mu = 0;
    friend bool operator==(const ConeMetric&, const ConeMetric&) = default;
};

/// Preimage s (0 <= s < gcd(d, d_i)) of puncture i (0-based).
struct PointLabel {
    std::size_t puncture = 0;
    long sheet_class = 0;
    friend auto operator<=>(const PointLabel&, const PointLabel&) = default;
};

/// Orders at labeled points; points of order zero are not stored.
class Divisor {
public:
    void add(const PointLabel& p, long order);
    long at(const PointLabel& p) const;
    long degree() const;
    bool effective() const;
    const std::map<PointLabel, long>& entries() const { return entries_; }
    /// e.g. "4*p3" or "p1+p2,0+p2,1+p3"; puncture numbers are 1-based and
    /// the sheet class is shown only when the puncture has several preimages.
    std::string str(const BranchingData& b) const;

    friend Divisor operator+(const Divisor& x, const Divisor& y);
    friend Divisor operator*(long k, const Divisor& x);
    friend bool operator==(const Divisor&, const Divisor&) = default;
    friend auto operator<=>(const Divisor&, const Divisor&) = default;

private:
    std::map<PointLabel, long> entries_;
};

/// Sorted by (mu, a).
std::vector<ConeMetric> all_admissible(const BranchingData& b);

/// Independent of all_admissible: positivity, the angle sum, and the
/// holonomy implication checked on generators of the lattice
/// {C : sum C_i d_i = 0 mod d}.
bool is_admissible_oracle(const BranchingData& b, const std::vector<long>& a);

/// The multiplier witnessing admissibility, or -1.
long admissible_multiplier(const BranchingData& b, const std::vector<long>& a);

/// Throws if a is not admissible for b.
ConeMetric make_metric(const BranchingData& b, const std::vector<long>& a);

Divisor divisor_of(const ConeMetric& m);

struct CountCheck {
    long count = 0;
    long genus = 0;
    bool exactly_g = false;
    bool at_least_g = false;
};

CountCheck count_checks(const BranchingData& b);

struct InvolutionPair {
    std::vector<long> admissible;      // sum d
    std::vector<long> non_admissible;  // d - a, sum 2d
};

struct InvolutionPairing {
    std::vector<InvolutionPair> pairs;
    long zero_free_residues = 0;  // multipliers whose residue tuple has no zero
    long genus = 0;
    /// 2g zero-free residue tuples splitting into g pairs
    bool consistent = false;
};

/// Only for three punctures; throws otherwise.
InvolutionPairing involution_pairing(const BranchingData& b);

/// Exponent vector over the given divisors, total degree k.
using Monomial = std::vector<int>;

struct MonomialRelation {
    Monomial lhs;
    Monomial rhs;
    Divisor divisor;
    bool rank3_candidate = false;  // one side is a pure k-th power
};

/// All unordered pairs of distinct degree-k monomials with equal divisor
/// sums. Throws for k < 2.
std::vector<MonomialRelation> monomial_relations(const std::vector<Divisor>& divisors, int k);

/// "w1*w3" style rendering, 1-based.
std::string monomial_str(const Monomial& m);

}  // namespace cycov
