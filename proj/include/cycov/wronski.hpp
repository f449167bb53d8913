#pragma once

// Wronskian of the 1-form basis coming from admissible cone metrics,
// computed exactly. Weierstrass weights at cone points, off-branch
// factor W1 and the weight over infinity.

#include <optional>
#include <vector>

#include "cycov/conemetrics.hpp"
#include "cycov/exactmath.hpp"

namespace cycov {

/// Finite, pairwise distinct positions of the punctures.
struct PunctureConfig {
    std::vector<Rational> p;
};

/// (0, 1, -1, 2, -2, 3, ...)
PunctureConfig default_punctures(std::size_t n);

struct ExtraFactor {
    Polynomial factor;  // monic; degree 1 for rational roots
    std::optional<Rational> root;
    int multiplicity = 0;
};

struct WronskiReport {
    long genus = 0;
    long degree = 0;
    std::vector<long> preimage_counts;
    PunctureConfig punctures;
    Polynomial w1;  // monic
    Rational w1_scalar;
    std::vector<Rational> branch_exponents;  // beta_i = sum_k a_i^k / d
    std::vector<Rational> b;                 // order of W at p_i
    std::vector<long> weights;               // at each preimage of p_i
    std::vector<ExtraFactor> extra_points;
    long infinity_weight = 0;
    long mobius_center = 0;  // chart z -> 1/(z - c) used for infinity
};

/// Throws if metrics are not g admissible metrics of b or punctures are
/// not n distinct values.
WronskiReport wronskian(const BranchingData& b, const std::vector<ConeMetric>& metrics,
                        const PunctureConfig& punctures);

/// The polynomial part of the Wronskian determinant for the given metrics
/// (rows scaled by D^j, D = prod (x - p_i)). Any number of metrics.
Polynomial wronski_numerator(const BranchingData& b, const std::vector<ConeMetric>& metrics,
                             const PunctureConfig& punctures);

class WeightMismatch : public InternalError {
public:
    WeightMismatch(long computed, long expected);
    long computed() const { return computed_; }
    long expected() const { return expected_; }

private:
    long computed_;
    long expected_;
};

/// sum gcd_i*wt_i + d*(sum mult*deg over W1 factors) + d*infinity_weight;
/// throws WeightMismatch unless it equals (g-1)g(g+1).
long total_weight(const WronskiReport& report, const BranchingData& b, long g);

/// Positive weights with multiplicity, one entry per Weierstrass point.
std::vector<long> weight_multiset(const WronskiReport& report);

/// True iff the weights are exactly 2g+2 points of weight g(g-1)/2.
bool hyperelliptic_test(const WronskiReport& report, long g);

/// g admissible metrics: all of them when there are exactly g, otherwise
/// a greedy choice in sorted order keeping those that do not make the
/// Wronskian vanish. Throws when fewer than g independent ones exist.
std::vector<ConeMetric> default_basis(const BranchingData& b);

}  // namespace cycov
