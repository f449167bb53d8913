#pragma once

// Cyclically branched covers of punctured spheres: validation, genus,
// normal forms and enumeration.

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cycov/error.hpp"

namespace cycov {

using Indices = std::vector<long>;

enum class ViolationKind { DegreeTooSmall, TooFewPunctures, IndexOutOfRange, SumNotDivisible, Disconnected };

struct Violation {
    ViolationKind kind;
    std::string message;
};

const char* to_string(ViolationKind kind);

/// Degree d and branching indices in branch-cut cyclic order. Only
/// constructible through validation, so every instance is a connected,
/// closed cover.
class BranchingData {
public:
    /// Throws ValidationError listing every violated condition.
    static BranchingData make(long d, Indices indices);

    long d() const { return d_; }
    const Indices& indices() const { return indices_; }
    std::size_t n() const { return indices_.size(); }
    long index(std::size_t i) const { return indices_.at(i); }

    /// "(d,(i1,...,in))"
    std::string str() const;

    friend bool operator==(const BranchingData&, const BranchingData&) = default;
    friend auto operator<=>(const BranchingData&, const BranchingData&) = default;

private:
    BranchingData(long d, Indices indices) : d_(d), indices_(std::move(indices)) {}
    long d_ = 0;
    Indices indices_;
};

class ValidationError : public Error {
public:
    ValidationError(std::vector<Violation> violations, long components);
    const std::vector<Violation>& violations() const { return violations_; }
    /// gcd of the indices when the cover falls apart, else 1.
    long components() const { return components_; }

private:
    std::vector<Violation> violations_;
    long components_;
};

struct Validation {
    std::optional<BranchingData> data;
    std::vector<Violation> violations;
    long components = 1;
    bool ok() const { return data.has_value(); }
};

Validation validate(long d, const Indices& indices);

struct CoverSummary {
    long genus = 0;
    std::vector<long> preimage_counts;     // gcd(d, d_i)
    std::vector<long> degree_at_preimage;  // d / gcd(d, d_i)
};

CoverSummary summarize(const BranchingData& b);
long genus(const BranchingData& b);

/// Genus from an explicit cell count of the lifted decomposition; orbits
/// of j -> j + d_i are found by walking the permutation.
long genus_oracle(const BranchingData& b);

struct DegreeBounds {
    long lower = 0;
    long upper = 0;
};

/// Inclusive bounds on d for a genus-g cover of the n-punctured sphere.
/// For n = 3, 4 the lower bound is 2. Throws for g < 2 or n < 3.
DegreeBounds degree_bounds(long g, long n);

enum class Equivalence {
    Dihedral,  // units x rotations x reversal, the branch-cut order is kept
    Multiset,  // units x arbitrary permutations; representative sorted
};

/// Lexicographically smallest image under units, rotations and reversal.
BranchingData normalize(const BranchingData& b);
/// Lexicographically smallest sorted tuple over all unit multiples.
BranchingData normalize_multiset(const BranchingData& b);
BranchingData normalize(const BranchingData& b, Equivalence eq);

struct EnumeratedCover {
    BranchingData cover;
    long genus = 0;
    friend bool operator==(const EnumeratedCover&, const EnumeratedCover&) = default;
};

struct EnumerateOptions {
    long max_genus = 2;
    long min_genus = 2;
    std::optional<long> punctures;
    Equivalence equivalence = Equivalence::Dihedral;
};

/// All pairwise inequivalent normalized covers with min_genus <= g <=
/// max_genus, sorted by (genus, n, d, indices). Throws for max_genus < 2.
std::vector<EnumeratedCover> enumerate(const EnumerateOptions& options);

struct LiftClosure {
    bool closed = false;
    long length_multiplier = 1;
    long components = 0;
};

/// Lift of a base loop with intersection numbers C against the cuts.
LiftClosure lift_closure(const BranchingData& b, const std::vector<long>& winding);

}  // namespace cycov
