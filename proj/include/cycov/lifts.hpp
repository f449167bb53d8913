#pragma once

// Lifts of branch-cut preserving sphere maps to the covers: the sheet map
// j -> mu*j + nu (mod d') together with an index map on the punctures.

#include <map>
#include <utility>
#include <vector>

#include "cycov/conemetrics.hpp"

namespace cycov {

/// phi[i] is the 0-based target puncture of source puncture i.
class IndexMap {
public:
    /// Throws unless phi is a bijection onto the target punctures and,
    /// when source == target, a rotation or reflection of the cyclic order.
    static IndexMap make(const BranchingData& source, const BranchingData& target, std::vector<std::size_t> phi);
    static IndexMap identity(const BranchingData& b);

    const BranchingData& source() const { return source_; }
    const BranchingData& target() const { return target_; }
    const std::vector<std::size_t>& phi() const { return phi_; }
    bool is_endomorphism() const { return source_ == target_; }
    /// Order of phi as a permutation; 0 unless is_endomorphism().
    long perm_order() const;

private:
    IndexMap(BranchingData s, BranchingData t, std::vector<std::size_t> phi)
        : source_(std::move(s)), target_(std::move(t)), phi_(std::move(phi))
    {
    }
    BranchingData source_;
    BranchingData target_;
    std::vector<std::size_t> phi_;
};

/// Rotations and reflections of the cyclic order of n punctures.
std::vector<std::vector<std::size_t>> dihedral_maps(std::size_t n);

struct AffineLift {
    long mu = 1;
    long nu = 0;
    long modulus = 1;
    friend bool operator==(const AffineLift&, const AffineLift&) = default;
};

/// mu in 0..d'-1 with d'_{phi(i)} = mu*d_i (mod d') for all i.
std::vector<long> compatible_mus(const IndexMap& m);

/// Order of j -> mu*j + nu in the affine group mod d'. Throws when mu is
/// not a unit.
long affine_order(const AffineLift& lift);

/// Smallest t with phi^t = id and the t-fold affine composite the
/// identity. Throws when mu violates the compatibility congruence.
long lift_order(const IndexMap& m, const AffineLift& lift);

struct LabelAction {
    std::map<PointLabel, PointLabel> map;
    std::vector<PointLabel> fixed;
    std::vector<std::pair<PointLabel, PointLabel>> swaps;
};

/// (i, s) -> (phi(i), mu*s + nu mod gcd(d', d'_{phi(i)})). Needs source == target.
LabelAction preimage_action(const IndexMap& m, const AffineLift& lift);

struct LiftEntry {
    AffineLift lift;
    long order = 0;
    /// Lifts with equal label action share a class number.
    std::size_t label_class = 0;
};

/// Every compatible (mu, nu) with mu a unit.
std::vector<LiftEntry> enumerate_lifts(const IndexMap& m);

}  // namespace cycov
