#pragma once

#include "fusionlab/chars.hpp"

namespace fusionlab {

/// The dual hypergroup on characters: mu_i * mu_j = sum_k p_hat_k(i,j) mu_k,
/// where the product on the left is the normalized pointwise product
/// mu_i([X]) mu_j([X]) / FPdim(X). The FP character (index 0 after table
/// ordering) is the unit. rn records whether all structure constants are
/// certainly real and nonnegative.
struct DualHypergroup {
    enum class RNStatus { Yes, No, Indeterminate };

    std::size_t rank = 0;
    std::vector<Scalar> p_hat; // layout (i*rank + j)*rank + k
    RNStatus rn = RNStatus::Indeterminate;

    const Scalar& p(std::size_t i, std::size_t j, std::size_t k) const {
        return p_hat[(i * rank + j) * rank + k];
    }
};

std::string rn_status_name(DualHypergroup::RNStatus s);

/// Computes the full dual tensor p_hat_k(i,j) = (1/n_k) sum_X mu_i([X])
/// mu_j([X]) mu_k([X*]) / FPdim(X), verifies that it reproduces the pointwise
/// product on every simple, cross-checks h_i = 1/p_hat_0(i, i#) against
/// h_i = FPdim(C)/n_i, and sets the RN flag.
DualHypergroup dual_constants(const CharacterTable& table);

struct RNViolation {
    std::size_t i, j, k;
    Scalar value;
};

struct RNReport {
    DualHypergroup::RNStatus status = DualHypergroup::RNStatus::Indeterminate;
    std::vector<RNViolation> violations; // certainly negative or non-real entries
};

/// Decides real-nonnegativity of every dual structure constant: exact values
/// exactly, intervals with tolerance band tau = 2^(-precision/2).
RNReport rn_check(const DualHypergroup& dual);

/// The group of group-like characters G(K-hat): those with |mu_j([X])| =
/// FPdim(X) on every simple. This group realizes the universal grading group
/// U(C) at ring level.
struct GroupLikeData {
    std::vector<std::size_t> members;           // character indices, ascending; contains 0
    std::vector<std::vector<std::size_t>> mult; // positions into members
    std::size_t identity_pos = 0;               // position of the FP character

    std::size_t order() const { return members.size(); }
};

/// Membership by the modulus criterion; the multiplication table is read off
/// the dual tensor (each product of members must be a single character with
/// coefficient 1). Group axioms, closure under the involution, and h_j = 1
/// on members are verified. An indeterminate membership verdict aborts.
GroupLikeData group_likes(const CharacterTable& table, const DualHypergroup& dual);

/// Orbits of the left star-action of the group-like characters on all
/// characters. With a designated simple X, additionally marks each orbit as
/// vanishing or not (an orbit vanishes when mu([X]) = 0 on it).
struct StarOrbits {
    std::vector<std::vector<std::size_t>> orbits; // partition, each sorted
    std::vector<std::size_t> orbit_of;            // character index -> orbit id
    std::vector<std::size_t> representatives;     // smallest member per orbit
    std::optional<std::size_t> designated_simple;
    std::vector<bool> non_vanishing;              // per orbit; empty without X
};

StarOrbits star_orbits(const GroupLikeData& group, const DualHypergroup& dual,
                       const CharacterTable& table,
                       std::optional<std::size_t> simple_x = std::nullopt);

/// Orbit-constancy checks: |mu_j([Y])| for every simple Y, the codegrees n_j,
/// and the class dimensions are constant on each star-orbit; on non-vanishing
/// orbits of a generating simple X the action is free (orbit size = |G|).
struct OrbitLemmaCheck {
    enum class Status { Pass, Fail, Skipped };
    std::string name;
    Status status = Status::Pass;
    std::string detail;
};

struct OrbitLemmaReport {
    std::vector<OrbitLemmaCheck> checks;
    bool all_ok = true; // no Fail entries
};

OrbitLemmaReport verify_orbit_lemmas(const CharacterTable& table, std::size_t simple_x);

/// The central character omega_X on the group-like characters:
/// omega_X(mu) = mu([X])/FPdim(X), a root of unity on G. Faithful when no
/// non-identity member takes the value 1; when X generates the whole ring,
/// faithfulness is a theorem and is enforced.
struct CentralCharacter {
    std::vector<std::size_t> group_members;
    std::vector<Scalar> values; // aligned with group_members
    bool faithful = false;
    bool x_generates = false;
};

CentralCharacter central_character(const CharacterTable& table, std::size_t simple_x);

} // namespace fusionlab
