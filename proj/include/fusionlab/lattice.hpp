#pragma once

#include "fusionlab/dual.hpp"

namespace fusionlab {

/// A fusion subring: a set of simple indices containing the unit and closed
/// under duals and fusion constituents, together with the induced ring on
/// those simples (structure constants restricted to the set).
struct Subring {
    std::vector<std::size_t> members; // parent indices, ascending, contains 0
    FusionRing induced;
    std::size_t parent_rank = 0;

    std::size_t rank() const { return members.size(); }
    bool is_full() const { return members.size() == parent_rank; }
    bool is_trivial() const { return members.size() == 1; }
    bool contains(std::size_t i) const;
    /// Position of parent index i inside members; throws Error when absent.
    std::size_t position(std::size_t i) const;
};

/// Wraps an explicit member set after verifying that it contains the unit
/// and is closed under duals and fusion constituents; the induced ring is
/// validated and checked commutative. Violations throw Error with a witness.
Subring subring_from_members(const FusionRing& ring, std::vector<std::size_t> members);

/// Least subring containing the generators (worklist closure).
Subring generated_subring(const FusionRing& ring,
                          const std::vector<std::size_t>& generators);

/// Adjoint subring of D: generated by the constituents of Y x Y* over all
/// members Y of D.
Subring adjoint_subring(const FusionRing& ring, const Subring& d);
/// Adjoint subring of the whole ring.
Subring adjoint_subring(const FusionRing& ring);
/// Maximal pointed subring: the invertible simples (X x X* = unit alone).
Subring pointed_subring(const FusionRing& ring);

/// FPdim(D) = sum of FPdim(X)^2 over the members; the ambient FP dimensions
/// restrict to the FP dimensions of the induced ring.
Scalar subring_fpdim(const FPDimData& fp, const Subring& d);
/// dim(D) under the ambient dimension character, restricted the same way.
Scalar subring_dim(const SphericalData& spherical, const Subring& d);

/// Outcome of a single named theorem or identity check. Skipped means a
/// hypothesis was not met (with the reason in detail); Indeterminate means
/// the working precision could not decide.
struct TheoremCheck {
    enum class Status { Pass, Fail, Skipped, Indeterminate };
    std::string name;
    Status status = Status::Pass;
    std::string detail;

    bool ok() const { return status == Status::Pass || status == Status::Skipped; }
};
std::string check_status_name(TheoremCheck::Status s);

/// Kernel and center of an object as character-index sets: the characters
/// taking the value FPdim(X) on X (kernel) and those of maximal modulus
/// (center). Membership uses certified comparisons; an indeterminate verdict
/// aborts with IndeterminateError.
struct ObjectKernelCenter {
    std::size_t object = 0;
    std::vector<std::size_t> kernel; // ascending; always contains the FP row
    std::vector<std::size_t> center; // ascending; kernel is a subset
    bool faithful = false;           // X generates the whole ring
    bool brauer_ok = false;          // faithful iff kernel = {FP row}
};
ObjectKernelCenter object_kernel_center(const CharacterTable& table, std::size_t x);

/// Kernel and center of a character as subrings: the simples on which mu_j
/// attains FPdim (kernel) resp. maximal modulus (center). Closure of both
/// sets is a theorem; a violation is a hard error with a witness.
struct CharacterKernelCenter {
    std::size_t character = 0;
    Subring kernel;
    Subring center;
};
CharacterKernelCenter character_kernel_center(const CharacterTable& table,
                                              std::size_t j);

/// Perpendicular of a character set: the simples on which every listed
/// character attains the FP value; returned as a subring.
Subring perp_of_characters(const CharacterTable& table,
                           const std::vector<std::size_t>& chars);
/// Perpendicular of an object set: the characters attaining the FP value on
/// every listed simple; returned ascending.
std::vector<std::size_t> perp_of_objects(const CharacterTable& table,
                                         const std::vector<std::size_t>& objects);

/// Perp with the order and biduality identities. The order identity
/// FPdim(S^perp) * n(S) = FPdim(C) is asserted only when the dual structure
/// constants are certified real nonnegative; otherwise it is Skipped.
struct PerpIdentities {
    Subring perp;
    std::vector<std::size_t> bidual;  // (S^perp)^perp as a character set
    bool bidual_contains_s = false;   // must always hold
    bool bidual_equals_s = false;     // S is perp-closed
    TheoremCheck order_identity;
};
PerpIdentities perp_identities(const CharacterTable& table,
                               const DualHypergroup& dual,
                               const std::vector<std::size_t>& chars);

/// Object-side biduality (D^perp)^perp = D for a subring D; requires the
/// real-nonnegativity certificate on the dual constants.
TheoremCheck biduality_check(const CharacterTable& table,
                             const DualHypergroup& dual, const Subring& d);

/// Dimensional order n_dim(Z) = sum of class dimensions over a character
/// set, its formal companion n(Z) = sum of orders h_j, and the
/// proportionality FPdim(C) * n_dim(Z) = dim(C) * n(Z) between them.
struct DimensionalOrder {
    Scalar n_dim;
    Scalar order;
    bool proportional_ok = false;
};
DimensionalOrder dimensional_order(const CharacterTable& table,
                                   const SphericalData& spherical,
                                   const std::vector<std::size_t>& chars);

/// Partition of the characters by their restriction to a subring D. Blocks
/// are in order of smallest member and correspond bijectively to the rows of
/// the induced table. Two size laws are recorded per block: the general one
///   n_dim(block) = (dim C / dim D) * dim(D^block),
/// which follows from the class-sum projection formula, and the plain form
///   n_dim(block) = dim C / dim D
/// (with its order companion n(block) = FPdim(C)/dim D), which holds exactly
/// when the matched subring class has dimension 1 -- in particular for
/// pointed D and for the blocks inside the center of a generating simple.
struct CharacterClassPartition {
    Subring subring;
    std::vector<std::vector<std::size_t>> blocks;
    std::vector<std::size_t> block_of;            // character -> block id
    std::vector<Scalar> block_n_dim;
    std::vector<Scalar> block_order;
    CharacterTable induced_table;
    SphericalData induced_spherical;
    std::vector<std::size_t> induced_row_of_block;
    bool count_ok = false;         // block count equals the subring rank
    bool restriction_ok = false;   // every block matches an induced row, bijectively
    bool general_sizes_ok = false; // both general laws hold on every block
    bool plain_sizes_ok = false;   // the plain forms hold on every block
};
CharacterClassPartition character_classes(const CharacterTable& table,
                                          const SphericalData& spherical,
                                          const Subring& d);

/// The size theorem for D = <X>: the center Z(X) is a union of restriction
/// blocks, Z_D(X) equals the group-like characters of the induced ring, and
///   dim C / n_dim(Z(X)) = dim D / |U(D)| = FPdim(C) / n(Z(X)).
struct SizeTheoremReport {
    std::size_t simple_x = 0;
    Subring d;
    std::vector<std::size_t> center;
    std::size_t u_d_order = 0;
    TheoremCheck union_of_classes;
    TheoremCheck generated_center_is_group; // Z_D(X) = G(induced dual)
    TheoremCheck dim_ratio;                 // dim C * |U(D)| = dim D * n_dim(Z)
    TheoremCheck fp_ratio;                  // FPdim(C) * |U(D)| = dim D * n(Z)
};
SizeTheoremReport size_theorem(const CharacterTable& table,
                               const SphericalData& spherical, std::size_t x);

/// Center/adjoint identities over every simple X: Z(X) equals the perp of
/// the adjoint of <X> (both sides computed independently), the group-like
/// characters are exactly the intersection of all centers, the perp of the
/// group-likes is the adjoint subring, and n(Z(X))/|G| is an algebraic
/// integer. The perp identity and the integrality are certified only on
/// duals with real nonnegative constants and are Skipped otherwise.
struct CenterAdjointReport {
    std::vector<TheoremCheck> center_equals_adjoint_perp; // per simple
    TheoremCheck group_is_center_intersection;
    TheoremCheck adjoint_is_group_perp;
    std::vector<TheoremCheck> center_order_integrality;   // per simple
    bool all_ok = true;
};
CenterAdjointReport center_adjoint_theorem(const CharacterTable& table,
                                           const DualHypergroup& dual);

} // namespace fusionlab
