#pragma once

#include "fusionlab/ring.hpp"

#include <optional>

namespace fusionlab {

/// Character table of a commutative fusion ring: row j is the algebra
/// homomorphism mu_j evaluated on the basis, with entry table[j][i] =
/// mu_j(X_i). Row fp_index is the Frobenius-Perron character (always placed
/// first); codegrees[j] is n_j = sum_i |mu_j(X_i)|^2; involution[j] is the
/// index j# of the conjugate character mu_{j#} = conj(mu_j).
struct CharacterTable {
    FusionRing ring;
    FPDimData fp;
    std::vector<std::vector<Scalar>> table;
    std::size_t fp_index = 0;
    std::vector<Scalar> codegrees;
    std::vector<std::size_t> involution;

    std::size_t rank() const { return ring.rank; }
    const Scalar& at(std::size_t j, std::size_t i) const { return table[j][i]; }
};

/// Computes the character table by simultaneous diagonalization of the
/// commuting fusion matrices: a random integer combination is diagonalized
/// with certified root enclosures, eigenvalue tuples are read off through
/// spectral projectors, and entries are identified exactly in Q or quadratic
/// fields whenever the per-matrix characteristic polynomials allow.
/// Raises precision and re-randomizes on separation failures; throws Error
/// after the configured number of retries.
CharacterTable character_table(const FusionRing& ring);

/// A choice of dimension character: row delta of the table, giving dims
/// d_i = mu_delta(X_i), the global dimension dim C = n_delta, and the class
/// dimensions dim(C^j) = dim C / n_j.
struct SphericalData {
    std::size_t dim_character_index = 0;
    std::vector<Scalar> dims;
    Scalar dim_total;
    std::vector<Scalar> class_dims;
};

/// Builds SphericalData from the chosen row (default: the FP row, the
/// pseudo-unitary convention). The row must satisfy d_0 = 1, d_i = d_{i*},
/// and have real nonzero entries; violations are rejected with diagnostics.
SphericalData spherical_data(const CharacterTable& table,
                             std::optional<std::size_t> delta = std::nullopt);

struct OrthogonalityReport {
    bool first_ok = false;   // sum_i mu_j(X_i) mu_k(X_{i*}) = delta_{jk} n_j
    bool second_ok = false;  // sum_j (dim C^j/dim C) mu_j(X) mu_j(Y*) = delta_{XY}
    BigRat max_deviation;    // upper bound on |lhs - rhs| over all instances
};

OrthogonalityReport verify_orthogonality(const CharacterTable& table,
                                         const SphericalData& spherical);

/// Per-character orders h_j = FPdim(C)/n_j together with the scaling
/// identity h_j = (FPdim(C)/dim C) dim(C^j) and, when the dimension
/// character is the FP row, the pseudo-unitary coincidence h_j = dim(C^j).
struct OrdersData {
    std::vector<Scalar> orders;
    bool scaling_identity_ok = false;
    bool pseudo_unitary_match = false;
};

OrdersData orders(const CharacterTable& table, const SphericalData& spherical);

/// n(S) = sum of h_j over a subset of character indices.
Scalar subset_order(const OrdersData& data, const std::vector<std::size_t>& subset);

struct WeaklyIntegralReport {
    bool weakly_integral = false;                 // FPdim(C) a rational integer
    std::vector<IntegralityVerdict> fpdim_squares; // FPdim(X_i)^2 integral?
    std::vector<IntegralityVerdict> class_dims;    // dim(C^j) integral?
};

/// Decides weak integrality from the exact global dimension and, when it
/// holds, records integrality verdicts for every FPdim(X_i)^2 and class
/// dimension (computed in the pseudo-unitary normalization).
WeaklyIntegralReport weakly_integral_check(const CharacterTable& table);

} // namespace fusionlab
