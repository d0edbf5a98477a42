#pragma once

#include "fusionlab/isaacs.hpp"

namespace fusionlab {

/// Unnormalized modular data: a symmetric S-matrix whose upper-left entry is
/// 1 and whose first row lists the quantum dimensions, plus an optional
/// diagonal of twists. The normalization by the square root of the global
/// dimension is never materialized; every formula downstream only needs
/// entry ratios.
struct ModularData {
    std::size_t rank = 0;
    std::vector<std::vector<Scalar>> s; // rank x rank, s[0][0] = 1
    std::vector<Scalar> dims;           // first row: dims[i] = s[0][i]
    Scalar dim_total;                   // global dimension, sum of dims[i]^2
    std::vector<Scalar> t;              // optional twists; stored, never used

    const Scalar& at(std::size_t i, std::size_t j) const { return s[i][j]; }
};

/// Validates and packages an S-matrix: square shape, unit upper-left entry,
/// symmetry (which forces first column = first row = dims), certainly
/// nonzero dims, and non-degeneracy in the character sense (no two columns
/// give the same scaled-column character). Certified violations throw Error;
/// undecidable comparisons throw IndeterminateError.
ModularData modular_data(std::vector<std::vector<Scalar>> s,
                         std::vector<Scalar> twists = {});

/// Character table read off the S-matrix: column i' scaled by 1/dims[i'] is
/// a character row, realizing the bijection between simples and characters.
/// Rows are re-sorted into the normative order (Frobenius-Perron row first,
/// the rest ascending by entrywise (Re, Im) comparison); row_object records
/// which simple each table row is attached to.
struct ModularCharacters {
    CharacterTable table;
    std::vector<std::size_t> row_object;    // table row -> simple index
    std::vector<std::size_t> row_of_object; // simple index -> table row
};

/// Derives the table and certifies it against the companion ring: every
/// scaled column must be multiplicative for the fusion rules (hard error on
/// a certified violation), exactly one column must match the
/// Frobenius-Perron dimensions, and the codegrees and conjugation involution
/// are rebuilt with the same sanity checks the diagonalization path applies.
ModularCharacters characters_from_s(const ModularData& data,
                                    const FusionRing& ring);

/// Class dimensions in the modular normalization: dim(C^i) = dims[i]^2,
/// cross-checked against dim C / n_i with n_i the codegree of the i-th
/// scaled column. A certified disagreement is a hard error (the data is not
/// modular-consistent); an undecidable one throws IndeterminateError.
std::vector<Scalar> class_dims_modular(const ModularData& data);

struct VerlindeMismatch {
    std::size_t i = 0, j = 0, k = 0;
    Scalar reconstructed;
    unsigned expected = 0;
};

/// Consistency between the S-matrix and the fusion tensor: every coefficient
/// is reconstructed as sum_l s_il s_jl conj(s_kl) / (d_l dim C) and compared
/// with the ring entry; certified mismatches are collected with their index
/// triples.
struct VerlindeReport {
    bool consistent = true;
    std::vector<VerlindeMismatch> mismatches;
};

VerlindeReport verlinde_cross_check(const ModularData& data,
                                    const FusionRing& ring);

/// dim(X)^2 divides dim C / |U(C)| for a simple X generating the whole ring,
/// with |U(C)| realized as the group of group-like characters of the derived
/// table. The quotient and its integrality verdict are reported for every X;
/// the status is Skipped when X does not generate. Under the generation
/// hypothesis the proof identity dim C / (|U(C)| dim(X)^2) = sum over
/// non-vanishing star-orbit representatives rho of |mu_X([X_rho])|^2 is
/// checked alongside the divisibility.
TheoremReport theorem_1_2(const ModularData& data, const FusionRing& ring,
                          std::size_t x, const HypothesisFlags& assume = {});

} // namespace fusionlab
