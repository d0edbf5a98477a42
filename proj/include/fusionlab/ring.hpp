#pragma once

#include "fusionlab/scalar.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace fusionlab {

/// A fusion ring presented by its structure constants: basis X_0, ..., X_m
/// with X_0 the unit, a duality involution i -> dual[i], and nonnegative
/// integers N[i][j][k] giving the multiplicity of X_k in X_i * X_j.
struct FusionRing {
    std::size_t rank = 0;
    std::vector<std::string> labels;
    std::vector<std::size_t> dual;
    std::vector<unsigned> nmat; // rank^3 entries, layout (i*rank + j)*rank + k

    static FusionRing zeros(std::size_t rank);

    unsigned n(std::size_t i, std::size_t j, std::size_t k) const {
        return nmat[(i * rank + j) * rank + k];
    }
    void set_n(std::size_t i, std::size_t j, std::size_t k, unsigned v) {
        nmat[(i * rank + j) * rank + k] = v;
    }

    const std::string& label(std::size_t i) const { return labels[i]; }
};

/// Upper bound on structure-constant multiplicities.
inline constexpr unsigned kMultiplicityCap = 1u << 16;

struct AxiomViolation {
    std::string axiom;                // e.g. "associativity"
    std::vector<std::size_t> indices; // offending index tuple
    std::string detail;
};

/// Checks every ring axiom and returns all violations (empty means valid).
/// Shape errors (tensor size vs rank) are thrown, not reported.
std::vector<AxiomViolation> validate(const FusionRing& ring);

inline bool is_valid(const FusionRing& ring) { return validate(ring).empty(); }

/// Left-multiplication matrix of X_i on the basis: entry (k, j) = N[i][j][k].
std::vector<std::vector<BigInt>> fusion_matrix(const FusionRing& ring, std::size_t i);

bool is_commutative(const FusionRing& ring);

struct FPDimData {
    std::vector<Scalar> dims; // FPdim(X_i), positive real
    Scalar total;             // FPdim(C) = sum of squares
};

/// Frobenius-Perron dimensions: the spectral radius of each fusion matrix,
/// identified exactly in Q or a quadratic field when the characteristic
/// polynomial allows, certified intervals otherwise. The homomorphism and
/// duality identities are verified internally before returning.
FPDimData fp_dims(const FusionRing& ring);

/// Smallest subset of simple indices containing the unit and the generators
/// that is closed under duals and under taking fusion constituents of
/// products of members. Returned sorted ascending.
std::vector<std::size_t> generated_closure(const FusionRing& ring,
                                           const std::vector<std::size_t>& generators);

} // namespace fusionlab
