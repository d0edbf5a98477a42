#pragma once

#include "fusionlab/lattice.hpp"

namespace fusionlab {

/// Rational exponent s = p/q in lowest terms, validated for the power-trick
/// evaluators: s >= 0, q <= 12 (fractional powers are eliminated by deciding
/// integrality on the q-th power), and p small enough for desk-scale
/// exponentiation.
struct RationalExponent {
    BigRat value;
    long num = 0;
    long den = 1;
};
RationalExponent rational_exponent(const BigRat& s);

/// Category-level hypotheses asserted by the caller. Ring data alone cannot
/// certify any of them; they are recorded verbatim into the reports that
/// consume them, separately from the hypotheses verified from the data.
struct HypothesisFlags {
    bool spherical = false;
    bool pseudo_unitary = false;
    bool braided = false;
    bool ribbon = false;
    bool unitary = false;
    bool modular = false;
};
std::vector<std::string> hypothesis_names(const HypothesisFlags& flags);

/// A query against the divisibility catalog: the exponent s, an optional
/// generator (evaluate inside the subring it generates; whole ring when
/// absent), and the asserted hypothesis flags.
struct IsaacsQuery {
    BigRat s;
    std::optional<std::size_t> generator;
    HypothesisFlags assume;
};

/// Verdict for one claim of the catalog evaluated on concrete ring data.
/// tag is the stable catalog number used by reports and the command line
/// (the full tag -> statement listing ships with the tool documentation).
/// Hypotheses consumed by the claim are split into those verified from the
/// ring data and those recorded on caller authority. Divisibility claims
/// carry an IntegralityVerdict with its certainty tier and witness
/// polynomial; equality claims carry an equality verdict.
struct TheoremReport {
    std::string tag;
    std::string statement;
    TheoremCheck::Status status = TheoremCheck::Status::Skipped;
    std::vector<std::string> verified;
    std::vector<std::string> asserted;
    std::vector<std::pair<std::string, std::string>> quantities;
    IntegralityVerdict verdict;
    std::optional<EqVerdict> equality;
    std::string detail;

    bool ok() const {
        return status == TheoremCheck::Status::Pass ||
               status == TheoremCheck::Status::Skipped;
    }
};

/// lambda_s(mu_j, X) = (dim C)^s dim(C^j)^(1-s) mu_j([X]) / dim(X), with an
/// integrality verdict decided on the q-th power
///   lambda^q = (dim C)^p dim(C^j)^(q-p) (mu_j([X])/dim(X))^q
/// so that only integer exponents occur. When the dimension row is the
/// Frobenius-Perron row, interval values receive the Galois-stable conjugate
/// superset {n_a^p (n_a/n_b)^(q-p) (mu_b([X])/mu_a([X]))^q} over all rows a
/// with certainly nonzero value on X and all rows b.
struct LambdaValue {
    Scalar value;
    IntegralityVerdict verdict;
};
LambdaValue lambda_s(const CharacterTable& table, const SphericalData& spherical,
                     std::size_t j, std::size_t x, const BigRat& s);

/// The s-Isaacs verdict: every lambda_s(mu_j, X) over the scope's induced
/// ring is an algebraic integer. The scope's characters and class dimensions
/// are its own (the induced table is computed and its dimension row matched
/// to the restriction of the ambient one). lambdas is indexed by the induced
/// ring's characters and simples.
struct SIsaacsReport {
    BigRat s;
    std::vector<std::size_t> scope;
    std::vector<std::vector<LambdaValue>> lambdas;
    std::size_t failed_pairs = 0;
    std::size_t indeterminate_pairs = 0;
    bool all_exact = false;
    TheoremReport report; // tag "5.1"
};
SIsaacsReport is_s_isaacs(const CharacterTable& table,
                          const SphericalData& spherical, const BigRat& s);
SIsaacsReport is_s_isaacs(const CharacterTable& table,
                          const SphericalData& spherical, const BigRat& s,
                          const Subring& scope);

/// Frobenius type at exponent s: dim(X) divides (dim C)^s for every simple.
struct FrobeniusTypeReport {
    BigRat s;
    std::vector<IntegralityVerdict> per_simple;
    std::vector<Scalar> quotients; // (dim C)^s / dim(X), display values
    TheoremReport report;          // tag "ft"
};
FrobeniusTypeReport frobenius_type(const CharacterTable& table,
                                   const SphericalData& spherical,
                                   const BigRat& s);

/// The divisibility catalog for one simple X at exponent s. Hypotheses are
/// verified from the data wherever possible: real-nonnegativity of the dual
/// constants from its certificate, "X generates the ring" from the closure,
/// and "<X> is s-Isaacs" by evaluating every lambda inside the induced
/// subring. A certainly failed hypothesis downgrades the claim to Skipped
/// with the reason; an undecidable one downgrades it to Indeterminate.
///
/// Catalog tags covered, with Z(X) the center of X and U the group of
/// group-like characters:
///   1.1  FPdim(X) | FPdim(C)/|U|                      [RN, <X> 0-Isaacs]
///   1.3  (dim C)^2s FPdim(C)/(dim(X)^2 |U|) in A      [RN, s >= 1/2, <X> s-Isaacs]
///   1.4  (dim C)^s FPdim(C)/(dim(X) |U|) in A         [RN, <X> s-Isaacs]
///   5.3  (dim C)^(2s+1)/(|U| dim(X)^2) in A           [X faithful, s >= 1/2, s-Isaacs]
///   5.4  (dim C)^(s+1/2)/(dim(X) sqrt(|U|)) in A      [same; decided on the square]
///   5.5  (dim C)^(2s+1)/(dim(X)^2 n_dim(Z(X))) in A   [s >= 1/2, <X> s-Isaacs]
///   6.2  (dim C)^(s+1)/(|U| dim(X)) in A              [X faithful, s-Isaacs]
///   6.3  (dim C)^(s+1)/(n_dim(Z(X)) dim(X)) in A      [<X> s-Isaacs]
///   6.4  dim(X) | FPdim(C)/n(Z(X))                    [<X> 0-Isaacs]
///   6.5  dim(X) | FPdim(C)/|U|                        [RN, <X> 0-Isaacs]
///   6.6  D_s^2 = C_s FPdim(C)/|U| exactly, where
///        C_s = (dim C)^2s FPdim(C)/(dim(X)^2 |U|),
///        D_s = (dim C)^s FPdim(C)/(dim(X) |U|)
struct DivisibilityReport {
    std::size_t simple_x = 0;
    BigRat s;
    std::vector<std::size_t> generated; // members of <X>
    bool faithful = false;
    std::size_t u_order = 0;
    std::vector<std::size_t> center;
    Scalar center_n_dim;
    Scalar center_order;
    TheoremCheck s_isaacs_scope;    // verification of "<X> is s-Isaacs"
    TheoremCheck zero_isaacs_scope; // verification of "<X> is 0-Isaacs"
    std::vector<TheoremReport> reports;

    const TheoremReport& by_tag(const std::string& tag) const;
};
DivisibilityReport divisibility_theorems(const CharacterTable& table,
                                         const SphericalData& spherical,
                                         const DualHypergroup& dual,
                                         std::size_t x, const BigRat& s,
                                         const HypothesisFlags& assume = {});

/// Orbit-sum identities for a generating simple X (Skipped when X does not
/// generate the whole ring):
///   6.1      dim C/|U| = sum over non-vanishing star-orbit representatives
///            of dim(C^j) |mu_j([X])|^2
///   5.3-sum  (dim C)^(2s+1)/dim(X)^2 = sum over all characters of
///            lambda_s(mu_j, X) lambda_s(mu_j#, X) dim(C^j)^(2s-1),
///            with dim(C^j)^0 read as 1 at s = 1/2.
struct OrbitSumReport {
    std::size_t simple_x = 0;
    BigRat s;
    TheoremReport norm_sum;   // tag "6.1"
    TheoremReport lambda_sum; // tag "5.3-sum"
};
OrbitSumReport orbit_sum_identities(const CharacterTable& table,
                                    const SphericalData& spherical,
                                    const DualHypergroup& dual, std::size_t x,
                                    const BigRat& s);

/// Ito-Michler criterion at a prime p | FPdim(C) on a weakly integral ring,
/// with FPdim(C) = p^alpha N and (p, N) = 1:
///   1.6  if p^alpha | |U| then p divides no FPdim(X)^2   (checked always)
///   1.5  if p divides no FPdim(X)^2 then p^alpha | |U|   (modular flag)
///   1.7  the biconditional                               (modular flag)
/// Vacuously true implications pass with the premise recorded as failed.
struct ItoMichlerReport {
    long p = 0;
    unsigned alpha = 0;
    BigInt cofactor; // N
    std::size_t u_order = 0;
    bool sylow_in_grading = false;      // p^alpha divides |U|
    std::vector<bool> square_divisible; // p | FPdim(X_i)^2, per simple
    bool none_divisible = false;
    TheoremReport forward;       // tag "1.6"
    TheoremReport converse;      // tag "1.5"
    TheoremReport biconditional; // tag "1.7"
};
ItoMichlerReport ito_michler(const CharacterTable& table,
                             const DualHypergroup& dual, long p,
                             const HypothesisFlags& assume = {});

/// The open-case integrality (dim C)^2 FPdim(C)/(dim(X)^2 |U|) in A under
/// the RN hypothesis (tag "7.2"), together with the 1-Isaacs evaluation of
/// the whole ring recorded as its companion instance (tag "7.1").
struct ConjectureReport {
    std::size_t simple_x = 0;
    TheoremReport integrality; // tag "7.2"
    SIsaacsReport one_isaacs;  // tag "7.1"
};
ConjectureReport conjecture_7_2(const CharacterTable& table,
                                const SphericalData& spherical,
                                const DualHypergroup& dual, std::size_t x,
                                const HypothesisFlags& assume = {});

} // namespace fusionlab
