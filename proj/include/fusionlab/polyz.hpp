#pragma once

#include "fusionlab/ball.hpp"
#include "fusionlab/numeric.hpp"

#include <complex>
#include <vector>

namespace fusionlab {

/// Univariate polynomial with big-integer coefficients, lowest degree first.
/// Invariant: empty means the zero polynomial; otherwise the leading
/// coefficient is nonzero.
struct PolyZ {
    std::vector<BigInt> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    void normalize();

    BigInt eval(const BigInt& x) const;
    BigRat eval(const BigRat& x) const;
    ComplexBall eval(const ComplexBall& x) const;
    std::complex<double> eval(const std::complex<double>& x) const;

    PolyZ derivative() const;
};

PolyZ poly_mul(const PolyZ& a, const PolyZ& b);

/// Exact division; throws if the remainder is nonzero.
PolyZ poly_div_exact(const PolyZ& num, const PolyZ& den);

/// True iff den divides num exactly over Q[x].
bool poly_divides(const PolyZ& den, const PolyZ& num);

/// Characteristic polynomial det(xI - M) of an integer matrix, computed by
/// the Faddeev-LeVerrier recurrence (all intermediates stay integral).
PolyZ char_poly(const std::vector<std::vector<BigInt>>& m);

/// Primitive gcd over Z[x] (via the subresultant-free rational route:
/// monic gcd over Q, then cleared to a primitive integer polynomial).
PolyZ poly_gcd(const PolyZ& a, const PolyZ& b);

bool poly_is_squarefree(const PolyZ& p);

/// p / gcd(p, p'), as a primitive integer polynomial (same roots, all simple).
PolyZ squarefree_part(const PolyZ& p);

/// Upper bound B with every complex root of p inside |z| <= B (Cauchy bound).
double cauchy_root_bound(const PolyZ& p);

/// One certified simple root of a squarefree polynomial.
struct CertifiedRoot {
    ComplexBall ball;       // enclosure with certified radius
    bool real;              // true if the root is provably real
};

/// All complex roots of a squarefree integer polynomial, certified: the
/// returned balls are pairwise disjoint and each contains exactly one root.
/// Deterministic for a fixed input and precision. Throws IndeterminateError
/// if certification fails at the requested precision.
std::vector<CertifiedRoot> certified_roots(const PolyZ& p, unsigned prec);

/// Refine an approximate real root (known to be simple and separated) by
/// Newton iteration in ball arithmetic; returns a certified real enclosure.
RealBall refine_real_root(const PolyZ& p, double approx, unsigned prec);

} // namespace fusionlab
