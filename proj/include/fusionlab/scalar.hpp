#pragma once

#include "fusionlab/ball.hpp"
#include "fusionlab/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fusionlab {

/// Global working precision in bits for interval arithmetic (default 256).
unsigned working_precision();
void set_working_precision(unsigned bits);

/// Integrality tolerance at the current working precision: 2^(-precision/2).
BigRat integrality_tolerance();

/// An exact or high-precision algebraic number. Three representations:
/// exact rational, exact quadratic a + b*sqrt(d) (d squarefree, possibly
/// negative), or a complex ball at some working precision. Arithmetic stays
/// exact whenever both operands lie in Q or one common quadratic field and
/// degrades to certified intervals otherwise.
class Scalar {
public:
    enum class Kind { Rational, Quadratic, Interval };

    Scalar() : kind_(Kind::Rational), a_(0), b_(0), d_(0) {}

    static Scalar from_int(long v) { return from_rational(BigRat(v)); }
    static Scalar from_int(const BigInt& v) { return from_rational(BigRat(v)); }
    static Scalar from_rational(BigRat q);
    /// a + b*sqrt(d); requires d squarefree and d not in {0, 1}; b = 0
    /// collapses to a rational.
    static Scalar quadratic(BigRat a, BigRat b, long long d);
    static Scalar from_ball(ComplexBall b);
    static Scalar from_real_ball(const RealBall& b);
    /// Exact square root of an integer of either sign.
    static Scalar sqrt_int(const BigInt& n);

    Kind kind() const { return kind_; }
    bool is_exact() const { return kind_ != Kind::Interval; }

    const BigRat& rat() const;
    const BigRat& quad_a() const;
    const BigRat& quad_b() const;
    long long quad_d() const;
    const ComplexBall& ball() const;

    /// Exact zero test; an interval is never reported as zero.
    bool is_zero() const;
    bool is_one() const;
    /// Certainly real (exact real field, or an interval with an exactly-zero
    /// imaginary component).
    bool is_real() const;

    ComplexBall to_ball(unsigned prec) const;

    Scalar conj() const;
    /// x * conj(x); always real, exact when x is exact.
    Scalar abs2() const;
    Scalar pow(long e) const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& x, const Scalar& y);
    friend Scalar operator-(const Scalar& x, const Scalar& y);
    friend Scalar operator*(const Scalar& x, const Scalar& y);
    friend Scalar operator/(const Scalar& x, const Scalar& y);

private:
    Kind kind_;
    BigRat a_, b_;   // rational value in a_, or quadratic pair (a_, b_)
    long long d_ = 0;
    ComplexBall ball_;
};

enum class EqVerdict { ExactEqual, WithinRadius, Distinct, Indeterminate };
std::string eq_verdict_name(EqVerdict v);

/// Equality of two scalars. Exact vs exact is decided exactly; with an
/// interval involved: Distinct when the enclosures certainly differ,
/// WithinRadius when they overlap at tolerance scale, Indeterminate when the
/// radii are too large to say anything useful.
EqVerdict scalar_eq(const Scalar& a, const Scalar& b);

/// Certain sign (-1, 0, +1) of a certainly-real scalar.
/// Throws IndeterminateError when an interval straddles zero with positive
/// radius, and Error when the value is not certainly real.
int sign_real(const Scalar& x);

/// Certain three-way lexicographic comparison by (Re, Im).
/// Throws IndeterminateError when the working precision cannot separate them.
int compare_lex(const Scalar& a, const Scalar& b);

/// Exact square root when representable (rational -> quadratic field;
/// quadratic that is a perfect square in its own field); otherwise a certified
/// interval for positive real input.
Scalar scalar_sqrt(const Scalar& x);

/// base^(p/q) for a certainly positive real base: the positive real q-th root
/// of the p-th power. Exact when the root stays within quadratic fields.
Scalar pow_rational(const Scalar& base, const BigRat& e);

struct IntegralityVerdict {
    enum class Tier { IntegralExact, IntegralOrbit, IntegralHeuristic, NotIntegral, Indeterminate };
    Tier tier = Tier::Indeterminate;
    /// Monic witness polynomial (minimal polynomial or rounded orbit
    /// product), highest degree first; empty when no witness applies.
    std::vector<BigRat> witness;
    std::string detail;

    bool is_integral() const {
        return tier == Tier::IntegralExact || tier == Tier::IntegralOrbit ||
               tier == Tier::IntegralHeuristic;
    }
};
std::string tier_name(IntegralityVerdict::Tier t);

/// Layered decision procedure for membership in the ring of algebraic
/// integers. The optional superset must be a Galois-stable set of conjugates
/// containing v (caller-certified); it enables the orbit-product tier for
/// interval representations.
IntegralityVerdict is_algebraic_integer(const Scalar& v,
                                        const std::vector<Scalar>* conjugate_superset = nullptr);

/// beta | alpha in the ring of algebraic integers, i.e. alpha/beta is an
/// algebraic integer. A supplied superset must already be the Galois-stable
/// conjugate superset OF THE QUOTIENT alpha/beta.
IntegralityVerdict divides(const Scalar& beta, const Scalar& alpha,
                           const std::vector<Scalar>* conjugate_superset = nullptr);

/// Coefficients of prod (x - w) over the given values, highest degree first;
/// leading coefficient exactly 1. Exact when all values are exact in one field.
std::vector<Scalar> orbit_product_polynomial(const std::vector<Scalar>& values);

/// Parse the expression grammar: INT, p/q, sqrt(n), unary minus, + - * /,
/// parentheses; whitespace insignificant. Values outside Q and single
/// quadratic fields evaluate to precision intervals.
Scalar parse_scalar(const std::string& text);

/// Render a scalar. Exact values render as grammar expressions that reparse
/// to an equal scalar; intervals render in a bracketed decimal diagnostic
/// form (midpoint to a fixed digit count plus a radius magnitude).
std::string render_scalar(const Scalar& v);

/// Render a monic polynomial with rational coefficients (highest first) as a
/// human-readable string such as "x^2 - 5x + 5".
std::string render_monic_poly(const std::vector<BigRat>& coeffs);

} // namespace fusionlab
