#pragma once

#include "fusionlab/numeric.hpp"

#include <string>

namespace fusionlab {

// Fixed-point ball arithmetic: a RealBall encloses the real interval
// (mant - rad, mant + rad) * 2^-prec with integer mantissa and radius.
// Every operation rounds the radius outward, so the true value of an
// expression is always contained in the computed ball. All arithmetic is
// integer arithmetic, hence bit-for-bit deterministic at fixed precision.
class RealBall {
public:
    RealBall() : mant_(0), rad_(0), prec_(64) {}
    RealBall(BigInt mant, BigInt rad, unsigned prec)
        : mant_(std::move(mant)), rad_(std::move(rad)), prec_(prec) {}

    static RealBall exact_int(const BigInt& n, unsigned prec);
    static RealBall from_rational(const BigRat& q, unsigned prec);
    /// Enclosure of sqrt(d) for integer d >= 0.
    static RealBall sqrt_of_int(const BigInt& d, unsigned prec);

    const BigInt& mant() const { return mant_; }
    const BigInt& rad() const { return rad_; }
    unsigned prec() const { return prec_; }

    BigRat midpoint() const;
    BigRat radius() const;
    BigRat lower() const;
    BigRat upper() const;

    bool contains_zero() const { return boost::multiprecision::abs(mant_) <= rad_; }
    bool is_positive() const { return mant_ > rad_; }       // certainly > 0
    bool is_negative() const { return mant_ < -rad_; }      // certainly < 0
    bool contains_rational(const BigRat& q) const;

    RealBall to_prec(unsigned prec) const;

    RealBall operator-() const { return RealBall(-mant_, rad_, prec_); }
    RealBall abs() const { return RealBall(boost::multiprecision::abs(mant_), rad_, prec_); }

    friend RealBall operator+(const RealBall& a, const RealBall& b);
    friend RealBall operator-(const RealBall& a, const RealBall& b);
    friend RealBall operator*(const RealBall& a, const RealBall& b);
    /// Throws IndeterminateError if the divisor ball contains zero.
    friend RealBall operator/(const RealBall& a, const RealBall& b);

    RealBall sqrt() const;
    /// Enclosure of x^(1/k); requires a strictly positive ball.
    RealBall nth_root(unsigned k) const;
    RealBall pow_int(long e) const;

    /// True if the two balls cannot represent the same real number.
    static bool certainly_distinct(const RealBall& a, const RealBall& b);
    /// True if a < b for every pair of contained values.
    static bool certainly_less(const RealBall& a, const RealBall& b);

    /// Midpoint rendered in decimal (deterministic digit count).
    std::string midpoint_decimal(unsigned digits = 24) const;
    /// Smallest k with radius <= 2^k, as a printable "2^k" magnitude; "0" for exact.
    std::string radius_magnitude() const;

private:
    BigInt mant_;
    BigInt rad_;
    unsigned prec_;
};

/// Complex ball: independent real and imaginary enclosures.
class ComplexBall {
public:
    ComplexBall() = default;
    ComplexBall(RealBall re, RealBall im) : re_(std::move(re)), im_(std::move(im)) {}
    static ComplexBall from_real(const RealBall& re);

    const RealBall& re() const { return re_; }
    const RealBall& im() const { return im_; }
    unsigned prec() const { return re_.prec(); }

    ComplexBall conj() const { return ComplexBall(re_, -im_); }
    RealBall abs2() const { return re_ * re_ + im_ * im_; }
    bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }

    ComplexBall operator-() const { return ComplexBall(-re_, -im_); }
    friend ComplexBall operator+(const ComplexBall& a, const ComplexBall& b);
    friend ComplexBall operator-(const ComplexBall& a, const ComplexBall& b);
    friend ComplexBall operator*(const ComplexBall& a, const ComplexBall& b);
    friend ComplexBall operator/(const ComplexBall& a, const ComplexBall& b);

    ComplexBall pow_int(long e) const;

    static bool certainly_distinct(const ComplexBall& a, const ComplexBall& b);

private:
    RealBall re_, im_;
};

} // namespace fusionlab
