#include "fusionlab/ball.hpp"

#include <algorithm>
#include <sstream>

namespace fusionlab {

namespace {

BigInt pow2(unsigned k) { return BigInt(1) << k; }

// Divide a signed fixed-point value by 2^shift, rounding the mantissa to
// nearest (ties away from zero). Shifts on negative big integers are
// implementation-defined in the backend, so work with magnitudes.
BigInt shift_round(const BigInt& v, unsigned shift, bool& inexact) {
    if (shift == 0) {
        inexact = false;
        return v;
    }
    BigInt av = boost::multiprecision::abs(v);
    BigInt q = av >> shift;
    BigInt r = av - (q << shift);
    inexact = (r != 0);
    if (r >= (BigInt(1) << (shift - 1))) {
        ++q;
    }
    return v < 0 ? BigInt(-q) : q;
}

} // namespace

RealBall RealBall::exact_int(const BigInt& n, unsigned prec) {
    return RealBall(n * pow2(prec), 0, prec);
}

RealBall RealBall::from_rational(const BigRat& q, unsigned prec) {
    BigInt num = rat_num(q) * pow2(prec);
    const BigInt& den = rat_den(q);
    BigInt m = num / den;           // truncates toward zero
    BigInt rem = num - m * den;
    if (rem == 0) {
        return RealBall(m, 0, prec);
    }
    // Nearest mantissa, radius 1 ulp covers the rounding error.
    BigInt m2 = div_round_nearest(num, den);
    return RealBall(m2, 1, prec);
}

RealBall RealBall::sqrt_of_int(const BigInt& d, unsigned prec) {
    if (d < 0) {
        throw Error("sqrt_of_int: negative radicand");
    }
    // floor(sqrt(d * 2^{2 prec})) differs from sqrt(d)*2^prec by < 1.
    BigInt scaled = d << static_cast<int>(2 * prec);
    BigInt root = isqrt_floor(scaled);
    return RealBall(root, 1, prec);
}

BigRat RealBall::midpoint() const { return BigRat(mant_, pow2(prec_)); }
BigRat RealBall::radius() const { return BigRat(rad_, pow2(prec_)); }
BigRat RealBall::lower() const { return BigRat(mant_ - rad_, pow2(prec_)); }
BigRat RealBall::upper() const { return BigRat(mant_ + rad_, pow2(prec_)); }

bool RealBall::contains_rational(const BigRat& q) const {
    // |q - mant/2^prec| <= rad/2^prec  <=>  |q*2^prec*den - mant*den| <= rad*den
    const BigInt& den = rat_den(q);
    BigInt lhs = boost::multiprecision::abs(rat_num(q) * pow2(prec_) - mant_ * den);
    return lhs <= rad_ * den;
}

RealBall RealBall::to_prec(unsigned prec) const {
    if (prec == prec_) {
        return *this;
    }
    if (prec > prec_) {
        BigInt up = pow2(prec - prec_);
        return RealBall(mant_ * up, rad_ * up, prec);
    }
    unsigned down = prec_ - prec;
    bool inexact = false;
    BigInt m = shift_round(mant_, down, inexact);
    BigInt r = (rad_ >> down) + 1; // outward
    if (inexact) {
        ++r;
    } else if (rad_ == 0) {
        r = 0;
    }
    return RealBall(m, r, prec);
}

RealBall operator+(const RealBall& a, const RealBall& b) {
    unsigned p = std::max(a.prec_, b.prec_);
    RealBall x = a.to_prec(p), y = b.to_prec(p);
    return RealBall(x.mant_ + y.mant_, x.rad_ + y.rad_, p);
}

RealBall operator-(const RealBall& a, const RealBall& b) {
    unsigned p = std::max(a.prec_, b.prec_);
    RealBall x = a.to_prec(p), y = b.to_prec(p);
    return RealBall(x.mant_ - y.mant_, x.rad_ + y.rad_, p);
}

RealBall operator*(const RealBall& a, const RealBall& b) {
    unsigned p = std::max(a.prec_, b.prec_);
    RealBall x = a.to_prec(p), y = b.to_prec(p);
    // (mx +- rx)(my +- ry): center mx*my, radius |mx|ry + |my|rx + rx*ry,
    // all scaled by 2^-2p; shift back down to 2^-p with outward rounding.
    BigInt center = x.mant_ * y.mant_;
    BigInt spread = boost::multiprecision::abs(x.mant_) * y.rad_ +
                    boost::multiprecision::abs(y.mant_) * x.rad_ + x.rad_ * y.rad_;
    bool inexact = false;
    BigInt m = shift_round(center, p, inexact);
    BigInt r = (spread >> p) + 1;
    if (!inexact && spread == 0) {
        r = 0;
    } else if (inexact) {
        ++r;
    }
    return RealBall(m, r, p);
}

RealBall operator/(const RealBall& a, const RealBall& b) {
    unsigned p = std::max(a.prec_, b.prec_);
    RealBall x = a.to_prec(p), y = b.to_prec(p);
    if (y.contains_zero()) {
        throw IndeterminateError("division by a ball containing zero");
    }
    // Exact endpoint division in rationals, then round the endpoints outward
    // onto the 2^-p grid.
    BigRat lo1 = x.lower() / y.lower();
    BigRat lo2 = x.lower() / y.upper();
    BigRat hi1 = x.upper() / y.lower();
    BigRat hi2 = x.upper() / y.upper();
    BigRat lo = std::min(std::min(lo1, lo2), std::min(hi1, hi2));
    BigRat hi = std::max(std::max(lo1, lo2), std::max(hi1, hi2));
    // center = (lo+hi)/2, radius = (hi-lo)/2, both as rationals.
    BigRat mid = (lo + hi) / 2;
    BigRat rad = (hi - lo) / 2;
    BigInt m = div_round_nearest(rat_num(mid) * pow2(p), rat_den(mid));
    BigInt r = div_ceil(rat_num(rad) * pow2(p), rat_den(rad)) + 1;
    if (x.rad_ == 0 && y.rad_ == 0) {
        // Exact inputs: try exact quotient first.
        BigRat q = x.midpoint() / y.midpoint();
        BigInt num = rat_num(q) * pow2(p);
        if (num % rat_den(q) == 0) {
            return RealBall(num / rat_den(q), 0, p);
        }
    }
    return RealBall(m, r, p);
}

RealBall RealBall::sqrt() const {
    if (is_negative()) {
        throw Error("sqrt of a certainly negative ball");
    }
    BigInt lo = mant_ - rad_;
    if (lo < 0) {
        lo = 0;
    }
    BigInt hi = mant_ + rad_;
    // sqrt((v * 2^-p)) = sqrt(v * 2^p) * 2^-p. Endpoint method.
    BigInt slo = isqrt_floor(lo << static_cast<int>(prec_));
    BigInt shi = isqrt_floor(hi << static_cast<int>(prec_)) + 1;
    BigInt m = (slo + shi) / 2;
    BigInt r = (shi - slo + 1) / 2 + 1;
    if (rad_ == 0 && slo * slo == (mant_ << static_cast<int>(prec_))) {
        return RealBall(slo, 0, prec_);
    }
    return RealBall(m, r, prec_);
}

RealBall RealBall::nth_root(unsigned k) const {
    if (k == 0) {
        throw Error("zeroth root");
    }
    if (k == 1) {
        return *this;
    }
    if (k == 2) {
        return sqrt();
    }
    if (!is_positive()) {
        throw IndeterminateError("nth_root requires a certainly positive ball");
    }
    // x^(1/k) with x = v*2^-p: compute iroot(v * 2^{p(k-1)}) so the result is
    // scaled by 2^-p again. Endpoint method with outward rounding.
    int up = static_cast<int>(prec_ * (k - 1));
    BigInt lo = (mant_ - rad_) << up;
    BigInt hi = (mant_ + rad_) << up;
    BigInt rlo = iroot_floor(lo, k);
    BigInt rhi = iroot_floor(hi, k) + 1;
    BigInt m = (rlo + rhi) / 2;
    BigInt r = (rhi - rlo + 1) / 2 + 1;
    return RealBall(m, r, prec_);
}

RealBall RealBall::pow_int(long e) const {
    if (e == 0) {
        return exact_int(1, prec_);
    }
    bool inv = e < 0;
    unsigned long n = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    RealBall base = *this;
    RealBall acc = exact_int(1, prec_);
    while (n > 0) {
        if (n & 1UL) {
            acc = acc * base;
        }
        n >>= 1;
        if (n > 0) {
            base = base * base;
        }
    }
    if (inv) {
        return exact_int(1, prec_) / acc;
    }
    return acc;
}

bool RealBall::certainly_distinct(const RealBall& a, const RealBall& b) {
    unsigned p = std::max(a.prec_, b.prec_);
    RealBall x = a.to_prec(p), y = b.to_prec(p);
    return boost::multiprecision::abs(x.mant_ - y.mant_) > x.rad_ + y.rad_;
}

bool RealBall::certainly_less(const RealBall& a, const RealBall& b) {
    unsigned p = std::max(a.prec_, b.prec_);
    RealBall x = a.to_prec(p), y = b.to_prec(p);
    return x.mant_ + x.rad_ < y.mant_ - y.rad_;
}

std::string RealBall::midpoint_decimal(unsigned digits) const {
    BigInt scale = 1;
    for (unsigned i = 0; i < digits; ++i) {
        scale *= 10;
    }
    BigInt v = div_round_nearest(mant_ * scale, pow2(prec_));
    bool neg = v < 0;
    if (neg) {
        v = -v;
    }
    std::string s = v.str();
    if (s.size() <= digits) {
        s.insert(0, digits + 1 - s.size(), '0');
    }
    s.insert(s.size() - digits, ".");
    // Trim trailing zeros but keep at least one fractional digit.
    std::size_t last = s.find_last_not_of('0');
    if (s[last] == '.') {
        ++last;
    }
    s.erase(last + 1);
    return (neg ? "-" : "") + s;
}

std::string RealBall::radius_magnitude() const {
    if (rad_ == 0) {
        return "0";
    }
    long k = static_cast<long>(bit_length(rad_)) - static_cast<long>(prec_);
    std::ostringstream os;
    os << "2^" << k;
    return os.str();
}

ComplexBall ComplexBall::from_real(const RealBall& re) {
    return ComplexBall(re, RealBall(0, 0, re.prec()));
}

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) {
    return ComplexBall(a.re_ + b.re_, a.im_ + b.im_);
}

ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) {
    return ComplexBall(a.re_ - b.re_, a.im_ - b.im_);
}

ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
    return ComplexBall(a.re_ * b.re_ - a.im_ * b.im_,
                       a.re_ * b.im_ + a.im_ * b.re_);
}

ComplexBall operator/(const ComplexBall& a, const ComplexBall& b) {
    RealBall n = b.abs2();
    if (n.contains_zero()) {
        throw IndeterminateError("division by a complex ball containing zero");
    }
    ComplexBall num = a * b.conj();
    return ComplexBall(num.re_ / n, num.im_ / n);
}

ComplexBall ComplexBall::pow_int(long e) const {
    unsigned p = prec();
    if (e == 0) {
        return from_real(RealBall::exact_int(1, p));
    }
    bool inv = e < 0;
    unsigned long n = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    ComplexBall base = *this;
    ComplexBall acc = from_real(RealBall::exact_int(1, p));
    while (n > 0) {
        if (n & 1UL) {
            acc = acc * base;
        }
        n >>= 1;
        if (n > 0) {
            base = base * base;
        }
    }
    if (inv) {
        return from_real(RealBall::exact_int(1, p)) / acc;
    }
    return acc;
}

bool ComplexBall::certainly_distinct(const ComplexBall& a, const ComplexBall& b) {
    return RealBall::certainly_distinct(a.re_, b.re_) ||
           RealBall::certainly_distinct(a.im_, b.im_);
}

} // namespace fusionlab
