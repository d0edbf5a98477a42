#include "fusionlab/numeric.hpp"

#include <cmath>

namespace fusionlab {

BigInt isqrt_floor(const BigInt& n) {
    if (n < 0) throw Error("isqrt of negative integer");
    return boost::multiprecision::sqrt(n);
}

BigInt iroot_floor(const BigInt& n, unsigned k) {
    if (n < 0) throw Error("iroot of negative integer");
    if (k == 0) throw Error("0th root");
    if (k == 1 || n <= 1) return n;
    if (k == 2) return isqrt_floor(n);
    // Newton iteration x <- ((k-1)x + n/x^(k-1))/k from an overestimate.
    unsigned bits = bit_length(n);
    BigInt x = BigInt(1) << (bits / k + 1);
    while (true) {
        BigInt xk1 = 1;
        for (unsigned i = 0; i + 1 < k; ++i) xk1 *= x;
        BigInt next = ((k - 1) * x + n / xk1) / k;
        if (next >= x) break;
        x = next;
    }
    // x is now floor or slightly above; fix up.
    auto pw = [&](const BigInt& v) {
        BigInt p = 1;
        for (unsigned i = 0; i < k; ++i) p *= v;
        return p;
    };
    while (pw(x) > n) --x;
    while (pw(x + 1) <= n) ++x;
    return x;
}

SquarefreeSplit squarefree_split(const BigInt& n) {
    if (n == 0) return {0, 0};
    bool neg = n < 0;
    BigInt m = neg ? -n : n;
    if (m > BigInt("4611686018427387904")) // 2^62: trial division stays cheap below this
        throw Error("radicand too large for squarefree factorization: " + m.str());
    long long v = m.convert_to<long long>();
    BigInt s = 1;
    long long d = 1;
    for (long long p = 2; p * p <= v; p += (p == 2 ? 1 : 2)) {
        if (v % p) continue;
        int e = 0;
        while (v % p == 0) { v /= p; ++e; }
        for (int i = 0; i < e / 2; ++i) s *= p;
        if (e % 2) d *= p;
    }
    d *= v; // leftover prime
    if (neg) d = -d;
    return {s, d};
}

BigInt div_round_nearest(const BigInt& num, const BigInt& den) {
    if (den <= 0) throw Error("div_round_nearest requires positive denominator");
    BigInt q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r < 0) { r += den; q -= 1; }
    if (2 * r >= den) q += 1;
    return q;
}

BigInt div_ceil(const BigInt& num, const BigInt& den) {
    if (den <= 0) throw Error("div_ceil requires positive denominator");
    BigInt q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r < 0) { r += den; q -= 1; }
    if (r != 0) q += 1;
    return q;
}

unsigned bit_length(const BigInt& n) {
    if (n == 0) return 0;
    return static_cast<unsigned>(boost::multiprecision::msb(n < 0 ? BigInt(-n) : n)) + 1;
}

BigRat rat_from_double(double x) {
    if (!std::isfinite(x)) throw Error("cannot convert non-finite double to rational");
    if (x == 0.0) return BigRat(0);
    int e = 0;
    double m = std::frexp(x, &e); // x = m * 2^e, 0.5 <= |m| < 1
    auto mant = static_cast<long long>(std::ldexp(m, 53)); // exact: 53-bit mantissa
    e -= 53;
    BigRat q(mant);
    if (e >= 0) {
        q *= BigRat(BigInt(1) << e);
    } else {
        q /= BigRat(BigInt(1) << -e);
    }
    return q;
}

} // namespace fusionlab
