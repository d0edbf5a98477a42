#include "fusionlab/polyz.hpp"

#include <algorithm>
#include <cmath>

namespace fusionlab {

namespace {

/// Complex number with exact rational parts, used for Newton polishing.
struct QC {
    BigRat re, im;
};

QC qc_sub(const QC& a, const QC& b) { return {a.re - b.re, a.im - b.im}; }

QC qc_mul(const QC& a, const QC& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

QC qc_div(const QC& a, const QC& b) {
    BigRat n = b.re * b.re + b.im * b.im;
    if (n == 0) {
        throw IndeterminateError("Newton step hit a critical point");
    }
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

QC qc_eval(const PolyZ& p, const QC& z) {
    QC v{BigRat(0), BigRat(0)};
    for (int k = p.degree(); k >= 0; --k) {
        v = qc_mul(v, z);
        v.re += BigRat(p.c[static_cast<std::size_t>(k)]);
    }
    return v;
}

/// Round an exact rational to the dyadic grid 2^-w.
BigRat to_dyadic(const BigRat& q, unsigned w) {
    BigInt m = div_round_nearest(rat_num(q) * (BigInt(1) << w), rat_den(q));
    return BigRat(m, BigInt(1) << w);
}

std::vector<BigRat> to_rat(const PolyZ& p) {
    std::vector<BigRat> r;
    r.reserve(p.c.size());
    for (const auto& x : p.c) {
        r.emplace_back(x);
    }
    return r;
}

void rat_normalize(std::vector<BigRat>& p) {
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
}

/// Remainder of a by b over Q[x]; b must be nonzero.
std::vector<BigRat> rat_rem(std::vector<BigRat> a, const std::vector<BigRat>& b) {
    rat_normalize(a);
    while (a.size() >= b.size() && !a.empty()) {
        BigRat q = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[off + i] -= q * b[i];
        }
        a.pop_back();
        rat_normalize(a);
    }
    return a;
}

PolyZ clear_denominators(const std::vector<BigRat>& p) {
    BigInt lcm = 1;
    for (const auto& q : p) {
        const BigInt& d = rat_den(q);
        lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
    }
    PolyZ out;
    out.c.reserve(p.size());
    for (const auto& q : p) {
        out.c.push_back(rat_num(q) * (lcm / rat_den(q)));
    }
    BigInt content = 0;
    for (const auto& x : out.c) {
        content = boost::multiprecision::gcd(content, boost::multiprecision::abs(x));
    }
    if (content > 1) {
        for (auto& x : out.c) {
            x /= content;
        }
    }
    if (!out.c.empty() && out.c.back() < 0) {
        for (auto& x : out.c) {
            x = -x;
        }
    }
    out.normalize();
    return out;
}

} // namespace

void PolyZ::normalize() {
    while (!c.empty() && c.back() == 0) {
        c.pop_back();
    }
}

BigInt PolyZ::eval(const BigInt& x) const {
    BigInt v = 0;
    for (int k = degree(); k >= 0; --k) {
        v = v * x + c[static_cast<std::size_t>(k)];
    }
    return v;
}

BigRat PolyZ::eval(const BigRat& x) const {
    BigRat v = 0;
    for (int k = degree(); k >= 0; --k) {
        v = v * x + BigRat(c[static_cast<std::size_t>(k)]);
    }
    return v;
}

ComplexBall PolyZ::eval(const ComplexBall& x) const {
    unsigned p = x.prec();
    ComplexBall v = ComplexBall::from_real(RealBall(0, 0, p));
    for (int k = degree(); k >= 0; --k) {
        ComplexBall coeff =
            ComplexBall::from_real(RealBall::exact_int(c[static_cast<std::size_t>(k)], p));
        v = v * x + coeff;
    }
    return v;
}

std::complex<double> PolyZ::eval(const std::complex<double>& x) const {
    std::complex<double> v = 0;
    for (int k = degree(); k >= 0; --k) {
        v = v * x + c[static_cast<std::size_t>(k)].convert_to<double>();
    }
    return v;
}

PolyZ PolyZ::derivative() const {
    PolyZ d;
    for (std::size_t k = 1; k < c.size(); ++k) {
        d.c.push_back(c[k] * BigInt(k));
    }
    d.normalize();
    return d;
}

PolyZ poly_mul(const PolyZ& a, const PolyZ& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    PolyZ out;
    out.c.assign(a.c.size() + b.c.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            out.c[i + j] += a.c[i] * b.c[j];
        }
    }
    out.normalize();
    return out;
}

PolyZ poly_div_exact(const PolyZ& num, const PolyZ& den) {
    if (den.is_zero()) {
        throw Error("polynomial division by zero");
    }
    std::vector<BigRat> a = to_rat(num);
    std::vector<BigRat> b = to_rat(den);
    rat_normalize(a);
    std::vector<BigRat> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, BigRat(0));
    while (a.size() >= b.size() && !a.empty()) {
        BigRat lead = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        q[off] = lead;
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[off + i] -= lead * b[i];
        }
        a.pop_back();
        rat_normalize(a);
    }
    if (!a.empty()) {
        throw Error("polynomial division is not exact");
    }
    PolyZ out;
    out.c.reserve(q.size());
    for (const auto& x : q) {
        if (!is_integer(x)) {
            throw Error("polynomial quotient has non-integer coefficients");
        }
        out.c.push_back(rat_num(x));
    }
    out.normalize();
    return out;
}

bool poly_divides(const PolyZ& den, const PolyZ& num) {
    if (den.is_zero()) {
        return num.is_zero();
    }
    std::vector<BigRat> a = to_rat(num);
    std::vector<BigRat> b = to_rat(den);
    rat_normalize(a);
    auto r = rat_rem(std::move(a), b);
    return r.empty();
}

PolyZ char_poly(const std::vector<std::vector<BigInt>>& m) {
    std::size_t n = m.size();
    for (const auto& row : m) {
        if (row.size() != n) {
            throw Error("char_poly: matrix is not square");
        }
    }
    // Faddeev-LeVerrier: A_1 = M, c_{n-1} = -tr A_1,
    // A_{k+1} = M (A_k + c_{n-k} I), c_{n-k-1} = -tr(A_{k+1}) / (k+1).
    // Every division is exact over the integers.
    std::vector<BigInt> coeff(n + 1, 0);
    coeff[n] = 1;
    if (n == 0) {
        PolyZ p;
        p.c = {BigInt(1)};
        return p;
    }
    std::vector<std::vector<BigInt>> a = m;
    for (std::size_t k = 1; k <= n; ++k) {
        BigInt tr = 0;
        for (std::size_t i = 0; i < n; ++i) {
            tr += a[i][i];
        }
        BigInt ck = -tr;
        if (ck % BigInt(k) != 0) {
            throw Error("char_poly: recurrence division not exact");
        }
        ck /= BigInt(k);
        coeff[n - k] = ck;
        if (k == n) {
            break;
        }
        // B = A + ck I, then A <- M * B.
        std::vector<std::vector<BigInt>> b = a;
        for (std::size_t i = 0; i < n; ++i) {
            b[i][i] += ck;
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                BigInt s = 0;
                for (std::size_t l = 0; l < n; ++l) {
                    s += m[i][l] * b[l][j];
                }
                a[i][j] = s;
            }
        }
    }
    PolyZ p;
    p.c = std::move(coeff);
    p.normalize();
    return p;
}

PolyZ poly_gcd(const PolyZ& a, const PolyZ& b) {
    std::vector<BigRat> x = to_rat(a);
    std::vector<BigRat> y = to_rat(b);
    rat_normalize(x);
    rat_normalize(y);
    while (!y.empty()) {
        auto r = rat_rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    if (x.empty()) {
        return {};
    }
    std::vector<BigRat> monic = x;
    BigRat lead = monic.back();
    for (auto& q : monic) {
        q /= lead;
    }
    return clear_denominators(monic);
}

bool poly_is_squarefree(const PolyZ& p) {
    if (p.degree() <= 1) {
        return true;
    }
    PolyZ g = poly_gcd(p, p.derivative());
    return g.degree() == 0;
}

PolyZ squarefree_part(const PolyZ& p) {
    if (p.degree() <= 1) {
        return p;
    }
    PolyZ g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) {
        return p;
    }
    return poly_div_exact(p, g);
}

double cauchy_root_bound(const PolyZ& p) {
    if (p.degree() <= 0) {
        return 1.0;
    }
    BigRat best = 0;
    const BigInt& lead = p.c.back();
    for (std::size_t i = 0; i + 1 < p.c.size(); ++i) {
        BigRat q(boost::multiprecision::abs(p.c[i]), boost::multiprecision::abs(lead));
        best = std::max(best, q);
    }
    return 1.0 + best.convert_to<double>();
}

namespace {

struct PolishedRoot {
    QC z;          // dyadic complex approximation
    BigRat rad2;   // exact upper bound for the squared certification radius
};

/// Newton-polish a double seed on the dyadic grid and compute the exact
/// squared inclusion radius  (n |p(z)/p'(z)|)^2.
PolishedRoot polish(const PolyZ& p, const PolyZ& dp, std::complex<double> seed,
                    unsigned workprec) {
    QC z{to_dyadic(rat_from_double(seed.real()), workprec),
         to_dyadic(rat_from_double(seed.imag()), workprec)};
    unsigned iters = 4;
    for (unsigned b = 64; b < workprec; b *= 2) {
        ++iters;
    }
    for (unsigned it = 0; it < iters; ++it) {
        QC fv = qc_eval(p, z);
        QC dv = qc_eval(dp, z);
        QC step = qc_div(fv, dv);
        z = qc_sub(z, step);
        z.re = to_dyadic(z.re, workprec);
        z.im = to_dyadic(z.im, workprec);
    }
    QC fv = qc_eval(p, z);
    QC dv = qc_eval(dp, z);
    BigRat f2 = fv.re * fv.re + fv.im * fv.im;
    BigRat d2 = dv.re * dv.re + dv.im * dv.im;
    if (d2 == 0) {
        throw IndeterminateError("root certification hit a critical point");
    }
    BigInt n(p.degree());
    return {z, BigRat(n * n) * f2 / d2};
}

/// Dyadic upper bound for sqrt of a nonnegative rational.
BigRat sqrt_upper(const BigRat& q, unsigned prec) {
    if (q == 0) {
        return BigRat(0);
    }
    // sqrt(a/b) <= (floor(sqrt(a * b * 4^prec)) + 1) / (b * 2^prec)
    BigInt scaled = rat_num(q) * rat_den(q) * (BigInt(1) << (2 * prec));
    BigInt r = isqrt_floor(scaled) + 1;
    return BigRat(r, rat_den(q) * (BigInt(1) << prec));
}

} // namespace

std::vector<CertifiedRoot> certified_roots(const PolyZ& p, unsigned prec) {
    int n = p.degree();
    if (n < 0) {
        throw Error("certified_roots: zero polynomial");
    }
    if (n == 0) {
        return {};
    }
    if (!poly_is_squarefree(p)) {
        throw Error("certified_roots requires a squarefree polynomial");
    }
    PolyZ dp = p.derivative();
    unsigned workprec = prec + 64;

    // Stage 1: Durand-Kerner at machine precision with a deterministic seed.
    double bound = cauchy_root_bound(p);
    if (!std::isfinite(bound)) {
        bound = 1e100;
    }
    std::vector<std::complex<double>> roots(static_cast<std::size_t>(n));
    std::complex<double> gen(0.4, 0.9);
    std::complex<double> acc(1.0, 0.0);
    for (auto& r : roots) {
        acc *= gen;
        r = acc * (bound / std::abs(gen));
    }
    double lead = p.c.back().convert_to<double>();
    for (int it = 0; it < 400; ++it) {
        double move = 0;
        for (std::size_t i = 0; i < roots.size(); ++i) {
            std::complex<double> num = p.eval(roots[i]) / lead;
            std::complex<double> den = 1.0;
            for (std::size_t j = 0; j < roots.size(); ++j) {
                if (j != i) {
                    den *= roots[i] - roots[j];
                }
            }
            if (den == std::complex<double>(0.0)) {
                den = 1e-300;
            }
            std::complex<double> delta = num / den;
            roots[i] -= delta;
            move = std::max(move, std::abs(delta));
        }
        if (move < 1e-14 * std::max(1.0, bound)) {
            break;
        }
    }

    // Stage 2: polish every root on the dyadic grid, snapping provably real
    // roots (certification with a real center can only succeed when the root
    // itself is real: a non-real root's conjugate would land in the same disk
    // and break the pairwise-disjointness count below).
    std::vector<PolishedRoot> polished;
    std::vector<bool> real_flag;
    polished.reserve(static_cast<std::size_t>(n));
    for (const auto& seed : roots) {
        PolishedRoot pr = polish(p, dp, seed, workprec);
        bool real = false;
        if (pr.z.im == 0) {
            real = true;
        } else {
            QC snapped{pr.z.re, BigRat(0)};
            QC fv = qc_eval(p, snapped);
            QC dv = qc_eval(dp, snapped);
            BigRat d2 = dv.re * dv.re + dv.im * dv.im;
            if (d2 != 0) {
                BigRat f2 = fv.re * fv.re + fv.im * fv.im;
                BigRat rad2 = BigRat(BigInt(n) * BigInt(n)) * f2 / d2;
                // Snap only when the collapsed center still certifies about as
                // tightly as the complex one; for a genuinely non-real root the
                // collapsed disk is far larger and we keep the complex center.
                if (rad2 <= 4 * (pr.rad2 + pr.z.im * pr.z.im)) {
                    pr.z = snapped;
                    pr.rad2 = rad2;
                    real = true;
                }
            }
        }
        polished.push_back(std::move(pr));
        real_flag.push_back(real);
    }

    // Stage 3: the n disks centered at z_k with radius n|p/p'| each contain at
    // least one root. If they are pairwise disjoint, each contains exactly one.
    for (std::size_t i = 0; i < polished.size(); ++i) {
        for (std::size_t j = i + 1; j < polished.size(); ++j) {
            QC d = qc_sub(polished[i].z, polished[j].z);
            BigRat dist2 = d.re * d.re + d.im * d.im;
            // need dist > r_i + r_j, i.e. dist^2 > (r_i + r_j)^2; use the
            // sufficient condition dist^2 > 2 (r_i^2 + r_j^2) >= (r_i+r_j)^2.
            if (!(dist2 > 2 * (polished[i].rad2 + polished[j].rad2))) {
                throw IndeterminateError(
                    "root certification failed: inclusion disks overlap");
            }
        }
    }
    // A disk with a real center certifies a real root: if the unique root in
    // it were non-real, its conjugate would lie in the same disk.
    std::vector<CertifiedRoot> out;
    out.reserve(polished.size());
    for (std::size_t i = 0; i < polished.size(); ++i) {
        const auto& pr = polished[i];
        BigRat rad = sqrt_upper(pr.rad2, workprec);
        BigInt rm = div_ceil(rat_num(rad) * (BigInt(1) << prec), rat_den(rad)) + 1;
        BigInt mre = div_round_nearest(rat_num(pr.z.re) * (BigInt(1) << prec),
                                       rat_den(pr.z.re));
        BigInt mim = div_round_nearest(rat_num(pr.z.im) * (BigInt(1) << prec),
                                       rat_den(pr.z.im));
        RealBall re(mre, rm + 1, prec);
        RealBall im = real_flag[i] ? RealBall(0, 0, prec) : RealBall(mim, rm + 1, prec);
        out.push_back({ComplexBall(re, im), real_flag[i]});
    }
    return out;
}

RealBall refine_real_root(const PolyZ& p, double approx, unsigned prec) {
    int n = p.degree();
    if (n <= 0) {
        throw Error("refine_real_root: constant polynomial");
    }
    PolyZ dp = p.derivative();
    unsigned workprec = prec + 64;
    BigRat z = to_dyadic(rat_from_double(approx), workprec);
    unsigned iters = 4;
    for (unsigned b = 64; b < workprec; b *= 2) {
        ++iters;
    }
    for (unsigned it = 0; it < iters; ++it) {
        BigRat fv = p.eval(z);
        BigRat dv = dp.eval(z);
        if (dv == 0) {
            throw IndeterminateError("real Newton hit a critical point");
        }
        z = to_dyadic(z - fv / dv, workprec);
    }
    BigRat fv = p.eval(z);
    BigRat dv = dp.eval(z);
    if (dv == 0) {
        throw IndeterminateError("real root certification hit a critical point");
    }
    BigRat rad = boost::multiprecision::abs(BigRat(n) * fv / dv);
    BigInt m = div_round_nearest(rat_num(z) * (BigInt(1) << prec), rat_den(z));
    BigInt r = div_ceil(rat_num(rad) * (BigInt(1) << prec), rat_den(rad)) + 2;
    return RealBall(m, r, prec);
}

} // namespace fusionlab
