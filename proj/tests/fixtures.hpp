#pragma once

#include "fusionlab/ring.hpp"
#include "fusionlab/scalar.hpp"

#include <array>
#include <cstddef>

// In-code constructions of the bundled example rings, used across the test
// suites as ground truth independent of the JSON corpus files.
namespace fixtures {

using fusionlab::FusionRing;

inline FusionRing fibonacci() {
    FusionRing r = FusionRing::zeros(2);
    r.labels = {"1", "tau"};
    r.set_n(0, 0, 0, 1);
    r.set_n(0, 1, 1, 1);
    r.set_n(1, 0, 1, 1);
    r.set_n(1, 1, 0, 1);
    r.set_n(1, 1, 1, 1);
    return r;
}

inline FusionRing ising() {
    FusionRing r = FusionRing::zeros(3);
    r.labels = {"1", "eps", "sigma"};
    auto prod = [&r](std::size_t i, std::size_t j, std::initializer_list<std::size_t> ks) {
        for (std::size_t k : ks) {
            r.set_n(i, j, k, r.n(i, j, k) + 1);
        }
    };
    for (std::size_t j = 0; j < 3; ++j) {
        prod(0, j, {j});
        if (j != 0) {
            prod(j, 0, {j});
        }
    }
    prod(1, 1, {0});
    prod(1, 2, {2});
    prod(2, 1, {2});
    prod(2, 2, {0, 1});
    return r;
}

inline FusionRing rep_s3() {
    FusionRing r = FusionRing::zeros(3);
    r.labels = {"1", "sgn", "V"};
    auto prod = [&r](std::size_t i, std::size_t j, std::initializer_list<std::size_t> ks) {
        for (std::size_t k : ks) {
            r.set_n(i, j, k, r.n(i, j, k) + 1);
        }
    };
    for (std::size_t j = 0; j < 3; ++j) {
        prod(0, j, {j});
        if (j != 0) {
            prod(j, 0, {j});
        }
    }
    prod(1, 1, {0});
    prod(1, 2, {2});
    prod(2, 1, {2});
    prod(2, 2, {0, 1, 2});
    return r;
}

inline FusionRing pointed_cyclic(std::size_t n) {
    FusionRing r = FusionRing::zeros(n);
    for (std::size_t i = 0; i < n; ++i) {
        r.labels[i] = "g" + std::to_string(i);
        r.dual[i] = (n - i) % n;
        for (std::size_t j = 0; j < n; ++j) {
            r.set_n(i, j, (i + j) % n, 1);
        }
    }
    r.labels[0] = "1";
    return r;
}

/// Common fusion ring of the representation categories of the two
/// nonabelian groups of order 8: four invertibles forming Z/2 x Z/2 and one
/// two-dimensional object.
inline FusionRing rep_d4() {
    FusionRing r = FusionRing::zeros(5);
    r.labels = {"1", "a", "b", "ab", "V"};
    // Invertible part: Klein four-group on indices 0..3 (bitwise xor).
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            r.set_n(i, j, i ^ j, 1);
        }
    }
    for (std::size_t i = 0; i < 4; ++i) {
        r.set_n(i, 4, 4, 1);
        r.set_n(4, i, 4, 1);
    }
    for (std::size_t k = 0; k < 4; ++k) {
        r.set_n(4, 4, k, 1);
    }
    return r;
}

inline FusionRing rep_q8() {
    FusionRing r = rep_d4();
    r.labels = {"1", "i", "j", "k", "V"};
    return r;
}

inline FusionRing rep_a4() {
    FusionRing r = FusionRing::zeros(4);
    r.labels = {"1", "w", "wb", "T"};
    r.dual = {0, 2, 1, 3};
    auto prod = [&r](std::size_t i, std::size_t j, std::size_t k, unsigned v = 1) {
        r.set_n(i, j, k, v);
    };
    for (std::size_t j = 0; j < 4; ++j) {
        prod(0, j, j);
        if (j != 0) {
            prod(j, 0, j);
        }
    }
    prod(1, 1, 2); // w * w = wb
    prod(1, 2, 0); // w * wb = 1
    prod(2, 1, 0);
    prod(2, 2, 1); // wb * wb = w
    prod(1, 3, 3);
    prod(3, 1, 3);
    prod(2, 3, 3);
    prod(3, 2, 3);
    // T * T = 1 + w + wb + 2T
    prod(3, 3, 0);
    prod(3, 3, 1);
    prod(3, 3, 2);
    prod(3, 3, 3, 2);
    return r;
}

/// Pointed ring on Z/2 x Z/2.
inline FusionRing toric_code() {
    FusionRing r = FusionRing::zeros(4);
    r.labels = {"1", "e", "m", "f"};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            r.set_n(i, j, i ^ j, 1);
        }
    }
    return r;
}

inline FusionRing ising_x_z2() {
    FusionRing base = ising();
    FusionRing r = FusionRing::zeros(6);
    auto idx = [](std::size_t x, std::size_t g) { return 2 * x + g; };
    for (std::size_t x = 0; x < 3; ++x) {
        for (std::size_t g = 0; g < 2; ++g) {
            r.labels[idx(x, g)] = base.labels[x] + (g ? "-" : "+");
            r.dual[idx(x, g)] = idx(base.dual[x], g); // all Z/2 elements self-inverse
        }
    }
    for (std::size_t x = 0; x < 3; ++x) {
        for (std::size_t y = 0; y < 3; ++y) {
            for (std::size_t z = 0; z < 3; ++z) {
                unsigned c = base.n(x, y, z);
                if (!c) {
                    continue;
                }
                for (std::size_t g = 0; g < 2; ++g) {
                    for (std::size_t h = 0; h < 2; ++h) {
                        r.set_n(idx(x, g), idx(y, h), idx(z, (g + h) % 2), c);
                    }
                }
            }
        }
    }
    return r;
}

/// Noncommutative pointed ring: the group ring of the symmetric group on
/// three letters, basis indexed by the six permutations.
inline FusionRing vec_s3() {
    using Perm = std::array<int, 3>;
    auto compose = [](const Perm& f, const Perm& g) {
        return Perm{f[g[0]], f[g[1]], f[g[2]]};
    };
    std::array<Perm, 6> elems = {{
        {0, 1, 2}, // e
        {1, 2, 0}, // r
        {2, 0, 1}, // r^2
        {0, 2, 1}, // s
        {2, 1, 0}, // rs
        {1, 0, 2}, // r^2 s
    }};
    auto find = [&elems](const Perm& p) -> std::size_t {
        for (std::size_t i = 0; i < elems.size(); ++i) {
            if (elems[i] == p) {
                return i;
            }
        }
        return 6;
    };
    FusionRing r = FusionRing::zeros(6);
    r.labels = {"e", "r", "r2", "s", "rs", "r2s"};
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = 0; j < 6; ++j) {
            r.set_n(i, j, find(compose(elems[i], elems[j])), 1);
        }
        // Inverse: the unique j with i*j = e.
        for (std::size_t j = 0; j < 6; ++j) {
            if (find(compose(elems[i], elems[j])) == 0) {
                r.dual[i] = j;
            }
        }
    }
    return r;
}

/// Ising with one structure constant corrupted (associativity breaks).
inline FusionRing ising_corrupted() {
    FusionRing r = ising();
    r.set_n(2, 2, 1, 2);
    return r;
}

// Unnormalized S-matrices (upper-left entry 1, first row = quantum dims) for
// the rings that carry modular data, indexed consistently with the ring
// fixtures above.

using SMatrix = std::vector<std::vector<fusionlab::Scalar>>;

inline SMatrix fibonacci_smatrix() {
    using fusionlab::BigRat;
    using fusionlab::Scalar;
    const Scalar one = Scalar::from_int(1);
    const Scalar phi = Scalar::quadratic(BigRat(1, 2), BigRat(1, 2), 5);
    return {{one, phi}, {phi, Scalar::from_int(-1)}};
}

inline SMatrix ising_smatrix() {
    using fusionlab::Scalar;
    const Scalar one = Scalar::from_int(1);
    const Scalar rt2 = Scalar::sqrt_int(2);
    const Scalar neg_rt2 = Scalar::from_int(-1) * rt2;
    return {{one, one, rt2}, {one, one, neg_rt2}, {rt2, neg_rt2, Scalar()}};
}

inline SMatrix toric_smatrix() {
    using fusionlab::Scalar;
    auto row = [](long a, long b, long c, long d) {
        return std::vector<Scalar>{Scalar::from_int(a), Scalar::from_int(b),
                                   Scalar::from_int(c), Scalar::from_int(d)};
    };
    return {row(1, 1, 1, 1), row(1, 1, -1, -1), row(1, -1, 1, -1),
            row(1, -1, -1, 1)};
}

} // namespace fixtures
