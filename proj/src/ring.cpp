#include "fusionlab/ring.hpp"

#include "fusionlab/polyz.hpp"

#include <cmath>

namespace fusionlab {

FusionRing FusionRing::zeros(std::size_t rank) {
    FusionRing r;
    r.rank = rank;
    r.labels.resize(rank);
    for (std::size_t i = 0; i < rank; ++i) {
        r.labels[i] = "X" + std::to_string(i);
    }
    r.dual.resize(rank);
    for (std::size_t i = 0; i < rank; ++i) {
        r.dual[i] = i;
    }
    r.nmat.assign(rank * rank * rank, 0);
    return r;
}

std::vector<AxiomViolation> validate(const FusionRing& ring) {
    const std::size_t m = ring.rank;
    if (m == 0) {
        throw Error("fusion ring must have positive rank");
    }
    if (ring.labels.size() != m || ring.dual.size() != m || ring.nmat.size() != m * m * m) {
        throw Error("fusion ring tensors do not match the declared rank");
    }
    std::vector<AxiomViolation> out;

    for (std::size_t i = 0; i < m; ++i) {
        if (ring.dual[i] >= m) {
            throw Error("dual permutation index out of range");
        }
    }
    if (ring.dual[0] != 0) {
        out.push_back({"duality", {0}, "the unit must be self-dual"});
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (ring.dual[ring.dual[i]] != i) {
            out.push_back({"duality", {i}, "dual map is not an involution at " + ring.label(i)});
        }
    }

    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t k = 0; k < m; ++k) {
                if (ring.n(i, j, k) > kMultiplicityCap) {
                    out.push_back({"multiplicity_cap", {i, j, k},
                                   "structure constant exceeds the supported bound"});
                }
            }
        }
    }

    // Unit law: N[0][j][k] = N[j][0][k] = delta_{jk}.
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = 0; k < m; ++k) {
            unsigned want = j == k ? 1 : 0;
            if (ring.n(0, j, k) != want) {
                out.push_back({"unit", {0, j, k},
                               "left unit law fails at (1, " + ring.label(j) + ")"});
            }
            if (ring.n(j, 0, k) != want) {
                out.push_back({"unit", {j, 0, k},
                               "right unit law fails at (" + ring.label(j) + ", 1)"});
            }
        }
    }

    // Duality: N[i][j][0] = delta_{j, i*}.
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            unsigned want = j == ring.dual[i] ? 1 : 0;
            if (ring.n(i, j, 0) != want) {
                out.push_back({"duality", {i, j, 0},
                               "unit multiplicity in " + ring.label(i) + " * " + ring.label(j) +
                                   " must be " + std::to_string(want)});
            }
        }
    }

    // Associativity: sum_m N[i][j][m] N[m][k][l] = sum_m N[j][k][m] N[i][m][l].
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t k = 0; k < m; ++k) {
                for (std::size_t l = 0; l < m; ++l) {
                    unsigned long long lhs = 0, rhs = 0;
                    for (std::size_t t = 0; t < m; ++t) {
                        lhs += static_cast<unsigned long long>(ring.n(i, j, t)) * ring.n(t, k, l);
                        rhs += static_cast<unsigned long long>(ring.n(j, k, t)) * ring.n(i, t, l);
                    }
                    if (lhs != rhs) {
                        out.push_back({"associativity", {i, j, k, l},
                                       "(" + ring.label(i) + " " + ring.label(j) + ") " +
                                           ring.label(k) + " vs " + ring.label(i) + " (" +
                                           ring.label(j) + " " + ring.label(k) + ") differ in the " +
                                           ring.label(l) + " component"});
                    }
                }
            }
        }
    }

    // Frobenius reciprocity: N[i][j][k] = N[i*][k][j] = N[k][j*][i].
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t k = 0; k < m; ++k) {
                unsigned base = ring.n(i, j, k);
                if (ring.n(ring.dual[i], k, j) != base || ring.n(k, ring.dual[j], i) != base) {
                    out.push_back({"frobenius_reciprocity", {i, j, k},
                                   "dual rotations of N[" + ring.label(i) + "][" + ring.label(j) +
                                       "][" + ring.label(k) + "] disagree"});
                }
            }
        }
    }

    return out;
}

std::vector<std::vector<BigInt>> fusion_matrix(const FusionRing& ring, std::size_t i) {
    if (i >= ring.rank) {
        throw Error("fusion matrix index out of range");
    }
    std::vector<std::vector<BigInt>> m(ring.rank, std::vector<BigInt>(ring.rank));
    for (std::size_t k = 0; k < ring.rank; ++k) {
        for (std::size_t j = 0; j < ring.rank; ++j) {
            m[k][j] = ring.n(i, j, k);
        }
    }
    return m;
}

bool is_commutative(const FusionRing& ring) {
    for (std::size_t i = 0; i < ring.rank; ++i) {
        for (std::size_t j = i + 1; j < ring.rank; ++j) {
            for (std::size_t k = 0; k < ring.rank; ++k) {
                if (ring.n(i, j, k) != ring.n(j, i, k)) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace {

/// Spectral-radius estimate of a nonnegative matrix by norm-growth power
/// iteration (sound for these matrices: they are normal, so the L2 growth
/// rate converges to the spectral radius from any positive seed).
double spectral_radius_estimate(const std::vector<std::vector<BigInt>>& m) {
    std::size_t n = m.size();
    std::vector<double> v(n, 1.0);
    std::vector<double> w(n);
    double ratio = 1.0;
    for (int it = 0; it < 600; ++it) {
        double norm2 = 0;
        for (std::size_t k = 0; k < n; ++k) {
            double s = 0;
            for (std::size_t j = 0; j < n; ++j) {
                s += m[k][j].convert_to<double>() * v[j];
            }
            w[k] = s;
            norm2 += s * s;
        }
        double norm = std::sqrt(norm2);
        if (norm == 0) {
            return 0.0;
        }
        ratio = norm;
        for (std::size_t k = 0; k < n; ++k) {
            v[k] = w[k] / norm;
        }
    }
    return ratio;
}

BigRat ball_mid(const RealBall& b) { return b.midpoint(); }

/// The spectral radius of a fusion matrix, identified exactly when it is an
/// integer or a real quadratic irrational (checked by exact division against
/// the squarefree characteristic polynomial), otherwise returned as the
/// certified enclosure of the largest real root.
Scalar fp_dim_of_matrix(const std::vector<std::vector<BigInt>>& mat, double rho) {
    PolyZ sf = squarefree_part(char_poly(mat));
    auto roots = certified_roots(sf, std::max(192u, working_precision()));
    // Perron root: the largest real eigenvalue (always present for a
    // nonnegative matrix); the power-iteration estimate is a cross-check.
    int best = -1;
    for (std::size_t r = 0; r < roots.size(); ++r) {
        if (!roots[r].real) {
            continue;
        }
        if (best < 0 ||
            ball_mid(roots[r].ball.re()) > ball_mid(roots[static_cast<std::size_t>(best)].ball.re())) {
            best = static_cast<int>(r);
        }
    }
    if (best < 0) {
        throw Error("no real eigenvalue found for a nonnegative fusion matrix");
    }
    const RealBall& perron = roots[static_cast<std::size_t>(best)].ball.re();
    if (boost::multiprecision::abs(ball_mid(perron) - rat_from_double(rho)) > BigRat(1, 100)) {
        throw Error("power-iteration estimate disagrees with the certified spectrum");
    }

    // Integer candidate.
    BigRat mid = ball_mid(perron);
    BigInt k = div_round_nearest(rat_num(mid), rat_den(mid));
    if (perron.contains_rational(BigRat(k))) {
        PolyZ lin;
        lin.c = {-k, BigInt(1)};
        if (poly_divides(lin, sf)) {
            return Scalar::from_int(k);
        }
    }
    // Quadratic candidate paired with each other real root: trace and norm
    // from the midpoints, certified by exact division.
    for (std::size_t r = 0; r < roots.size(); ++r) {
        if (static_cast<int>(r) == best || !roots[r].real) {
            continue;
        }
        BigRat m2 = ball_mid(roots[r].ball.re());
        BigInt t = div_round_nearest(rat_num(mid + m2), rat_den(mid + m2));
        BigRat prod = mid * m2;
        BigInt n = div_round_nearest(rat_num(prod), rat_den(prod));
        BigInt disc = t * t - 4 * n;
        if (disc <= 0) {
            continue;
        }
        SquarefreeSplit sp = squarefree_split(disc);
        if (sp.squarefree == 1) {
            continue; // rational roots; the linear test already covers them
        }
        PolyZ quad;
        quad.c = {n, -t, BigInt(1)};
        if (!poly_divides(quad, sf)) {
            continue;
        }
        // Larger root (t + s sqrt(d))/2; accept only if it lies in the
        // certified Perron enclosure (which contains exactly one root).
        Scalar cand = Scalar::quadratic(BigRat(t, 2), BigRat(sp.square_root, 2), sp.squarefree);
        RealBall tight = cand.to_ball(perron.prec() + 64).re();
        BigRat gap = boost::multiprecision::abs(ball_mid(perron) - tight.midpoint());
        if (gap + tight.radius() <= perron.radius()) {
            return cand;
        }
    }
    return Scalar::from_real_ball(perron.to_prec(working_precision()));
}

} // namespace

FPDimData fp_dims(const FusionRing& ring) {
    if (!is_commutative(ring)) {
        throw Error("Frobenius-Perron data requires a commutative ring");
    }
    FPDimData out;
    out.dims.reserve(ring.rank);
    for (std::size_t i = 0; i < ring.rank; ++i) {
        auto mat = fusion_matrix(ring, i);
        out.dims.push_back(fp_dim_of_matrix(mat, spectral_radius_estimate(mat)));
    }

    // Internal consistency: unit, duality symmetry, homomorphism. Any
    // certain failure means the identification above went wrong.
    if (!out.dims[0].is_one()) {
        throw Error("FPdim of the unit did not evaluate to 1");
    }
    for (std::size_t i = 0; i < ring.rank; ++i) {
        if (scalar_eq(out.dims[i], out.dims[ring.dual[i]]) == EqVerdict::Distinct) {
            throw Error("FPdim is not dual-invariant at " + ring.label(i));
        }
        if (sign_real(out.dims[i]) <= 0) {
            throw Error("FPdim must be positive at " + ring.label(i));
        }
    }
    for (std::size_t i = 0; i < ring.rank; ++i) {
        for (std::size_t j = 0; j < ring.rank; ++j) {
            Scalar lhs = out.dims[i] * out.dims[j];
            Scalar rhs = Scalar::from_int(0L);
            for (std::size_t k = 0; k < ring.rank; ++k) {
                if (unsigned c = ring.n(i, j, k)) {
                    rhs = rhs + Scalar::from_int(static_cast<long>(c)) * out.dims[k];
                }
            }
            if (scalar_eq(lhs, rhs) == EqVerdict::Distinct) {
                throw Error("FPdim homomorphism identity failed at (" + ring.label(i) + ", " +
                            ring.label(j) + ")");
            }
        }
    }

    out.total = Scalar::from_int(0L);
    for (const auto& d : out.dims) {
        out.total = out.total + d * d;
    }
    return out;
}

std::vector<std::size_t> generated_closure(const FusionRing& ring,
                                           const std::vector<std::size_t>& generators) {
    std::vector<bool> in(ring.rank, false);
    std::vector<std::size_t> work;
    auto add = [&](std::size_t i) {
        if (i >= ring.rank) {
            throw Error("generator index out of range");
        }
        if (!in[i]) {
            in[i] = true;
            work.push_back(i);
        }
    };
    add(0);
    for (std::size_t g : generators) {
        add(g);
    }
    // Worklist closure: duals and all constituents of pairwise products.
    while (!work.empty()) {
        std::size_t i = work.back();
        work.pop_back();
        add(ring.dual[i]);
        for (std::size_t j = 0; j < ring.rank; ++j) {
            if (!in[j]) {
                continue;
            }
            for (std::size_t k = 0; k < ring.rank; ++k) {
                if (ring.n(i, j, k) != 0 || ring.n(j, i, k) != 0) {
                    add(k);
                }
            }
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ring.rank; ++i) {
        if (in[i]) {
            out.push_back(i);
        }
    }
    return out;
}

} // namespace fusionlab
