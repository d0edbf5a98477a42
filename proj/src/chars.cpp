#include "fusionlab/chars.hpp"

#include "fusionlab/polyz.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>

namespace fusionlab {

namespace {

using IntMat = std::vector<std::vector<BigInt>>;
using BallVec = std::vector<ComplexBall>;

ComplexBall cb_zero(unsigned prec) {
    return ComplexBall(RealBall::exact_int(0, prec), RealBall::exact_int(0, prec));
}

ComplexBall cb_int(const BigInt& n, unsigned prec) {
    return ComplexBall(RealBall::exact_int(n, prec), RealBall::exact_int(0, prec));
}

BallVec int_matvec(const IntMat& m, const BallVec& v, unsigned prec) {
    const std::size_t n = v.size();
    BallVec out(n, cb_zero(prec));
    for (std::size_t r = 0; r < n; ++r) {
        ComplexBall acc = cb_zero(prec);
        for (std::size_t c = 0; c < n; ++c) {
            if (m[r][c] == 0) continue;
            acc = acc + v[c] * cb_int(m[r][c], prec);
        }
        out[r] = acc;
    }
    return out;
}

bool rb_contains(const RealBall& outer, const RealBall& inner) {
    return outer.lower() <= inner.lower() && inner.upper() <= outer.upper();
}

bool cb_contains(const ComplexBall& outer, const ComplexBall& inner) {
    return rb_contains(outer.re(), inner.re()) && rb_contains(outer.im(), inner.im());
}

BigInt round_rat(const BigRat& q) { return div_round_nearest(rat_num(q), rat_den(q)); }

/// Exact value of the simple root of `sf` enclosed by `root`, when the root
/// lies in Q or in a quadratic field. Integer candidates come from rounding;
/// quadratic candidates from trace/norm of the root paired with its complex
/// conjugate (non-real case) or with another real root of `sf` (real case).
/// Every candidate is validated by exact divisibility of its minimal
/// polynomial into `sf` plus containment in the certified enclosure.
std::optional<Scalar> exact_root_value(const CertifiedRoot& root,
                                       const std::vector<CertifiedRoot>& peers,
                                       const PolyZ& sf, unsigned prec) {
    const unsigned tight_prec = prec + 64;
    const BigRat mre = root.ball.re().midpoint();

    if (root.real) {
        const BigInt k = round_rat(mre);
        if (root.ball.re().contains_rational(BigRat(k))) {
            PolyZ lin;
            lin.c = {-k, BigInt(1)};
            if (poly_divides(lin, sf)) return Scalar::from_int(k);
        }
        for (const CertifiedRoot& peer : peers) {
            if (!peer.real) continue;
            const BigRat pre = peer.ball.re().midpoint();
            if (pre == mre) continue; // skip the root itself
            const BigInt t = round_rat(mre + pre);
            const BigInt n = round_rat(mre * pre);
            const BigInt disc = t * t - 4 * n;
            if (disc <= 0 || disc > (BigInt(1) << 60)) continue;
            SquarefreeSplit split = squarefree_split(disc);
            if (split.squarefree == 1) continue; // rational roots: integer case governs
            PolyZ quad;
            quad.c = {n, -t, BigInt(1)};
            if (!poly_divides(quad, sf)) continue;
            for (int sgn : {1, -1}) {
                Scalar cand = Scalar::quadratic(BigRat(t) / 2,
                                                BigRat(sgn * split.square_root) / 2,
                                                split.squarefree);
                if (cb_contains(root.ball, cand.to_ball(tight_prec))) return cand;
            }
        }
        return std::nullopt;
    }

    // Non-real root: its conjugate is also a root, so trace and norm are
    // 2*Re and |z|^2.
    const BigInt t = round_rat(mre * 2);
    const BigInt n = round_rat(root.ball.abs2().midpoint());
    const BigInt disc = t * t - 4 * n;
    if (disc >= 0 || -disc > (BigInt(1) << 60)) return std::nullopt;
    SquarefreeSplit split = squarefree_split(disc);
    PolyZ quad;
    quad.c = {n, -t, BigInt(1)};
    if (!poly_divides(quad, sf)) return std::nullopt;
    for (int sgn : {1, -1}) {
        Scalar cand = Scalar::quadratic(BigRat(t) / 2,
                                        BigRat(sgn * split.square_root) / 2,
                                        split.squarefree);
        if (cb_contains(root.ball, cand.to_ball(tight_prec))) return cand;
    }
    return std::nullopt;
}

/// Cached spectral data of one fusion matrix: the squarefree part of its
/// characteristic polynomial, certified enclosures of the (simple) roots,
/// exact values where identifiable, and the complex-conjugation involution
/// on root indices.
struct ColumnData {
    IntMat nmat;
    PolyZ sf;
    std::vector<CertifiedRoot> roots;
    std::vector<std::optional<Scalar>> exact;
    std::vector<std::size_t> conj_partner;
};

std::vector<std::size_t> conj_partners(const std::vector<CertifiedRoot>& roots) {
    std::vector<std::size_t> partner(roots.size());
    for (std::size_t r = 0; r < roots.size(); ++r) {
        ComplexBall cb = roots[r].ball.conj();
        int hit = -1;
        for (std::size_t s = 0; s < roots.size(); ++s) {
            if (ComplexBall::certainly_distinct(cb, roots[s].ball)) continue;
            if (hit >= 0)
                throw IndeterminateError("conjugate root not uniquely identified");
            hit = static_cast<int>(s);
        }
        if (hit < 0) throw IndeterminateError("conjugate root not located");
        partner[r] = static_cast<std::size_t>(hit);
    }
    for (std::size_t r = 0; r < roots.size(); ++r)
        if (partner[partner[r]] != r)
            throw IndeterminateError("conjugation on roots is not involutive");
    return partner;
}

ColumnData build_column(const FusionRing& ring, std::size_t i, unsigned prec) {
    ColumnData col;
    col.nmat = fusion_matrix(ring, i);
    col.sf = squarefree_part(char_poly(col.nmat));
    col.roots = certified_roots(col.sf, prec);
    col.exact.reserve(col.roots.size());
    for (const CertifiedRoot& r : col.roots)
        col.exact.push_back(exact_root_value(r, col.roots, col.sf, prec));
    col.conj_partner = conj_partners(col.roots);
    return col;
}

/// One identified table entry: an exact scalar, or the certified enclosure of
/// root `root_index` of the column polynomial.
struct EntryMeta {
    std::optional<std::size_t> root_index;
};

Scalar identify_entry(const ComplexBall& raw, const ColumnData& col, EntryMeta& meta) {
    int hit = -1;
    for (std::size_t r = 0; r < col.roots.size(); ++r) {
        if (ComplexBall::certainly_distinct(raw, col.roots[r].ball)) continue;
        if (hit >= 0)
            throw IndeterminateError("eigenvalue enclosure overlaps several roots");
        hit = static_cast<int>(r);
    }
    if (hit < 0) throw IndeterminateError("eigenvalue enclosure misses every root");
    const std::size_t r = static_cast<std::size_t>(hit);
    if (col.exact[r]) {
        meta.root_index.reset();
        return *col.exact[r];
    }
    meta.root_index = r;
    return Scalar::from_ball(col.roots[r].ball);
}

/// Certainty-graded equality of two table entries in one column.
/// Precondition: both values are roots of the column polynomial.
/// Returns 1 (certainly equal), 0 (certainly different), -1 (undecided).
int entry_eq(const Scalar& a, const EntryMeta& ma, const Scalar& b, const EntryMeta& mb,
             const ColumnData& col, unsigned prec) {
    if (a.is_exact() && b.is_exact())
        return scalar_eq(a, b) == EqVerdict::ExactEqual ? 1 : 0;
    if (!a.is_exact() && !b.is_exact())
        return (ma.root_index && mb.root_index) ? (*ma.root_index == *mb.root_index ? 1 : 0)
                                                : -1;
    const Scalar& ex = a.is_exact() ? a : b;
    const std::optional<std::size_t>& mr = a.is_exact() ? mb.root_index : ma.root_index;
    if (!mr) return -1;
    const ComplexBall& rb = col.roots[*mr].ball;
    ComplexBall tight = ex.to_ball(prec + 64);
    if (cb_contains(rb, tight)) return 1; // ex is the unique root inside rb
    if (ComplexBall::certainly_distinct(tight, rb)) return 0;
    return -1;
}

/// Certain three-way (Re, Im)-lexicographic comparison of two entries of one
/// column. Conjugate interval roots have exactly equal real parts, which the
/// root-index metadata proves; everything else is decided by enclosures or
/// exact fields. Throws IndeterminateError when undecidable at this precision.
int entry_cmp(const Scalar& a, const EntryMeta& ma, const Scalar& b, const EntryMeta& mb,
              const ColumnData& col, unsigned prec) {
    if (a.is_exact() && b.is_exact()) return compare_lex(a, b);
    if (!a.is_exact() && !b.is_exact() && ma.root_index && mb.root_index) {
        if (*ma.root_index == *mb.root_index) return 0;
        if (col.conj_partner[*ma.root_index] == *mb.root_index) {
            const RealBall& ia = col.roots[*ma.root_index].ball.im();
            const RealBall& ib = col.roots[*mb.root_index].ball.im();
            if (RealBall::certainly_less(ia, ib)) return -1;
            if (RealBall::certainly_less(ib, ia)) return 1;
            throw IndeterminateError("conjugate eigenvalue pair not separated");
        }
        return compare_lex(a, b);
    }
    if (entry_eq(a, ma, b, mb, col, prec) == 1) return 0;
    return compare_lex(a, b);
}

/// conj(a) == b, with the same certainty grading as entry_eq.
int entry_conj_eq(const Scalar& a, const EntryMeta& ma, const Scalar& b, const EntryMeta& mb,
                  const ColumnData& col, unsigned prec) {
    if (a.is_exact()) return entry_eq(a.conj(), EntryMeta{}, b, mb, col, prec);
    if (!ma.root_index) return -1;
    const std::size_t pr = col.conj_partner[*ma.root_index];
    EntryMeta pm;
    pm.root_index = pr;
    return entry_eq(Scalar::from_ball(col.roots[pr].ball), pm, b, mb, col, prec);
}

struct RawTable {
    std::vector<std::vector<Scalar>> tab;
    std::vector<std::vector<EntryMeta>> meta;
};

/// Eigenvector of M for the j-th certified eigenvalue via the spectral
/// projector: w = prod_{k != j} (M - lambda_k I) applied to a seed vector.
/// Returns the anchor index of the entry with the best certified lower bound
/// on its modulus, or nullopt when every entry might vanish for this seed.
std::optional<std::size_t> project_eigenvector(const IntMat& m,
                                               const std::vector<CertifiedRoot>& lambda,
                                               std::size_t j, const BallVec& seed,
                                               unsigned prec, BallVec& out) {
    out = seed;
    for (std::size_t k = 0; k < lambda.size(); ++k) {
        if (k == j) continue;
        BallVec mv = int_matvec(m, out, prec);
        for (std::size_t t = 0; t < out.size(); ++t)
            out[t] = mv[t] - lambda[k].ball * out[t];
    }
    std::optional<std::size_t> best;
    BigRat best_lb(0);
    for (std::size_t t = 0; t < out.size(); ++t) {
        BigRat lb = out[t].abs2().lower();
        if (lb > best_lb) {
            best_lb = lb;
            best = t;
        }
    }
    return best;
}

RawTable raw_character_table(const FusionRing& ring, const std::vector<ColumnData>& cols,
                             unsigned prec, unsigned seed) {
    const std::size_t m = ring.rank;

    // Random integer combination of the fusion matrices with squarefree
    // characteristic polynomial; separates the characters generically.
    std::mt19937_64 rng(seed);
    IntMat comb;
    PolyZ cp;
    bool found = false;
    for (int tries = 0; tries < 20 && !found; ++tries) {
        comb.assign(m, std::vector<BigInt>(m, BigInt(0)));
        for (std::size_t i = 0; i < m; ++i) {
            long c = static_cast<long>(rng() % 40) + 1;
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t s = 0; s < m; ++s) comb[r][s] += c * cols[i].nmat[r][s];
        }
        cp = char_poly(comb);
        found = poly_is_squarefree(cp);
    }
    if (!found)
        throw Error("character table: no separating combination of fusion matrices found");

    std::vector<CertifiedRoot> lambda = certified_roots(cp, prec);
    if (lambda.size() != m)
        throw Error("character table: eigenvalue count does not match rank");

    // Candidate seed vectors for the spectral projector: all-ones first,
    // then standard basis vectors.
    std::vector<BallVec> seeds;
    seeds.push_back(BallVec(m, cb_int(BigInt(1), prec)));
    for (std::size_t b = 0; b < m; ++b) {
        BallVec e(m, cb_zero(prec));
        e[b] = cb_int(BigInt(1), prec);
        seeds.push_back(e);
    }

    RawTable out;
    out.tab.assign(m, std::vector<Scalar>(m));
    out.meta.assign(m, std::vector<EntryMeta>(m));

    for (std::size_t j = 0; j < m; ++j) {
        BallVec w;
        std::optional<std::size_t> anchor;
        for (const BallVec& u : seeds) {
            anchor = project_eigenvector(comb, lambda, j, u, prec, w);
            if (anchor) break;
        }
        if (!anchor)
            throw IndeterminateError("character table: eigenvector projection vanished");
        const std::size_t t = *anchor;
        for (std::size_t i = 0; i < m; ++i) {
            ComplexBall num = cb_zero(prec);
            for (std::size_t c = 0; c < m; ++c) {
                if (cols[i].nmat[t][c] == 0) continue;
                num = num + w[c] * cb_int(cols[i].nmat[t][c], prec);
            }
            ComplexBall mu = num / w[t];
            out.tab[j][i] = identify_entry(mu, cols[i], out.meta[j][i]);
        }
    }
    return out;
}

void verify_homomorphism_rows(const FusionRing& ring, const RawTable& raw) {
    const std::size_t m = ring.rank;
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t k = 0; k < m; ++k) {
                Scalar lhs = raw.tab[j][i] * raw.tab[j][k];
                Scalar rhs = Scalar::from_int(0);
                for (std::size_t l = 0; l < m; ++l) {
                    unsigned c = ring.n(i, k, l);
                    if (c == 0) continue;
                    rhs = rhs + Scalar::from_int(static_cast<long>(c)) * raw.tab[j][l];
                }
                if (scalar_eq(lhs, rhs) == EqVerdict::Distinct) {
                    std::ostringstream os;
                    os << "character row " << j << " fails the homomorphism identity at ("
                       << i << ", " << k << ")";
                    throw IndeterminateError(os.str());
                }
            }
        }
    }
}

CharacterTable assemble(const FusionRing& ring, const FPDimData& fp, RawTable raw,
                        const std::vector<ColumnData>& cols, unsigned prec) {
    const std::size_t m = ring.rank;

    verify_homomorphism_rows(ring, raw);

    // Locate the Frobenius-Perron row: the unique row compatible with the
    // independently computed FP dimensions.
    std::vector<std::size_t> matches;
    for (std::size_t j = 0; j < m; ++j) {
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i)
            ok = scalar_eq(raw.tab[j][i], fp.dims[i]) != EqVerdict::Distinct;
        if (ok) matches.push_back(j);
    }
    if (matches.size() != 1)
        throw IndeterminateError("character table: Frobenius-Perron row not uniquely matched");
    const std::size_t fp_row = matches.front();

    // Upgrade FP-row entries to the exact dimension values where available.
    for (std::size_t i = 0; i < m; ++i) {
        if (!raw.tab[fp_row][i].is_exact() && fp.dims[i].is_exact()) {
            raw.tab[fp_row][i] = fp.dims[i];
            raw.meta[fp_row][i].root_index.reset();
        }
    }

    // FP row first, remaining rows in ascending (Re, Im)-lexicographic order.
    std::vector<std::size_t> rest;
    for (std::size_t j = 0; j < m; ++j)
        if (j != fp_row) rest.push_back(j);
    std::sort(rest.begin(), rest.end(), [&](std::size_t x, std::size_t y) {
        for (std::size_t i = 0; i < m; ++i) {
            int c = entry_cmp(raw.tab[x][i], raw.meta[x][i], raw.tab[y][i], raw.meta[y][i],
                              cols[i], prec);
            if (c != 0) return c < 0;
        }
        throw Error("character table: two identical character rows");
    });

    std::vector<std::size_t> order;
    order.reserve(m);
    order.push_back(fp_row);
    order.insert(order.end(), rest.begin(), rest.end());

    CharacterTable result;
    result.ring = ring;
    result.fp = fp;
    result.fp_index = 0;
    result.table.reserve(m);
    std::vector<std::vector<EntryMeta>> meta;
    meta.reserve(m);
    for (std::size_t j : order) {
        result.table.push_back(std::move(raw.tab[j]));
        meta.push_back(std::move(raw.meta[j]));
    }

    // Codegrees n_j = sum_i |mu_j(X_i)|^2, certainly positive.
    result.codegrees.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
        Scalar n = Scalar::from_int(0);
        for (std::size_t i = 0; i < m; ++i) n = n + result.table[j][i].abs2();
        if (sign_real(n) <= 0)
            throw Error("character table: nonpositive codegree");
        result.codegrees.push_back(std::move(n));
    }
    if (scalar_eq(result.codegrees[0], fp.total) == EqVerdict::Distinct)
        throw Error("character table: FP codegree disagrees with the global dimension");

    // Conjugation involution on rows.
    result.involution.assign(m, m);
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<std::size_t> certain, possible;
        for (std::size_t k = 0; k < m; ++k) {
            int verdict = 1;
            for (std::size_t i = 0; i < m && verdict != 0; ++i) {
                int e = entry_conj_eq(result.table[j][i], meta[j][i], result.table[k][i],
                                      meta[k][i], cols[i], prec);
                verdict = std::min(verdict, e);
            }
            if (verdict == 1) certain.push_back(k);
            else if (verdict == -1) possible.push_back(k);
        }
        if (certain.size() != 1 || !possible.empty())
            throw IndeterminateError("character table: conjugate row not certified");
        result.involution[j] = certain.front();
    }
    for (std::size_t j = 0; j < m; ++j)
        if (result.involution[result.involution[j]] != j)
            throw Error("character table: row conjugation is not involutive");
    if (result.involution[0] != 0)
        throw Error("character table: FP row must be self-conjugate");

    return result;
}

} // namespace

CharacterTable character_table(const FusionRing& ring) {
    std::vector<AxiomViolation> violations = validate(ring);
    if (!violations.empty()) {
        std::ostringstream os;
        os << "character table requires a valid fusion ring; first violation: "
           << violations.front().axiom << " (" << violations.front().detail << ")";
        throw Error(os.str());
    }
    if (!is_commutative(ring))
        throw Error("character table requires a commutative fusion ring");

    FPDimData fp = fp_dims(ring);

    const unsigned base = std::max(192u, working_precision());
    std::string last;
    for (unsigned attempt = 0; attempt < 6; ++attempt) {
        const unsigned prec = base << std::min(attempt, 4u);
        try {
            std::vector<ColumnData> cols;
            cols.reserve(ring.rank);
            for (std::size_t i = 0; i < ring.rank; ++i)
                cols.push_back(build_column(ring, i, prec));
            RawTable raw = raw_character_table(ring, cols, prec, 1009 + attempt);
            return assemble(ring, fp, std::move(raw), cols, prec);
        } catch (const IndeterminateError& e) {
            last = e.what();
        }
    }
    throw Error("character table: could not certify at any retry precision (last: " + last + ")");
}

SphericalData spherical_data(const CharacterTable& table, std::optional<std::size_t> delta) {
    const std::size_t m = table.rank();
    const std::size_t d = delta.value_or(table.fp_index);
    if (d >= m) throw Error("dimension character index out of range");

    const std::vector<Scalar>& row = table.table[d];
    if (scalar_eq(row[0], Scalar::from_int(1)) == EqVerdict::Distinct)
        throw Error("dimension character rejected: value at the unit is not 1");
    for (std::size_t i = 0; i < m; ++i) {
        if (!row[i].is_real())
            throw Error("dimension character rejected: entry " + std::to_string(i) +
                        " is not certainly real");
        if (row[i].is_exact() ? row[i].is_zero() : row[i].ball().contains_zero())
            throw Error("dimension character rejected: entry " + std::to_string(i) +
                        " may vanish");
        if (scalar_eq(row[i], row[table.ring.dual[i]]) == EqVerdict::Distinct)
            throw Error("dimension character rejected: not dual-symmetric at entry " +
                        std::to_string(i));
    }

    SphericalData out;
    out.dim_character_index = d;
    out.dims = row;
    out.dim_total = table.codegrees[d];
    if (sign_real(out.dim_total) <= 0)
        throw Error("dimension character rejected: global dimension not positive");
    out.class_dims.reserve(m);
    for (std::size_t j = 0; j < m; ++j)
        out.class_dims.push_back(out.dim_total / table.codegrees[j]);
    return out;
}

namespace {

/// Upper bound on |v| as a rational: |Re| + |Im| from the enclosure.
BigRat abs_upper_bound(const Scalar& v, unsigned prec) {
    if (v.is_exact() && v.is_zero()) return BigRat(0);
    ComplexBall b = v.to_ball(prec);
    auto maxabs = [](const RealBall& r) {
        BigRat lo = r.lower(), hi = r.upper();
        BigRat alo = lo < 0 ? BigRat(-lo) : lo;
        BigRat ahi = hi < 0 ? BigRat(-hi) : hi;
        return std::max(alo, ahi);
    };
    return maxabs(b.re()) + maxabs(b.im());
}

} // namespace

OrthogonalityReport verify_orthogonality(const CharacterTable& table,
                                         const SphericalData& spherical) {
    const std::size_t m = table.rank();
    const unsigned prec = working_precision();
    OrthogonalityReport report;
    report.first_ok = true;
    report.second_ok = true;
    report.max_deviation = BigRat(0);

    // First orthogonality: sum_i mu_j(X_i) mu_k(X_{i*}) = delta_{jk} n_j.
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = 0; k < m; ++k) {
            Scalar lhs = Scalar::from_int(0);
            for (std::size_t i = 0; i < m; ++i)
                lhs = lhs + table.at(j, i) * table.at(k, table.ring.dual[i]);
            Scalar rhs = (j == k) ? table.codegrees[j] : Scalar::from_int(0);
            if (scalar_eq(lhs, rhs) == EqVerdict::Distinct) report.first_ok = false;
            report.max_deviation =
                std::max(report.max_deviation, abs_upper_bound(lhs - rhs, prec));
        }
    }

    // Second orthogonality:
    // sum_j (dim C^j / dim C) mu_j(X_x) mu_j(X_{y*}) = delta_{xy}.
    for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t y = 0; y < m; ++y) {
            Scalar lhs = Scalar::from_int(0);
            for (std::size_t j = 0; j < m; ++j)
                lhs = lhs + (spherical.class_dims[j] / spherical.dim_total) *
                                table.at(j, x) * table.at(j, table.ring.dual[y]);
            Scalar rhs = Scalar::from_int(x == y ? 1 : 0);
            if (scalar_eq(lhs, rhs) == EqVerdict::Distinct) report.second_ok = false;
            report.max_deviation =
                std::max(report.max_deviation, abs_upper_bound(lhs - rhs, prec));
        }
    }
    return report;
}

OrdersData orders(const CharacterTable& table, const SphericalData& spherical) {
    const std::size_t m = table.rank();
    OrdersData out;
    out.orders.reserve(m);
    for (std::size_t j = 0; j < m; ++j)
        out.orders.push_back(table.fp.total / table.codegrees[j]);

    out.scaling_identity_ok = true;
    Scalar ratio = table.fp.total / spherical.dim_total;
    for (std::size_t j = 0; j < m; ++j)
        if (scalar_eq(out.orders[j], ratio * spherical.class_dims[j]) == EqVerdict::Distinct)
            out.scaling_identity_ok = false;

    out.pseudo_unitary_match = spherical.dim_character_index == table.fp_index;
    if (out.pseudo_unitary_match)
        for (std::size_t j = 0; j < m; ++j)
            if (scalar_eq(out.orders[j], spherical.class_dims[j]) == EqVerdict::Distinct)
                out.pseudo_unitary_match = false;
    return out;
}

Scalar subset_order(const OrdersData& data, const std::vector<std::size_t>& subset) {
    Scalar sum = Scalar::from_int(0);
    for (std::size_t j : subset) {
        if (j >= data.orders.size()) throw Error("subset order: index out of range");
        sum = sum + data.orders[j];
    }
    return sum;
}

WeaklyIntegralReport weakly_integral_check(const CharacterTable& table) {
    const Scalar& total = table.fp.total;
    if (!total.is_exact())
        throw Error("weak integrality undecidable: global dimension is not exact");

    WeaklyIntegralReport report;
    report.weakly_integral =
        total.kind() == Scalar::Kind::Rational && is_integer(total.rat());

    const std::size_t m = table.rank();
    report.fpdim_squares.reserve(m);
    for (std::size_t i = 0; i < m; ++i)
        report.fpdim_squares.push_back(is_algebraic_integer(table.fp.dims[i].abs2()));

    // Class dimensions in the pseudo-unitary normalization dim = FPdim.
    report.class_dims.reserve(m);
    for (std::size_t j = 0; j < m; ++j)
        report.class_dims.push_back(is_algebraic_integer(table.fp.total / table.codegrees[j]));
    return report;
}

} // namespace fusionlab
