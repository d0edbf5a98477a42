#include "fusionlab/modular.hpp"

#include <algorithm>
#include <string>

namespace fusionlab {

namespace {

std::string place2(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

std::string place3(std::size_t i, std::size_t j, std::size_t k) {
    return "(" + std::to_string(i) + ", " + std::to_string(j) + ", " +
           std::to_string(k) + ")";
}

/// Scaled column col of the S-matrix: the character attached to simple col,
/// evaluated on the basis.
std::vector<Scalar> scaled_column(const ModularData& data, std::size_t col) {
    std::vector<Scalar> row(data.rank);
    for (std::size_t i = 0; i < data.rank; ++i) {
        row[i] = data.at(i, col) / data.dims[col];
    }
    return row;
}

/// Certain three-way row comparison, entrywise by (Re, Im).
int row_cmp(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = compare_lex(a[i], b[i]);
        if (c != 0) {
            return c;
        }
    }
    return 0;
}

/// Indices of rows matching a target under the given entrywise predicate,
/// split into certainly-matching and merely-unexcluded.
struct MatchLists {
    std::vector<std::size_t> certain;
    std::vector<std::size_t> possible;
};

MatchLists match_rows(const std::vector<std::vector<Scalar>>& rows,
                      const std::vector<Scalar>& target, bool conjugate) {
    MatchLists m;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        bool excluded = false;
        bool all_exact = true;
        for (std::size_t i = 0; i < target.size() && !excluded; ++i) {
            Scalar lhs = conjugate ? target[i].conj() : target[i];
            switch (scalar_eq(lhs, rows[r][i])) {
            case EqVerdict::Distinct:
                excluded = true;
                break;
            case EqVerdict::ExactEqual:
                break;
            default:
                all_exact = false;
                break;
            }
        }
        if (!excluded) {
            (all_exact ? m.certain : m.possible).push_back(r);
        }
    }
    return m;
}

} // namespace

ModularData modular_data(std::vector<std::vector<Scalar>> s,
                         std::vector<Scalar> twists) {
    ModularData data;
    data.rank = s.size();
    if (data.rank == 0) {
        throw Error("modular data needs a nonempty S-matrix");
    }
    for (std::size_t i = 0; i < data.rank; ++i) {
        if (s[i].size() != data.rank) {
            throw Error("S-matrix row " + std::to_string(i) + " has " +
                        std::to_string(s[i].size()) + " entries, expected " +
                        std::to_string(data.rank));
        }
    }
    switch (scalar_eq(s[0][0], Scalar::from_int(1))) {
    case EqVerdict::Distinct:
        throw Error("S-matrix is not normalized: entry (0, 0) differs from 1");
    case EqVerdict::Indeterminate:
        throw IndeterminateError(
            "cannot certify that the (0, 0) entry of the S-matrix is 1");
    default:
        break;
    }
    for (std::size_t i = 0; i < data.rank; ++i) {
        for (std::size_t j = i + 1; j < data.rank; ++j) {
            switch (scalar_eq(s[i][j], s[j][i])) {
            case EqVerdict::Distinct:
                throw Error("S-matrix is not symmetric at " + place2(i, j));
            case EqVerdict::Indeterminate:
                throw IndeterminateError(
                    "cannot certify S-matrix symmetry at " + place2(i, j));
            default:
                break;
            }
        }
    }
    data.dims = s[0];
    Scalar total;
    for (std::size_t i = 0; i < data.rank; ++i) {
        const Scalar& d = data.dims[i];
        if (d.is_exact()) {
            if (d.is_zero()) {
                throw Error("vanishing dimension at index " + std::to_string(i));
            }
        } else if (d.ball().contains_zero()) {
            throw IndeterminateError("cannot certify that dimension " +
                                     std::to_string(i) + " is nonzero");
        }
        total = total + d * d;
    }
    data.dim_total = total;
    // Non-degeneracy in the character sense: no two scaled columns coincide.
    for (std::size_t a = 0; a < data.rank; ++a) {
        for (std::size_t b = a + 1; b < data.rank; ++b) {
            bool distinct = false;
            bool fuzzy = false;
            for (std::size_t i = 0; i < data.rank && !distinct; ++i) {
                switch (scalar_eq(s[i][a] / data.dims[a],
                                  s[i][b] / data.dims[b])) {
                case EqVerdict::Distinct:
                    distinct = true;
                    break;
                case EqVerdict::ExactEqual:
                    break;
                default:
                    fuzzy = true;
                    break;
                }
            }
            if (!distinct) {
                if (fuzzy) {
                    throw IndeterminateError(
                        "cannot separate the characters of columns " +
                        std::to_string(a) + " and " + std::to_string(b));
                }
                throw Error("degenerate S-matrix: columns " +
                            std::to_string(a) + " and " + std::to_string(b) +
                            " define the same character");
            }
        }
    }
    if (!twists.empty() && twists.size() != data.rank) {
        throw Error("twist vector has " + std::to_string(twists.size()) +
                    " entries, expected " + std::to_string(data.rank));
    }
    data.t = std::move(twists);
    data.s = std::move(s);
    return data;
}

ModularCharacters characters_from_s(const ModularData& data,
                                    const FusionRing& ring) {
    if (ring.rank != data.rank) {
        throw Error("S-matrix rank " + std::to_string(data.rank) +
                    " does not match the fusion ring rank " +
                    std::to_string(ring.rank));
    }
    const std::size_t n = data.rank;

    std::vector<std::vector<Scalar>> rows(n);
    for (std::size_t col = 0; col < n; ++col) {
        rows[col] = scaled_column(data, col);
    }

    // Every scaled column must be an algebra homomorphism for the fusion
    // rules; anything else means the S-matrix does not belong to this ring.
    for (std::size_t col = 0; col < n; ++col) {
        const std::vector<Scalar>& mu = rows[col];
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Scalar rhs;
                for (std::size_t k = 0; k < n; ++k) {
                    unsigned c = ring.n(i, j, k);
                    if (c) {
                        rhs = rhs + Scalar::from_int(static_cast<long>(c)) * mu[k];
                    }
                }
                switch (scalar_eq(mu[i] * mu[j], rhs)) {
                case EqVerdict::Distinct:
                    throw Error("scaled column " + std::to_string(col) +
                                " is not multiplicative at the product " +
                                place2(i, j));
                case EqVerdict::Indeterminate:
                    throw IndeterminateError(
                        "cannot certify multiplicativity of scaled column " +
                        std::to_string(col) + " at the product " + place2(i, j));
                default:
                    break;
                }
            }
        }
    }

    FPDimData fp = fp_dims(ring);
    MatchLists fp_match = match_rows(rows, fp.dims, false);
    if (fp_match.certain.empty() && fp_match.possible.empty()) {
        throw Error("no S-matrix column matches the Frobenius-Perron dimensions");
    }
    if (fp_match.certain.size() != 1 || !fp_match.possible.empty()) {
        throw IndeterminateError(
            "cannot single out the Frobenius-Perron column of the S-matrix");
    }
    const std::size_t fp_col = fp_match.certain.front();

    ModularCharacters out;
    out.row_object.push_back(fp_col);
    std::vector<std::size_t> rest;
    for (std::size_t col = 0; col < n; ++col) {
        if (col != fp_col) {
            rest.push_back(col);
        }
    }
    std::sort(rest.begin(), rest.end(), [&](std::size_t a, std::size_t b) {
        int c = row_cmp(rows[a], rows[b]);
        if (c == 0) {
            throw Error("identical character rows in the S-matrix");
        }
        return c < 0;
    });
    out.row_object.insert(out.row_object.end(), rest.begin(), rest.end());
    out.row_of_object.assign(n, 0);
    for (std::size_t r = 0; r < n; ++r) {
        out.row_of_object[out.row_object[r]] = r;
    }

    CharacterTable table;
    table.ring = ring;
    table.fp = std::move(fp);
    table.fp_index = 0;
    table.table.reserve(n);
    for (std::size_t r = 0; r < n; ++r) {
        table.table.push_back(rows[out.row_object[r]]);
    }

    for (std::size_t r = 0; r < n; ++r) {
        Scalar sum;
        for (std::size_t i = 0; i < n; ++i) {
            sum = sum + table.table[r][i].abs2();
        }
        if (sign_real(sum) <= 0) {
            throw Error("non-positive codegree for character row " +
                        std::to_string(r));
        }
        table.codegrees.push_back(std::move(sum));
    }
    if (scalar_eq(table.codegrees[0], table.fp.total) == EqVerdict::Distinct) {
        throw Error("the Frobenius-Perron codegree differs from the global "
                    "Frobenius-Perron dimension");
    }

    table.involution.assign(n, 0);
    for (std::size_t r = 0; r < n; ++r) {
        MatchLists conj_match = match_rows(table.table, table.table[r], true);
        if (conj_match.certain.size() != 1 || !conj_match.possible.empty()) {
            throw IndeterminateError(
                "cannot identify the conjugate of character row " +
                std::to_string(r));
        }
        table.involution[r] = conj_match.certain.front();
    }
    for (std::size_t r = 0; r < n; ++r) {
        if (table.involution[table.involution[r]] != r) {
            throw Error("character conjugation is not involutive");
        }
    }
    if (table.involution[0] != 0) {
        throw Error("the Frobenius-Perron row is not self-conjugate");
    }

    out.table = std::move(table);
    return out;
}

std::vector<Scalar> class_dims_modular(const ModularData& data) {
    std::vector<Scalar> out;
    out.reserve(data.rank);
    for (std::size_t col = 0; col < data.rank; ++col) {
        Scalar column_norm;
        for (std::size_t i = 0; i < data.rank; ++i) {
            column_norm = column_norm + data.at(i, col).abs2();
        }
        // Codegree of the scaled column times dims^2 is the column norm, so
        // dim(C^col) = dims^2 matches dim C / n_col exactly when the column
        // norm reproduces the global dimension.
        Scalar class_dim = data.dims[col] * data.dims[col];
        Scalar codegree = column_norm / data.dims[col].abs2();
        switch (scalar_eq(class_dim * codegree, data.dim_total)) {
        case EqVerdict::Distinct:
            throw Error("class dimension " + std::to_string(col) +
                        " disagrees with dim C divided by the codegree");
        case EqVerdict::Indeterminate:
            throw IndeterminateError(
                "cannot certify the class dimension at index " +
                std::to_string(col));
        default:
            break;
        }
        out.push_back(std::move(class_dim));
    }
    return out;
}

VerlindeReport verlinde_cross_check(const ModularData& data,
                                    const FusionRing& ring) {
    if (ring.rank != data.rank) {
        throw Error("S-matrix rank " + std::to_string(data.rank) +
                    " does not match the fusion ring rank " +
                    std::to_string(ring.rank));
    }
    const std::size_t n = data.rank;
    VerlindeReport report;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                Scalar sum;
                for (std::size_t l = 0; l < n; ++l) {
                    sum = sum + data.at(i, l) * data.at(j, l) *
                                    data.at(k, l).conj() /
                                    (data.dims[l] * data.dim_total);
                }
                unsigned expected = ring.n(i, j, k);
                switch (scalar_eq(sum,
                                  Scalar::from_int(static_cast<long>(expected)))) {
                case EqVerdict::Distinct:
                    report.consistent = false;
                    report.mismatches.push_back(
                        {i, j, k, std::move(sum), expected});
                    break;
                case EqVerdict::Indeterminate:
                    throw IndeterminateError(
                        "cannot certify the reconstructed fusion coefficient "
                        "at " +
                        place3(i, j, k));
                default:
                    break;
                }
            }
        }
    }
    return report;
}

TheoremReport theorem_1_2(const ModularData& data, const FusionRing& ring,
                          std::size_t x, const HypothesisFlags& assume) {
    if (x >= ring.rank) {
        throw Error("simple index " + std::to_string(x) +
                    " out of range for rank " + std::to_string(ring.rank));
    }
    ModularCharacters derived = characters_from_s(data, ring);
    const CharacterTable& table = derived.table;

    TheoremReport r;
    r.tag = "1.2";
    r.statement =
        "dim(X)^2 divides dim C / |U(C)| when the data is modular and X "
        "generates the ring";
    r.verified.push_back("S-matrix non-degenerate");
    r.verified.push_back("S-matrix columns multiplicative");
    if (assume.modular) {
        r.asserted.push_back("modular");
    }

    DualHypergroup dual = dual_constants(table);
    GroupLikeData group = group_likes(table, dual);
    const Scalar u = Scalar::from_int(static_cast<long>(group.order()));

    const Scalar& dx = data.dims[x];
    Scalar dx2 = dx * dx;
    Scalar ratio = data.dim_total / u;
    Scalar quotient = ratio / dx2;

    r.quantities.emplace_back("X", ring.label(x));
    r.quantities.emplace_back("dim C", render_scalar(data.dim_total));
    r.quantities.emplace_back("dim(X)", render_scalar(dx));
    r.quantities.emplace_back("|U(C)|", render_scalar(u));
    r.quantities.emplace_back("dim C / |U(C)|", render_scalar(ratio));
    r.quantities.emplace_back("quotient", render_scalar(quotient));

    r.verdict = divides(dx2, ratio);

    const bool faithful = generated_closure(ring, {x}).size() == ring.rank;
    if (!faithful) {
        r.status = TheoremCheck::Status::Skipped;
        r.detail = "hypothesis not met: <X> is the whole ring";
        return r;
    }
    r.verified.push_back("<X> is the whole ring");

    // Proof identity: the quotient equals the sum of |mu_X([X_rho])|^2 over
    // representatives rho of the star-orbits on which mu([X]) does not vanish.
    StarOrbits orbits = star_orbits(group, dual, table, x);
    const std::size_t mu_row = derived.row_of_object[x];
    Scalar orbit_sum;
    for (std::size_t o = 0; o < orbits.orbits.size(); ++o) {
        if (!orbits.non_vanishing[o]) {
            continue;
        }
        std::size_t rep = orbits.representatives[o];
        orbit_sum =
            orbit_sum + table.at(mu_row, derived.row_object[rep]).abs2();
    }
    r.quantities.emplace_back("orbit sum", render_scalar(orbit_sum));
    EqVerdict eq = scalar_eq(quotient, orbit_sum);
    r.equality = eq;

    if (r.verdict.tier == IntegralityVerdict::Tier::NotIntegral) {
        r.status = TheoremCheck::Status::Fail;
        r.detail = r.verdict.detail.empty()
                       ? "the quotient is not an algebraic integer"
                       : r.verdict.detail;
    } else if (eq == EqVerdict::Distinct) {
        r.status = TheoremCheck::Status::Fail;
        r.detail = "the orbit-sum identity fails";
    } else if (!r.verdict.is_integral() || eq == EqVerdict::Indeterminate) {
        r.status = TheoremCheck::Status::Indeterminate;
        r.detail = "the divisibility or the orbit-sum identity could not be "
                   "decided";
    } else {
        r.status = TheoremCheck::Status::Pass;
        r.detail = "dim(X)^2 divides dim C / |U(C)| and the orbit-sum "
                   "identity holds";
    }
    return r;
}

} // namespace fusionlab
