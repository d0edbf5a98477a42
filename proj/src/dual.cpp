#include "fusionlab/dual.hpp"

#include <algorithm>
#include <sstream>

namespace fusionlab {

namespace {

Scalar sc_int(long v) { return Scalar::from_int(v); }

/// Reads mu_i * mu_j as a single character: the index k with p_hat_k(i,j)
/// equal to 1 and every other entry equal to 0 (up to verdict). Returns
/// nullopt when some entry is certainly neither; throws IndeterminateError
/// when a verdict is inconclusive.
std::optional<std::size_t> star_single(const DualHypergroup& dual, std::size_t i,
                                       std::size_t j) {
    std::optional<std::size_t> hit;
    for (std::size_t k = 0; k < dual.rank; ++k) {
        const Scalar& v = dual.p(i, j, k);
        EqVerdict e0 = scalar_eq(v, sc_int(0));
        EqVerdict e1 = scalar_eq(v, sc_int(1));
        if (e0 == EqVerdict::Indeterminate || e1 == EqVerdict::Indeterminate ||
            (e0 != EqVerdict::Distinct && e1 != EqVerdict::Distinct))
            throw IndeterminateError("star product coefficient could not be resolved");
        if (e0 != EqVerdict::Distinct) continue; // zero coefficient
        if (e1 == EqVerdict::Distinct) return std::nullopt; // neither 0 nor 1
        if (hit) return std::nullopt; // two unit coefficients cannot happen
        hit = k;
    }
    return hit;
}

} // namespace

std::string rn_status_name(DualHypergroup::RNStatus s) {
    switch (s) {
    case DualHypergroup::RNStatus::Yes: return "yes";
    case DualHypergroup::RNStatus::No: return "no";
    case DualHypergroup::RNStatus::Indeterminate: return "indeterminate";
    }
    return "?";
}

DualHypergroup dual_constants(const CharacterTable& table) {
    const std::size_t m = table.rank();
    DualHypergroup dual;
    dual.rank = m;
    dual.p_hat.assign(m * m * m, Scalar());

    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t k = 0; k < m; ++k) {
                Scalar sum = sc_int(0);
                for (std::size_t t = 0; t < m; ++t)
                    sum = sum + table.at(i, t) * table.at(j, t) *
                                    table.at(k, table.ring.dual[t]) / table.fp.dims[t];
                dual.p_hat[(i * m + j) * m + k] = sum / table.codegrees[k];
            }
        }
    }

    // Reconstruction: the tensor must reproduce the defining pointwise
    // product mu_i([X]) mu_j([X]) / FPdim(X) on every simple.
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t t = 0; t < m; ++t) {
                Scalar lhs = table.at(i, t) * table.at(j, t) / table.fp.dims[t];
                Scalar rhs = sc_int(0);
                for (std::size_t k = 0; k < m; ++k)
                    rhs = rhs + dual.p(i, j, k) * table.at(k, t);
                if (scalar_eq(lhs, rhs) == EqVerdict::Distinct)
                    throw Error("dual tensor fails to reproduce the pointwise product");
            }
        }
    }

    // The FP character is the star-unit.
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k)
            if (scalar_eq(dual.p(0, j, k), sc_int(j == k ? 1 : 0)) == EqVerdict::Distinct)
                throw Error("FP character is not the star-unit of the dual");

    // Order cross-check: h_i = FPdim(C)/n_i must equal 1/p_hat_0(i, i#).
    for (std::size_t i = 0; i < m; ++i) {
        Scalar h = table.fp.total / table.codegrees[i];
        const Scalar& p0 = dual.p(i, table.involution[i], 0);
        if (scalar_eq(h * p0, sc_int(1)) == EqVerdict::Distinct)
            throw Error("order of character " + std::to_string(i) +
                        " disagrees between codegree and dual-constant formulas");
    }

    dual.rn = rn_check(dual).status;
    return dual;
}

RNReport rn_check(const DualHypergroup& dual) {
    const BigRat tau = integrality_tolerance();
    RNReport report;
    bool indeterminate = false;
    const std::size_t m = dual.rank;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t k = 0; k < m; ++k) {
                const Scalar& v = dual.p(i, j, k);
                if (v.is_exact()) {
                    if (!v.is_real() || sign_real(v) < 0)
                        report.violations.push_back({i, j, k, v});
                    continue;
                }
                const ComplexBall& b = v.ball();
                BigRat re_lo = b.re().lower(), re_hi = b.re().upper();
                BigRat im_lo = b.im().lower(), im_hi = b.im().upper();
                bool pass = re_lo >= -tau && im_lo >= -tau && im_hi <= tau;
                bool fail = re_hi < -tau || im_lo > tau || im_hi < -tau;
                if (fail) report.violations.push_back({i, j, k, v});
                else if (!pass) indeterminate = true;
            }
        }
    }
    report.status = !report.violations.empty()
                        ? DualHypergroup::RNStatus::No
                        : (indeterminate ? DualHypergroup::RNStatus::Indeterminate
                                         : DualHypergroup::RNStatus::Yes);
    return report;
}

GroupLikeData group_likes(const CharacterTable& table, const DualHypergroup& dual) {
    const std::size_t m = table.rank();
    GroupLikeData g;

    for (std::size_t j = 0; j < m; ++j) {
        bool member = true;
        for (std::size_t i = 0; i < m && member; ++i) {
            Scalar lhs = table.at(j, i).abs2();
            Scalar rhs = table.fp.dims[i].abs2();
            EqVerdict e = scalar_eq(lhs, rhs);
            if (e == EqVerdict::Indeterminate)
                throw IndeterminateError("group-like membership of character " +
                                         std::to_string(j) + " is indeterminate");
            member = e != EqVerdict::Distinct;
        }
        if (member) g.members.push_back(j);
    }
    if (g.members.empty() || g.members.front() != 0)
        throw Error("group-like set must contain the FP character");

    auto pos_of = [&](std::size_t ch) -> std::size_t {
        auto it = std::lower_bound(g.members.begin(), g.members.end(), ch);
        if (it == g.members.end() || *it != ch)
            throw Error("star product of group-likes left the group-like set");
        return static_cast<std::size_t>(it - g.members.begin());
    };
    g.identity_pos = 0;

    const std::size_t n = g.members.size();
    g.mult.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            std::optional<std::size_t> k = star_single(dual, g.members[a], g.members[b]);
            if (!k)
                throw Error("star product of two group-likes is not a single character");
            g.mult[a][b] = pos_of(*k);
        }
    }

    // Group axioms from the finished table.
    for (std::size_t a = 0; a < n; ++a) {
        if (g.mult[g.identity_pos][a] != a || g.mult[a][g.identity_pos] != a)
            throw Error("group-like identity law failed");
        bool has_inverse = false;
        for (std::size_t b = 0; b < n; ++b)
            has_inverse = has_inverse || g.mult[a][b] == g.identity_pos;
        if (!has_inverse) throw Error("group-like element has no inverse");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (g.mult[g.mult[a][b]][c] != g.mult[a][g.mult[b][c]])
                    throw Error("group-like multiplication is not associative");

    // Closure under the involution, and h_j = 1 on members.
    for (std::size_t ch : g.members) {
        pos_of(table.involution[ch]);
        Scalar h = table.fp.total / table.codegrees[ch];
        if (scalar_eq(h, sc_int(1)) == EqVerdict::Distinct)
            throw Error("group-like character must have order 1");
    }
    return g;
}

StarOrbits star_orbits(const GroupLikeData& group, const DualHypergroup& dual,
                       const CharacterTable& table, std::optional<std::size_t> simple_x) {
    const std::size_t m = dual.rank;
    StarOrbits out;

    // The permutation induced by each group-like.
    std::vector<std::vector<std::size_t>> action;
    action.reserve(group.members.size());
    for (std::size_t g : group.members) {
        std::vector<std::size_t> perm(m);
        std::vector<bool> seen(m, false);
        for (std::size_t j = 0; j < m; ++j) {
            std::optional<std::size_t> k = star_single(dual, g, j);
            if (!k)
                throw Error("a group-like character does not permute the dual basis");
            perm[j] = *k;
            if (seen[*k])
                throw Error("a group-like character does not act injectively");
            seen[*k] = true;
        }
        action.push_back(std::move(perm));
    }

    out.orbit_of.assign(m, m);
    for (std::size_t j = 0; j < m; ++j) {
        if (out.orbit_of[j] != m) continue;
        std::vector<std::size_t> orbit;
        std::vector<std::size_t> work{j};
        out.orbit_of[j] = out.orbits.size();
        while (!work.empty()) {
            std::size_t c = work.back();
            work.pop_back();
            orbit.push_back(c);
            for (const auto& perm : action) {
                std::size_t d = perm[c];
                if (out.orbit_of[d] == m) {
                    out.orbit_of[d] = out.orbits.size();
                    work.push_back(d);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        out.representatives.push_back(orbit.front());
        out.orbits.push_back(std::move(orbit));
    }

    if (simple_x) {
        const std::size_t x = *simple_x;
        if (x >= m) throw Error("designated simple index out of range");
        out.designated_simple = x;
        out.non_vanishing.reserve(out.orbits.size());
        for (const auto& orbit : out.orbits) {
            int verdict = -1; // -1 unset, 0 vanishing, 1 non-vanishing
            for (std::size_t j : orbit) {
                const Scalar& v = table.at(j, x);
                int here;
                if (v.is_exact()) here = v.is_zero() ? 0 : 1;
                else if (!v.ball().contains_zero()) here = 1;
                else
                    throw IndeterminateError("orbit vanishing undecidable at character " +
                                             std::to_string(j));
                if (verdict == -1) verdict = here;
                else if (verdict != here)
                    throw Error("orbit mixes vanishing and non-vanishing characters");
            }
            out.non_vanishing.push_back(verdict == 1);
        }
    }
    return out;
}

OrbitLemmaReport verify_orbit_lemmas(const CharacterTable& table, std::size_t simple_x) {
    const std::size_t m = table.rank();
    if (simple_x >= m) throw Error("simple index out of range");

    DualHypergroup dual = dual_constants(table);
    GroupLikeData group = group_likes(table, dual);
    StarOrbits orbits = star_orbits(group, dual, table, simple_x);

    OrbitLemmaReport report;
    auto add = [&](std::string name, OrbitLemmaCheck::Status st, std::string detail) {
        if (st == OrbitLemmaCheck::Status::Fail) report.all_ok = false;
        report.checks.push_back({std::move(name), st, std::move(detail)});
    };

    // |mu_j([Y])| constant on every orbit, for every simple Y.
    {
        bool ok = true;
        std::string detail;
        for (std::size_t o = 0; o < orbits.orbits.size() && ok; ++o) {
            std::size_t rep = orbits.representatives[o];
            for (std::size_t y = 0; y < m && ok; ++y) {
                Scalar ref = table.at(rep, y).abs2();
                for (std::size_t j : orbits.orbits[o]) {
                    if (scalar_eq(table.at(j, y).abs2(), ref) == EqVerdict::Distinct) {
                        ok = false;
                        std::ostringstream os;
                        os << "|mu(" << table.ring.label(y) << ")| differs inside orbit " << o;
                        detail = os.str();
                        break;
                    }
                }
            }
        }
        add("character moduli constant on orbits",
            ok ? OrbitLemmaCheck::Status::Pass : OrbitLemmaCheck::Status::Fail, detail);
    }

    // Codegrees and class dimensions constant on every orbit.
    {
        bool ok = true;
        std::string detail;
        for (std::size_t o = 0; o < orbits.orbits.size() && ok; ++o) {
            const Scalar& ref = table.codegrees[orbits.representatives[o]];
            for (std::size_t j : orbits.orbits[o]) {
                if (scalar_eq(table.codegrees[j], ref) == EqVerdict::Distinct) {
                    ok = false;
                    detail = "codegree differs inside orbit " + std::to_string(o);
                    break;
                }
            }
        }
        add("codegrees constant on orbits",
            ok ? OrbitLemmaCheck::Status::Pass : OrbitLemmaCheck::Status::Fail, detail);

        bool ok2 = true;
        std::string detail2;
        for (std::size_t o = 0; o < orbits.orbits.size() && ok2; ++o) {
            Scalar ref = table.fp.total / table.codegrees[orbits.representatives[o]];
            for (std::size_t j : orbits.orbits[o]) {
                if (scalar_eq(table.fp.total / table.codegrees[j], ref) == EqVerdict::Distinct) {
                    ok2 = false;
                    detail2 = "class dimension differs inside orbit " + std::to_string(o);
                    break;
                }
            }
        }
        add("class dimensions constant on orbits",
            ok2 ? OrbitLemmaCheck::Status::Pass : OrbitLemmaCheck::Status::Fail, detail2);
    }

    // Free action on non-vanishing orbits, for a generating simple.
    {
        std::vector<std::size_t> closure = generated_closure(table.ring, {simple_x});
        if (closure.size() != m) {
            add("free action on non-vanishing orbits", OrbitLemmaCheck::Status::Skipped,
                table.ring.label(simple_x) + " does not generate the ring");
        } else {
            bool ok = true;
            std::string detail;
            for (std::size_t o = 0; o < orbits.orbits.size(); ++o) {
                if (!orbits.non_vanishing[o]) continue;
                if (orbits.orbits[o].size() != group.order()) {
                    ok = false;
                    std::ostringstream os;
                    os << "non-vanishing orbit " << o << " has size " << orbits.orbits[o].size()
                       << ", expected " << group.order();
                    detail = os.str();
                    break;
                }
            }
            add("free action on non-vanishing orbits",
                ok ? OrbitLemmaCheck::Status::Pass : OrbitLemmaCheck::Status::Fail, detail);
        }
    }

    return report;
}

CentralCharacter central_character(const CharacterTable& table, std::size_t simple_x) {
    const std::size_t m = table.rank();
    if (simple_x >= m) throw Error("simple index out of range");

    DualHypergroup dual = dual_constants(table);
    GroupLikeData group = group_likes(table, dual);

    CentralCharacter out;
    out.group_members = group.members;
    out.x_generates = generated_closure(table.ring, {simple_x}).size() == m;

    out.values.reserve(group.members.size());
    for (std::size_t g : group.members) {
        Scalar w = table.at(g, simple_x) / table.fp.dims[simple_x];
        if (scalar_eq(w.abs2(), sc_int(1)) == EqVerdict::Distinct)
            throw Error("central character value is not unimodular");
        out.values.push_back(std::move(w));
    }

    out.faithful = true;
    for (std::size_t a = 0; a < group.members.size(); ++a) {
        if (a == group.identity_pos) continue;
        EqVerdict e = scalar_eq(out.values[a], sc_int(1));
        if (e == EqVerdict::Indeterminate)
            throw IndeterminateError("central character faithfulness is indeterminate");
        if (e != EqVerdict::Distinct) out.faithful = false;
    }
    if (out.x_generates && !out.faithful)
        throw Error("central character of a generating simple must be faithful");
    return out;
}

} // namespace fusionlab
