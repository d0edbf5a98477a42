#include "fusionlab/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace fusionlab {

namespace {

std::string index_list(const std::vector<std::size_t>& v) {
    std::ostringstream os;
    os << "{";
    for (std::size_t a = 0; a < v.size(); ++a) {
        if (a) os << ", ";
        os << v[a];
    }
    os << "}";
    return os.str();
}

/// Certified membership comparison: true when the values are equal (exactly
/// or within tolerance), false when certainly distinct.
bool eq_member(const Scalar& a, const Scalar& b, const std::string& what) {
    EqVerdict v = scalar_eq(a, b);
    if (v == EqVerdict::Indeterminate) {
        throw IndeterminateError("indeterminate membership comparison: " + what);
    }
    return v != EqVerdict::Distinct;
}

void check_indices(std::size_t rank, const std::vector<std::size_t>& v,
                   const char* what) {
    for (std::size_t i : v) {
        if (i >= rank) {
            std::ostringstream os;
            os << what << " index " << i << " out of range for rank " << rank;
            throw Error(os.str());
        }
    }
}

/// n(S) = sum of orders h_j = FPdim(C)/n_j over a character set.
Scalar formal_order(const CharacterTable& table,
                    const std::vector<std::size_t>& chars) {
    Scalar total = Scalar::from_int(0L);
    for (std::size_t j : chars) {
        total = total + table.fp.total / table.codegrees[j];
    }
    return total;
}

TheoremCheck make_check(std::string name, EqVerdict v, std::string detail) {
    TheoremCheck c;
    c.name = std::move(name);
    c.detail = std::move(detail);
    switch (v) {
    case EqVerdict::ExactEqual:
    case EqVerdict::WithinRadius:
        c.status = TheoremCheck::Status::Pass;
        break;
    case EqVerdict::Distinct:
        c.status = TheoremCheck::Status::Fail;
        break;
    case EqVerdict::Indeterminate:
        c.status = TheoremCheck::Status::Indeterminate;
        break;
    }
    return c;
}

TheoremCheck skipped(std::string name, std::string why) {
    TheoremCheck c;
    c.name = std::move(name);
    c.status = TheoremCheck::Status::Skipped;
    c.detail = std::move(why);
    return c;
}

/// Finds the unique induced-table row matching value_of(column) on every
/// induced column; returns the row index. Throws Error when no row matches
/// and IndeterminateError when several do.
template <typename ValueAt>
std::size_t match_induced_row(const CharacterTable& induced, ValueAt&& value_of,
                              const std::string& what) {
    std::vector<std::size_t> hits;
    for (std::size_t r = 0; r < induced.rank(); ++r) {
        bool all = true;
        for (std::size_t a = 0; a < induced.rank() && all; ++a) {
            EqVerdict v = scalar_eq(induced.at(r, a), value_of(a));
            if (v == EqVerdict::Indeterminate) {
                throw IndeterminateError("indeterminate row match: " + what);
            }
            all = v != EqVerdict::Distinct;
        }
        if (all) hits.push_back(r);
    }
    if (hits.empty()) {
        throw Error(what + ": no row of the induced table matches");
    }
    if (hits.size() > 1) {
        throw IndeterminateError(what + ": several induced rows match " +
                                 index_list(hits));
    }
    return hits.front();
}

} // namespace

std::string check_status_name(TheoremCheck::Status s) {
    switch (s) {
    case TheoremCheck::Status::Pass: return "pass";
    case TheoremCheck::Status::Fail: return "fail";
    case TheoremCheck::Status::Skipped: return "skipped";
    case TheoremCheck::Status::Indeterminate: return "indeterminate";
    }
    return "?";
}

bool Subring::contains(std::size_t i) const {
    return std::binary_search(members.begin(), members.end(), i);
}

std::size_t Subring::position(std::size_t i) const {
    auto it = std::lower_bound(members.begin(), members.end(), i);
    if (it == members.end() || *it != i) {
        std::ostringstream os;
        os << "simple " << i << " is not a member of the subring " << index_list(members);
        throw Error(os.str());
    }
    return static_cast<std::size_t>(it - members.begin());
}

Subring subring_from_members(const FusionRing& ring,
                             std::vector<std::size_t> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    check_indices(ring.rank, members, "subring member");
    if (members.empty() || members.front() != 0) {
        throw Error("subring must contain the unit");
    }
    auto contains = [&](std::size_t k) {
        return std::binary_search(members.begin(), members.end(), k);
    };
    for (std::size_t i : members) {
        if (!contains(ring.dual[i])) {
            std::ostringstream os;
            os << "subring " << index_list(members) << " is not closed: dual of "
               << ring.label(i) << " is outside";
            throw Error(os.str());
        }
        for (std::size_t j : members) {
            for (std::size_t k = 0; k < ring.rank; ++k) {
                if (ring.n(i, j, k) > 0 && !contains(k)) {
                    std::ostringstream os;
                    os << "subring " << index_list(members) << " is not closed: "
                       << ring.label(i) << " x " << ring.label(j)
                       << " has constituent " << ring.label(k) << " outside";
                    throw Error(os.str());
                }
            }
        }
    }

    Subring s;
    s.members = std::move(members);
    s.parent_rank = ring.rank;
    std::size_t m = s.members.size();
    s.induced = FusionRing::zeros(m);
    for (std::size_t a = 0; a < m; ++a) {
        s.induced.labels[a] = ring.label(s.members[a]);
        s.induced.dual[a] = s.position(ring.dual[s.members[a]]);
        for (std::size_t b = 0; b < m; ++b) {
            for (std::size_t c = 0; c < m; ++c) {
                s.induced.set_n(a, b, c,
                                ring.n(s.members[a], s.members[b], s.members[c]));
            }
        }
    }
    std::vector<AxiomViolation> bad = validate(s.induced);
    if (!bad.empty()) {
        throw Error("induced ring of subring " + index_list(s.members) +
                    " fails validation: " + bad.front().axiom + ": " +
                    bad.front().detail);
    }
    if (!is_commutative(s.induced)) {
        throw Error("induced ring of subring " + index_list(s.members) +
                    " is not commutative");
    }
    return s;
}

Subring generated_subring(const FusionRing& ring,
                          const std::vector<std::size_t>& generators) {
    return subring_from_members(ring, generated_closure(ring, generators));
}

Subring adjoint_subring(const FusionRing& ring, const Subring& d) {
    std::vector<std::size_t> gens;
    for (std::size_t y : d.members) {
        std::size_t yd = ring.dual[y];
        for (std::size_t k = 0; k < ring.rank; ++k) {
            if (ring.n(y, yd, k) > 0) gens.push_back(k);
        }
    }
    return generated_subring(ring, gens);
}

Subring adjoint_subring(const FusionRing& ring) {
    std::vector<std::size_t> all(ring.rank);
    for (std::size_t i = 0; i < ring.rank; ++i) all[i] = i;
    return adjoint_subring(ring, subring_from_members(ring, all));
}

Subring pointed_subring(const FusionRing& ring) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < ring.rank; ++i) {
        unsigned total = 0;
        for (std::size_t k = 0; k < ring.rank; ++k) total += ring.n(i, ring.dual[i], k);
        if (total == 1) members.push_back(i);
    }
    return subring_from_members(ring, std::move(members));
}

Scalar subring_fpdim(const FPDimData& fp, const Subring& d) {
    Scalar total = Scalar::from_int(0L);
    for (std::size_t i : d.members) total = total + fp.dims[i].abs2();
    return total;
}

Scalar subring_dim(const SphericalData& spherical, const Subring& d) {
    Scalar total = Scalar::from_int(0L);
    for (std::size_t i : d.members) total = total + spherical.dims[i].abs2();
    return total;
}

ObjectKernelCenter object_kernel_center(const CharacterTable& table,
                                        std::size_t x) {
    check_indices(table.rank(), {x}, "object");
    ObjectKernelCenter out;
    out.object = x;
    const Scalar& dim = table.fp.dims[x];
    Scalar dim2 = dim.abs2();
    for (std::size_t j = 0; j < table.rank(); ++j) {
        std::ostringstream ctx;
        ctx << "character " << j << " on " << table.ring.label(x);
        bool in_ker = eq_member(table.at(j, x), dim, "kernel of " + ctx.str());
        bool in_z = eq_member(table.at(j, x).abs2(), dim2, "center of " + ctx.str());
        if (in_ker && !in_z) {
            throw Error("kernel member outside the center at " + ctx.str());
        }
        if (in_ker) out.kernel.push_back(j);
        if (in_z) out.center.push_back(j);
    }
    out.faithful =
        generated_closure(table.ring, {x}).size() == table.rank();
    out.brauer_ok = out.faithful == (out.kernel.size() == 1);
    return out;
}

CharacterKernelCenter character_kernel_center(const CharacterTable& table,
                                              std::size_t j) {
    check_indices(table.rank(), {j}, "character");
    std::vector<std::size_t> ker, cen;
    for (std::size_t i = 0; i < table.rank(); ++i) {
        std::ostringstream ctx;
        ctx << "character " << j << " on " << table.ring.label(i);
        if (eq_member(table.at(j, i), table.fp.dims[i], "kernel of " + ctx.str())) {
            ker.push_back(i);
        }
        if (eq_member(table.at(j, i).abs2(), table.fp.dims[i].abs2(),
                      "center of " + ctx.str())) {
            cen.push_back(i);
        }
    }
    CharacterKernelCenter out;
    out.character = j;
    try {
        out.kernel = subring_from_members(table.ring, std::move(ker));
    } catch (const Error& e) {
        throw Error("kernel of character " + std::to_string(j) +
                    " violates subring closure: " + e.what());
    }
    try {
        out.center = subring_from_members(table.ring, std::move(cen));
    } catch (const Error& e) {
        throw Error("center of character " + std::to_string(j) +
                    " violates subring closure: " + e.what());
    }
    return out;
}

Subring perp_of_characters(const CharacterTable& table,
                           const std::vector<std::size_t>& chars) {
    check_indices(table.rank(), chars, "character");
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < table.rank(); ++i) {
        bool all = true;
        for (std::size_t j : chars) {
            std::ostringstream ctx;
            ctx << "perp at character " << j << ", simple " << i;
            if (!eq_member(table.at(j, i), table.fp.dims[i], ctx.str())) {
                all = false;
                break;
            }
        }
        if (all) members.push_back(i);
    }
    try {
        return subring_from_members(table.ring, std::move(members));
    } catch (const Error& e) {
        throw Error("perp of characters " + index_list(chars) +
                    " violates subring closure: " + e.what());
    }
}

std::vector<std::size_t> perp_of_objects(const CharacterTable& table,
                                         const std::vector<std::size_t>& objects) {
    check_indices(table.rank(), objects, "object");
    std::vector<std::size_t> chars;
    for (std::size_t j = 0; j < table.rank(); ++j) {
        bool all = true;
        for (std::size_t i : objects) {
            std::ostringstream ctx;
            ctx << "perp at character " << j << ", simple " << i;
            if (!eq_member(table.at(j, i), table.fp.dims[i], ctx.str())) {
                all = false;
                break;
            }
        }
        if (all) chars.push_back(j);
    }
    return chars;
}

PerpIdentities perp_identities(const CharacterTable& table,
                               const DualHypergroup& dual,
                               const std::vector<std::size_t>& chars) {
    PerpIdentities out;
    out.perp = perp_of_characters(table, chars);
    out.bidual = perp_of_objects(table, out.perp.members);

    std::vector<std::size_t> s = chars;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    out.bidual_contains_s =
        std::includes(out.bidual.begin(), out.bidual.end(), s.begin(), s.end());
    out.bidual_equals_s = out.bidual == s;

    const std::string name = "perp order identity";
    if (dual.rn != DualHypergroup::RNStatus::Yes) {
        out.order_identity =
            skipped(name, "dual structure constants not certified real nonnegative");
        return out;
    }
    Scalar lhs = subring_fpdim(table.fp, out.perp) * formal_order(table, s);
    out.order_identity =
        make_check(name, scalar_eq(lhs, table.fp.total),
                   "FPdim(S-perp) * n(S) = " + render_scalar(lhs) +
                       ", FPdim(C) = " + render_scalar(table.fp.total));
    return out;
}

TheoremCheck biduality_check(const CharacterTable& table,
                             const DualHypergroup& dual, const Subring& d) {
    const std::string name = "object-side biduality";
    if (dual.rn != DualHypergroup::RNStatus::Yes) {
        return skipped(name, "dual structure constants not certified real nonnegative");
    }
    std::vector<std::size_t> up = perp_of_objects(table, d.members);
    Subring back = perp_of_characters(table, up);
    TheoremCheck c;
    c.name = name;
    if (back.members == d.members) {
        c.status = TheoremCheck::Status::Pass;
    } else {
        c.status = TheoremCheck::Status::Fail;
        c.detail = "perp-perp of " + index_list(d.members) + " is " +
                   index_list(back.members);
    }
    return c;
}

DimensionalOrder dimensional_order(const CharacterTable& table,
                                   const SphericalData& spherical,
                                   const std::vector<std::size_t>& chars) {
    check_indices(table.rank(), chars, "character");
    DimensionalOrder out;
    out.n_dim = Scalar::from_int(0L);
    for (std::size_t j : chars) out.n_dim = out.n_dim + spherical.class_dims[j];
    out.order = formal_order(table, chars);
    EqVerdict v = scalar_eq(table.fp.total * out.n_dim,
                            spherical.dim_total * out.order);
    out.proportional_ok = v == EqVerdict::ExactEqual || v == EqVerdict::WithinRadius;
    return out;
}

CharacterClassPartition character_classes(const CharacterTable& table,
                                          const SphericalData& spherical,
                                          const Subring& d) {
    if (d.parent_rank != table.rank()) {
        throw Error("subring does not belong to this ring");
    }
    CharacterClassPartition out;
    out.subring = d;
    out.block_of.assign(table.rank(), 0);

    // Partition by restriction: two characters share a block when their
    // values agree on every member of the subring.
    for (std::size_t j = 0; j < table.rank(); ++j) {
        bool placed = false;
        for (std::size_t b = 0; b < out.blocks.size() && !placed; ++b) {
            std::size_t rep = out.blocks[b].front();
            bool same = true;
            for (std::size_t i : d.members) {
                std::ostringstream ctx;
                ctx << "restriction of characters " << rep << " and " << j
                    << " at simple " << i;
                if (!eq_member(table.at(rep, i), table.at(j, i), ctx.str())) {
                    same = false;
                    break;
                }
            }
            if (same) {
                out.blocks[b].push_back(j);
                out.block_of[j] = b;
                placed = true;
            }
        }
        if (!placed) {
            out.block_of[j] = out.blocks.size();
            out.blocks.push_back({j});
        }
    }

    out.induced_table = character_table(d.induced);
    std::size_t delta_row = match_induced_row(
        out.induced_table,
        [&](std::size_t a) { return spherical.dims[d.members[a]]; },
        "restricted dimension character");
    out.induced_spherical = spherical_data(out.induced_table, delta_row);

    out.restriction_ok = true;
    std::vector<bool> used(out.induced_table.rank(), false);
    for (const auto& block : out.blocks) {
        std::size_t rep = block.front();
        std::size_t row = match_induced_row(
            out.induced_table,
            [&](std::size_t a) { return table.at(rep, d.members[a]); },
            "restriction of character " + std::to_string(rep));
        if (used[row]) {
            throw Error("two restriction blocks match the same induced row " +
                        std::to_string(row));
        }
        used[row] = true;
        out.induced_row_of_block.push_back(row);
    }
    out.count_ok = out.blocks.size() == out.induced_table.rank();

    const Scalar& dim_c = spherical.dim_total;
    const Scalar& dim_d = out.induced_spherical.dim_total;
    out.general_sizes_ok = true;
    out.plain_sizes_ok = true;
    auto ok = [](EqVerdict v) {
        return v == EqVerdict::ExactEqual || v == EqVerdict::WithinRadius;
    };
    for (std::size_t b = 0; b < out.blocks.size(); ++b) {
        DimensionalOrder d2 = dimensional_order(table, spherical, out.blocks[b]);
        out.block_n_dim.push_back(d2.n_dim);
        out.block_order.push_back(d2.order);
        std::size_t row = out.induced_row_of_block[b];
        // General law: n_dim(block) * dim D = dim C * dim(D^row), and its
        // order form n(block) * n_row = FPdim(C) where n_row is the induced
        // codegree of the matched row.
        if (!ok(scalar_eq(d2.n_dim * dim_d,
                          dim_c * out.induced_spherical.class_dims[row])) ||
            !ok(scalar_eq(d2.order * out.induced_table.codegrees[row],
                          table.fp.total))) {
            out.general_sizes_ok = false;
        }
        // Plain forms: n_dim(block) * dim D = dim C and
        // n(block) * dim D = FPdim(C).
        if (!ok(scalar_eq(d2.n_dim * dim_d, dim_c)) ||
            !ok(scalar_eq(d2.order * dim_d, table.fp.total))) {
            out.plain_sizes_ok = false;
        }
    }
    return out;
}

SizeTheoremReport size_theorem(const CharacterTable& table,
                               const SphericalData& spherical, std::size_t x) {
    check_indices(table.rank(), {x}, "object");
    SizeTheoremReport out;
    out.simple_x = x;
    out.d = generated_subring(table.ring, {x});
    out.center = object_kernel_center(table, x).center;

    CharacterClassPartition part = character_classes(table, spherical, out.d);

    // The center must be a union of restriction blocks.
    {
        TheoremCheck c;
        c.name = "center is a union of restriction blocks";
        c.status = TheoremCheck::Status::Pass;
        auto in_center = [&](std::size_t j) {
            return std::binary_search(out.center.begin(), out.center.end(), j);
        };
        for (const auto& block : part.blocks) {
            bool first = in_center(block.front());
            for (std::size_t j : block) {
                if (in_center(j) != first) {
                    c.status = TheoremCheck::Status::Fail;
                    c.detail = "block " + index_list(block) +
                               " straddles the center " + index_list(out.center);
                }
            }
        }
        out.union_of_classes = c;
    }

    // On the induced ring, the center of the generator equals the group-like
    // characters.
    GroupLikeData g = group_likes(part.induced_table,
                                  dual_constants(part.induced_table));
    out.u_d_order = g.order();
    {
        std::vector<std::size_t> z_d =
            object_kernel_center(part.induced_table, out.d.position(x)).center;
        TheoremCheck c;
        c.name = "generated-ring center equals its group-likes";
        if (z_d == g.members) {
            c.status = TheoremCheck::Status::Pass;
        } else {
            c.status = TheoremCheck::Status::Fail;
            c.detail = "center " + index_list(z_d) + " vs group-likes " +
                       index_list(g.members);
        }
        out.generated_center_is_group = c;
    }

    DimensionalOrder dz = dimensional_order(table, spherical, out.center);
    Scalar u = Scalar::from_int(static_cast<long>(out.u_d_order));
    const Scalar& dim_d = part.induced_spherical.dim_total;
    out.dim_ratio = make_check(
        "dimensional size ratio",
        scalar_eq(spherical.dim_total * u, dim_d * dz.n_dim),
        "dim C * |U(D)| = " + render_scalar(spherical.dim_total * u) +
            ", dim D * n_dim(Z) = " + render_scalar(dim_d * dz.n_dim));
    out.fp_ratio = make_check(
        "formal size ratio",
        scalar_eq(table.fp.total * u, dim_d * dz.order),
        "FPdim(C) * |U(D)| = " + render_scalar(table.fp.total * u) +
            ", dim D * n(Z) = " + render_scalar(dim_d * dz.order));
    return out;
}

CenterAdjointReport center_adjoint_theorem(const CharacterTable& table,
                                           const DualHypergroup& dual) {
    CenterAdjointReport out;
    GroupLikeData g = group_likes(table, dual);
    bool rn = dual.rn == DualHypergroup::RNStatus::Yes;

    std::vector<std::size_t> inter;
    for (std::size_t x = 0; x < table.rank(); ++x) {
        std::vector<std::size_t> z = object_kernel_center(table, x).center;
        if (x == 0) {
            inter = z;
        } else {
            std::vector<std::size_t> next;
            std::set_intersection(inter.begin(), inter.end(), z.begin(), z.end(),
                                  std::back_inserter(next));
            inter = std::move(next);
        }

        std::string name = "center equals adjoint perp (" + table.ring.label(x) + ")";
        if (!rn) {
            out.center_equals_adjoint_perp.push_back(skipped(
                name, "dual structure constants not certified real nonnegative"));
        } else {
            Subring ad = adjoint_subring(table.ring,
                                         generated_subring(table.ring, {x}));
            std::vector<std::size_t> perp = perp_of_objects(table, ad.members);
            TheoremCheck c;
            c.name = name;
            if (perp == z) {
                c.status = TheoremCheck::Status::Pass;
            } else {
                c.status = TheoremCheck::Status::Fail;
                c.detail = "center " + index_list(z) + " vs perp " +
                           index_list(perp) + " of adjoint " +
                           index_list(ad.members);
            }
            out.center_equals_adjoint_perp.push_back(std::move(c));
        }

        std::string iname =
            "center order ratio integral (" + table.ring.label(x) + ")";
        if (!rn) {
            out.center_order_integrality.push_back(skipped(
                iname, "dual structure constants not certified real nonnegative"));
        } else {
            Scalar q = formal_order(table, z) /
                       Scalar::from_int(static_cast<long>(g.order()));
            IntegralityVerdict verdict = is_algebraic_integer(q);
            TheoremCheck c;
            c.name = iname;
            c.detail = "n(Z)/|G| = " + render_scalar(q) + ": " +
                       tier_name(verdict.tier);
            if (verdict.is_integral()) {
                c.status = TheoremCheck::Status::Pass;
            } else if (verdict.tier == IntegralityVerdict::Tier::NotIntegral) {
                c.status = TheoremCheck::Status::Fail;
            } else {
                c.status = TheoremCheck::Status::Indeterminate;
            }
            out.center_order_integrality.push_back(std::move(c));
        }
    }

    {
        TheoremCheck c;
        c.name = "group-likes equal the intersection of centers";
        if (inter == g.members) {
            c.status = TheoremCheck::Status::Pass;
        } else {
            c.status = TheoremCheck::Status::Fail;
            c.detail = "intersection " + index_list(inter) + " vs group-likes " +
                       index_list(g.members);
        }
        out.group_is_center_intersection = c;
    }
    {
        Subring ad = adjoint_subring(table.ring);
        Subring perp = perp_of_characters(table, g.members);
        TheoremCheck c;
        c.name = "adjoint subring equals group-like perp";
        if (ad.members == perp.members) {
            c.status = TheoremCheck::Status::Pass;
        } else {
            c.status = TheoremCheck::Status::Fail;
            c.detail = "adjoint " + index_list(ad.members) + " vs perp " +
                       index_list(perp.members);
        }
        out.adjoint_is_group_perp = c;
    }

    auto fold = [&](const TheoremCheck& c) {
        if (c.status == TheoremCheck::Status::Fail ||
            c.status == TheoremCheck::Status::Indeterminate) {
            out.all_ok = false;
        }
    };
    for (const auto& c : out.center_equals_adjoint_perp) fold(c);
    for (const auto& c : out.center_order_integrality) fold(c);
    fold(out.group_is_center_intersection);
    fold(out.adjoint_is_group_perp);
    return out;
}

} // namespace fusionlab
