#include "fusionlab/isaacs.hpp"

#include <algorithm>
#include <functional>
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

std::string render_rat(const BigRat& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

enum class ZeroStatus { Zero, NonZero, Unknown };

/// Certified zero test: exact values decide, an interval is nonzero when its
/// enclosure excludes zero and undecided when it straddles it.
ZeroStatus zero_status(const Scalar& v) {
    if (v.is_exact()) {
        return v.is_zero() ? ZeroStatus::Zero : ZeroStatus::NonZero;
    }
    return v.ball().contains_zero() ? ZeroStatus::Unknown : ZeroStatus::NonZero;
}

/// Interleaves a monic witness for w = v^q into one for v: if w is a root of
/// f, then v is a root of f(x^q).
std::vector<BigRat> stretch_witness(const std::vector<BigRat>& w, long q) {
    if (w.empty() || q <= 1) {
        return w;
    }
    std::vector<BigRat> out((w.size() - 1) * static_cast<std::size_t>(q) + 1,
                            BigRat(0));
    for (std::size_t i = 0; i < w.size(); ++i) {
        out[i * static_cast<std::size_t>(q)] = w[i];
    }
    return out;
}

/// Rewrites a verdict obtained for the q-th power of the subject into one for
/// the subject itself (integrality is equivalent; integral witnesses lift).
IntegralityVerdict unpowered(IntegralityVerdict v, long q) {
    if (q <= 1) {
        return v;
    }
    if (v.is_integral()) {
        v.witness = stretch_witness(v.witness, q);
        v.detail += "; decided on the power q = " + std::to_string(q);
    } else if (v.tier == IntegralityVerdict::Tier::NotIntegral) {
        v.detail += "; witness refutes the power q = " + std::to_string(q);
    }
    return v;
}

/// Value of codegrees[row]^e_n / (k * mu_row([X])^e_mu): the common shape of
/// the power-eliminated divisibility quantities.
Scalar power_quotient_at(const CharacterTable& t, std::size_t x, std::size_t row,
                         long e_n, long e_mu, const Scalar& k) {
    return t.codegrees[row].pow(e_n) / (k * t.at(row, x).pow(e_mu));
}

/// Conjugates of a power quotient lie among the same expression over the
/// other character rows (conjugation permutes rows and fixes the rational
/// constant k), so ranging the row over every character with a certainly
/// nonzero value on X is a Galois-stable superset. Unavailable when some
/// row's value on X cannot be certified zero or nonzero.
std::optional<std::vector<Scalar>> power_quotient_superset(
    const CharacterTable& t, std::size_t x, long e_n, long e_mu,
    const Scalar& k) {
    if (k.kind() != Scalar::Kind::Rational) {
        return std::nullopt;
    }
    std::vector<Scalar> out;
    for (std::size_t a = 0; a < t.rank(); ++a) {
        switch (zero_status(t.at(a, x))) {
        case ZeroStatus::Unknown:
            return std::nullopt;
        case ZeroStatus::Zero:
            continue;
        case ZeroStatus::NonZero:
            out.push_back(power_quotient_at(t, x, a, e_n, e_mu, k));
        }
    }
    return out;
}

/// Integrality of the power quotient anchored at the given row, with the
/// row-superset certificate attempted for interval values when allowed.
IntegralityVerdict power_quotient_verdict(const CharacterTable& t, std::size_t x,
                                          std::size_t row, long e_n, long e_mu,
                                          const Scalar& k, bool allow_superset) {
    Scalar w = power_quotient_at(t, x, row, e_n, e_mu, k);
    if (w.is_exact() || !allow_superset) {
        return is_algebraic_integer(w);
    }
    auto sup = power_quotient_superset(t, x, e_n, e_mu, k);
    return is_algebraic_integer(w, sup ? &*sup : nullptr);
}

/// Conjugate superset for lambda^q: conjugation moves the dimension row and
/// the class row independently, so the pairs (a, b) with mu_a([X]) certainly
/// nonzero and b arbitrary cover every conjugate.
std::optional<std::vector<Scalar>> lambda_superset(const CharacterTable& t,
                                                   std::size_t x, long p,
                                                   long q) {
    std::vector<Scalar> out;
    for (std::size_t a = 0; a < t.rank(); ++a) {
        ZeroStatus za = zero_status(t.at(a, x));
        if (za == ZeroStatus::Unknown) {
            return std::nullopt;
        }
        if (za == ZeroStatus::Zero) {
            continue;
        }
        for (std::size_t b = 0; b < t.rank(); ++b) {
            Scalar entry = t.codegrees[a].pow(p) *
                           (t.codegrees[a] / t.codegrees[b]).pow(q - p) *
                           (t.at(b, x) / t.at(a, x)).pow(q);
            out.push_back(std::move(entry));
        }
    }
    return out;
}

IntegralityVerdict lambda_verdict(const CharacterTable& t,
                                  const SphericalData& sph, std::size_t j,
                                  std::size_t x, const RationalExponent& ex) {
    const Scalar& mu = t.at(j, x);
    if (mu.is_exact() && mu.is_zero()) {
        return {IntegralityVerdict::Tier::IntegralExact, {BigRat(1), BigRat(0)},
                "zero value"};
    }
    std::size_t delta = sph.dim_character_index;
    long p = ex.num;
    long q = ex.den;
    Scalar w = t.codegrees[delta].pow(p) *
               (t.codegrees[delta] / t.codegrees[j]).pow(q - p) *
               (mu / t.at(delta, x)).pow(q);
    if (w.is_exact()) {
        return unpowered(is_algebraic_integer(w), q);
    }
    auto sup = lambda_superset(t, x, p, q);
    return unpowered(is_algebraic_integer(w, sup ? &*sup : nullptr), q);
}

/// Rational power of a quantity known to be real (global and class
/// dimensions): a complex enclosure is flattened to its real part so the
/// real-power machinery applies even when the imaginary radius is not zero.
Scalar real_pow(const Scalar& base, const BigRat& e) {
    if (base.kind() == Scalar::Kind::Interval) {
        return pow_rational(Scalar::from_real_ball(base.ball().re()), e);
    }
    return pow_rational(base, e);
}

Scalar lambda_display(const CharacterTable& t, const SphericalData& sph,
                      std::size_t j, std::size_t x, const BigRat& s) {
    Scalar t_pow = real_pow(sph.dim_total, s);
    Scalar cd_pow = real_pow(sph.class_dims[j], BigRat(1) - s);
    return t_pow * cd_pow * (t.at(j, x) / sph.dims[x]);
}

struct LambdaGrid {
    std::vector<std::vector<LambdaValue>> values;
    std::size_t failed = 0;
    std::size_t indeterminate = 0;
    bool all_exact = true;
};

LambdaGrid lambda_grid(const CharacterTable& t, const SphericalData& sph,
                       const RationalExponent& ex) {
    LambdaGrid grid;
    grid.values.resize(t.rank());
    for (std::size_t j = 0; j < t.rank(); ++j) {
        grid.values[j].reserve(t.rank());
        for (std::size_t i = 0; i < t.rank(); ++i) {
            LambdaValue lv;
            lv.value = lambda_display(t, sph, j, i, ex.value);
            lv.verdict = lambda_verdict(t, sph, j, i, ex);
            if (lv.verdict.tier == IntegralityVerdict::Tier::NotIntegral) {
                ++grid.failed;
            } else if (lv.verdict.tier == IntegralityVerdict::Tier::Indeterminate) {
                ++grid.indeterminate;
            }
            if (lv.verdict.tier != IntegralityVerdict::Tier::IntegralExact) {
                grid.all_exact = false;
            }
            grid.values[j].push_back(std::move(lv));
        }
    }
    return grid;
}

/// A hypothesis verification outcome used to gate theorem checks.
TheoremCheck verified_check(std::string name, bool holds, std::string detail) {
    TheoremCheck c;
    c.name = std::move(name);
    c.status = holds ? TheoremCheck::Status::Pass : TheoremCheck::Status::Fail;
    c.detail = std::move(detail);
    return c;
}

TheoremCheck rn_hypothesis(const DualHypergroup& dual) {
    TheoremCheck c;
    c.name = "dual structure constants real nonnegative";
    switch (dual.rn) {
    case DualHypergroup::RNStatus::Yes:
        c.status = TheoremCheck::Status::Pass;
        break;
    case DualHypergroup::RNStatus::No:
        c.status = TheoremCheck::Status::Fail;
        break;
    case DualHypergroup::RNStatus::Indeterminate:
        c.status = TheoremCheck::Status::Indeterminate;
        break;
    }
    return c;
}

TheoremCheck grid_check(std::string name, const LambdaGrid& grid) {
    TheoremCheck c;
    c.name = std::move(name);
    if (grid.failed > 0) {
        c.status = TheoremCheck::Status::Fail;
        c.detail = std::to_string(grid.failed) + " non-integral lambda value(s)";
    } else if (grid.indeterminate > 0) {
        c.status = TheoremCheck::Status::Indeterminate;
        c.detail = std::to_string(grid.indeterminate) +
                   " undecided lambda value(s)";
    } else {
        c.status = TheoremCheck::Status::Pass;
    }
    return c;
}

TheoremReport base_report(std::string tag, std::string statement) {
    TheoremReport r;
    r.tag = std::move(tag);
    r.statement = std::move(statement);
    return r;
}

void note_flag(TheoremReport& r, bool set, const char* name) {
    if (set) {
        r.asserted.push_back(name);
    }
}

void add_quantity(TheoremReport& r, std::string label, const Scalar& v) {
    r.quantities.emplace_back(std::move(label), render_scalar(v));
}

void finish_integrality(TheoremReport& r, IntegralityVerdict v) {
    if (v.is_integral()) {
        r.status = TheoremCheck::Status::Pass;
    } else if (v.tier == IntegralityVerdict::Tier::NotIntegral) {
        r.status = TheoremCheck::Status::Fail;
    } else {
        r.status = TheoremCheck::Status::Indeterminate;
    }
    if (r.detail.empty()) {
        r.detail = v.detail;
    }
    r.verdict = std::move(v);
}

void finish_equality(TheoremReport& r, EqVerdict v) {
    r.equality = v;
    switch (v) {
    case EqVerdict::ExactEqual:
        r.status = TheoremCheck::Status::Pass;
        r.detail = "both sides agree exactly";
        break;
    case EqVerdict::WithinRadius:
        r.status = TheoremCheck::Status::Pass;
        r.detail = "both sides agree within tolerance";
        break;
    case EqVerdict::Distinct:
        r.status = TheoremCheck::Status::Fail;
        r.detail = "the sides are certainly different";
        break;
    case EqVerdict::Indeterminate:
        r.status = TheoremCheck::Status::Indeterminate;
        r.detail = "the working precision cannot compare the sides";
        break;
    }
}

/// Gates a report on hypothesis outcomes: a certainly failed hypothesis
/// skips the claim with the reason, an undecided one marks it indeterminate.
/// Passing hypotheses are recorded as data-verified.
bool gate(TheoremReport& r, std::initializer_list<const TheoremCheck*> checks) {
    for (const TheoremCheck* c : checks) {
        switch (c->status) {
        case TheoremCheck::Status::Fail:
        case TheoremCheck::Status::Skipped:
            r.status = TheoremCheck::Status::Skipped;
            r.detail = "hypothesis not met: " + c->name;
            if (!c->detail.empty()) {
                r.detail += " (" + c->detail + ")";
            }
            return false;
        case TheoremCheck::Status::Indeterminate:
            r.status = TheoremCheck::Status::Indeterminate;
            r.detail = "hypothesis undecided: " + c->name;
            return false;
        case TheoremCheck::Status::Pass:
            r.verified.push_back(c->name);
            break;
        }
    }
    return true;
}

struct InducedData {
    CharacterTable table;
    SphericalData spherical;
};

/// Character data of a subring with the dimension character matched to the
/// restriction of the ambient one.
InducedData induced_data(const SphericalData& sph, const Subring& d) {
    InducedData out;
    out.table = character_table(d.induced);
    std::vector<std::size_t> hits;
    for (std::size_t r = 0; r < out.table.rank(); ++r) {
        bool all = true;
        for (std::size_t a = 0; a < out.table.rank() && all; ++a) {
            EqVerdict v =
                scalar_eq(out.table.at(r, a), sph.dims[d.members[a]]);
            if (v == EqVerdict::Indeterminate) {
                throw IndeterminateError(
                    "indeterminate match of the restricted dimension character");
            }
            all = v != EqVerdict::Distinct;
        }
        if (all) {
            hits.push_back(r);
        }
    }
    if (hits.empty()) {
        throw Error("no induced row matches the restricted dimension character");
    }
    if (hits.size() > 1) {
        throw IndeterminateError(
            "several induced rows match the restricted dimension character " +
            index_list(hits));
    }
    out.spherical = spherical_data(out.table, hits.front());
    return out;
}

SIsaacsReport build_s_isaacs(const CharacterTable& t, const SphericalData& sph,
                             const RationalExponent& ex,
                             std::vector<std::size_t> scope) {
    SIsaacsReport out;
    out.s = ex.value;
    out.scope = std::move(scope);
    LambdaGrid grid = lambda_grid(t, sph, ex);
    out.failed_pairs = grid.failed;
    out.indeterminate_pairs = grid.indeterminate;
    out.all_exact = grid.all_exact;
    out.lambdas = std::move(grid.values);

    TheoremReport r = base_report(
        "5.1",
        "lambda_s(mu_j, X) is an algebraic integer for every character j and "
        "every simple X of the scope");
    r.verified.push_back("commutative fusion ring");
    r.quantities.emplace_back("s", render_rat(ex.value));
    r.quantities.emplace_back("scope", index_list(out.scope));
    r.quantities.emplace_back("pairs", std::to_string(t.rank() * t.rank()));
    r.quantities.emplace_back("non-integral pairs",
                              std::to_string(out.failed_pairs));
    r.quantities.emplace_back("undecided pairs",
                              std::to_string(out.indeterminate_pairs));
    if (out.failed_pairs > 0) {
        r.status = TheoremCheck::Status::Fail;
        r.detail = "some lambda value is certainly not an algebraic integer";
    } else if (out.indeterminate_pairs > 0) {
        r.status = TheoremCheck::Status::Indeterminate;
        r.detail = "some lambda value could not be decided";
    } else {
        r.status = TheoremCheck::Status::Pass;
        r.detail = out.all_exact ? "all values integral at the exact tier"
                                 : "all values integral";
    }
    out.report = std::move(r);
    return out;
}

} // namespace

RationalExponent rational_exponent(const BigRat& s) {
    if (s < 0) {
        throw Error("the exponent s must be nonnegative");
    }
    BigInt num = rat_num(s);
    BigInt den = rat_den(s);
    if (den > 12) {
        throw Error("the exponent denominator q must not exceed 12 (got " +
                    render_rat(s) + ")");
    }
    if (num > 1000) {
        throw Error("the exponent numerator is beyond desk scale (got " +
                    render_rat(s) + ")");
    }
    return {s, num.convert_to<long>(), den.convert_to<long>()};
}

std::vector<std::string> hypothesis_names(const HypothesisFlags& f) {
    std::vector<std::string> out;
    if (f.spherical) out.push_back("spherical");
    if (f.pseudo_unitary) out.push_back("pseudo-unitary");
    if (f.braided) out.push_back("braided");
    if (f.ribbon) out.push_back("ribbon");
    if (f.unitary) out.push_back("unitary");
    if (f.modular) out.push_back("modular");
    return out;
}

const TheoremReport& DivisibilityReport::by_tag(const std::string& tag) const {
    for (const auto& r : reports) {
        if (r.tag == tag) {
            return r;
        }
    }
    throw Error("no report carries the tag " + tag);
}

LambdaValue lambda_s(const CharacterTable& table, const SphericalData& spherical,
                     std::size_t j, std::size_t x, const BigRat& s) {
    RationalExponent ex = rational_exponent(s);
    if (j >= table.rank() || x >= table.rank()) {
        throw Error("character or simple index out of range");
    }
    LambdaValue out;
    out.value = lambda_display(table, spherical, j, x, s);
    out.verdict = lambda_verdict(table, spherical, j, x, ex);
    return out;
}

SIsaacsReport is_s_isaacs(const CharacterTable& table,
                          const SphericalData& spherical, const BigRat& s) {
    RationalExponent ex = rational_exponent(s);
    std::vector<std::size_t> scope(table.rank());
    for (std::size_t i = 0; i < scope.size(); ++i) {
        scope[i] = i;
    }
    return build_s_isaacs(table, spherical, ex, std::move(scope));
}

SIsaacsReport is_s_isaacs(const CharacterTable& table,
                          const SphericalData& spherical, const BigRat& s,
                          const Subring& scope) {
    RationalExponent ex = rational_exponent(s);
    if (scope.is_full()) {
        return build_s_isaacs(table, spherical, ex, scope.members);
    }
    InducedData ind = induced_data(spherical, scope);
    return build_s_isaacs(ind.table, ind.spherical, ex, scope.members);
}

FrobeniusTypeReport frobenius_type(const CharacterTable& table,
                                   const SphericalData& spherical,
                                   const BigRat& s) {
    RationalExponent ex = rational_exponent(s);
    FrobeniusTypeReport out;
    out.s = s;
    std::size_t delta = spherical.dim_character_index;
    Scalar pow_display = real_pow(spherical.dim_total, s);
    std::size_t failures = 0;
    std::size_t undecided = 0;
    for (std::size_t i = 0; i < table.rank(); ++i) {
        out.quotients.push_back(pow_display / spherical.dims[i]);
        IntegralityVerdict v = unpowered(
            power_quotient_verdict(table, i, delta, ex.num, ex.den,
                                   Scalar::from_int(1L), true),
            ex.den);
        if (v.tier == IntegralityVerdict::Tier::NotIntegral) {
            ++failures;
        } else if (!v.is_integral()) {
            ++undecided;
        }
        out.per_simple.push_back(std::move(v));
    }
    TheoremReport r = base_report(
        "ft", "dim(X) divides (dim C)^s for every simple X");
    r.verified.push_back("commutative fusion ring");
    r.quantities.emplace_back("s", render_rat(s));
    add_quantity(r, "(dim C)^s", pow_display);
    r.quantities.emplace_back("non-dividing simples", std::to_string(failures));
    r.quantities.emplace_back("undecided simples", std::to_string(undecided));
    if (failures > 0) {
        r.status = TheoremCheck::Status::Fail;
        r.detail = "some simple dimension certainly does not divide (dim C)^s";
    } else if (undecided > 0) {
        r.status = TheoremCheck::Status::Indeterminate;
        r.detail = "some quotient could not be decided";
    } else {
        r.status = TheoremCheck::Status::Pass;
    }
    out.report = std::move(r);
    return out;
}

DivisibilityReport divisibility_theorems(const CharacterTable& table,
                                         const SphericalData& spherical,
                                         const DualHypergroup& dual,
                                         std::size_t x, const BigRat& s,
                                         const HypothesisFlags& assume) {
    RationalExponent ex = rational_exponent(s);
    if (x >= table.rank()) {
        throw Error("simple index out of range");
    }
    long p = ex.num;
    long q = ex.den;
    bool half_or_more = 2 * ex.value >= 1;

    DivisibilityReport out;
    out.simple_x = x;
    out.s = s;

    Subring d = generated_subring(table.ring, {x});
    out.generated = d.members;
    out.faithful = d.is_full();

    // lambda grids over the induced subring decide the s-Isaacs hypotheses.
    LambdaGrid grid_s;
    LambdaGrid grid_zero;
    if (out.faithful) {
        grid_s = lambda_grid(table, spherical, ex);
        grid_zero = (p == 0) ? grid_s
                             : lambda_grid(table, spherical,
                                           rational_exponent(BigRat(0)));
    } else {
        InducedData ind = induced_data(spherical, d);
        grid_s = lambda_grid(ind.table, ind.spherical, ex);
        grid_zero = (p == 0) ? grid_s
                             : lambda_grid(ind.table, ind.spherical,
                                           rational_exponent(BigRat(0)));
    }
    out.s_isaacs_scope =
        grid_check("<X> is s-Isaacs at s = " + render_rat(s), grid_s);
    out.zero_isaacs_scope = grid_check("<X> is Isaacs (s = 0)", grid_zero);

    TheoremCheck rn = rn_hypothesis(dual);
    TheoremCheck faithful = verified_check(
        "X generates the ring", out.faithful,
        out.faithful ? "" : "<X> = " + index_list(d.members));
    TheoremCheck at_least_half = verified_check(
        "s >= 1/2", half_or_more, "s = " + render_rat(s));

    GroupLikeData g = group_likes(table, dual);
    out.u_order = g.order();
    TheoremCheck center_known;
    center_known.name = "center of X determined";
    DimensionalOrder dz;
    try {
        out.center = object_kernel_center(table, x).center;
        dz = dimensional_order(table, spherical, out.center);
        out.center_n_dim = dz.n_dim;
        out.center_order = dz.order;
    } catch (const IndeterminateError& e) {
        center_known.status = TheoremCheck::Status::Indeterminate;
        center_known.detail = e.what();
    }

    std::size_t delta = spherical.dim_character_index;
    bool dim_is_fp = delta == table.fp_index;
    const Scalar& big_t = spherical.dim_total;
    const Scalar& dx = spherical.dims[x];
    const Scalar& big_f = table.fp.total;
    Scalar u = Scalar::from_int(static_cast<long>(out.u_order));
    Scalar uq = u.pow(q);

    auto common = [&](TheoremReport& r) {
        note_flag(r, assume.spherical, "spherical");
        r.quantities.emplace_back("X", table.ring.label(x));
        r.quantities.emplace_back("dimension row", std::to_string(delta));
        add_quantity(r, "dim C", big_t);
        add_quantity(r, "dim(X)", dx);
    };
    auto run = [&](TheoremReport& r, const std::function<void()>& body) {
        try {
            body();
        } catch (const IndeterminateError& e) {
            r.status = TheoremCheck::Status::Indeterminate;
            r.detail = e.what();
        }
        out.reports.push_back(std::move(r));
    };

    {
        TheoremReport r =
            base_report("1.1", "FPdim(X) divides FPdim(C)/|U|");
        common(r);
        note_flag(r, assume.pseudo_unitary, "pseudo-unitary");
        note_flag(r, assume.braided, "braided");
        note_flag(r, assume.ribbon, "ribbon");
        add_quantity(r, "FPdim(C)", big_f);
        add_quantity(r, "FPdim(X)", table.fp.dims[x]);
        add_quantity(r, "|U|", u);
        run(r, [&] {
            if (!gate(r, {&rn, &out.zero_isaacs_scope})) {
                return;
            }
            add_quantity(r, "quotient", big_f / (u * table.fp.dims[x]));
            finish_integrality(
                r, power_quotient_verdict(table, x, table.fp_index, 1, 1, u,
                                          true));
        });
    }

    {
        TheoremReport r = base_report(
            "1.3",
            "(dim C)^2s * FPdim(C) / (dim(X)^2 * |U|) is an algebraic integer");
        common(r);
        add_quantity(r, "FPdim(C)", big_f);
        add_quantity(r, "|U|", u);
        run(r, [&] {
            if (!half_or_more) {
                r.status = TheoremCheck::Status::Skipped;
                r.detail = "requires s >= 1/2 (s = " + render_rat(s) + ")";
                return;
            }
            r.verified.push_back(at_least_half.name);
            if (!gate(r, {&rn, &out.s_isaacs_scope})) {
                return;
            }
            Scalar value = real_pow(big_t, 2 * ex.value) * big_f /
                           (dx * dx * u);
            add_quantity(r, "value", value);
            IntegralityVerdict v =
                dim_is_fp
                    ? power_quotient_verdict(table, x, delta, 2 * p + q, 2 * q,
                                             uq, true)
                    : is_algebraic_integer(big_t.pow(2 * p) * big_f.pow(q) /
                                           (dx.pow(2 * q) * uq));
            finish_integrality(r, unpowered(std::move(v), q));
        });
    }

    {
        TheoremReport r = base_report(
            "1.4",
            "(dim C)^s * FPdim(C) / (dim(X) * |U|) is an algebraic integer");
        common(r);
        add_quantity(r, "FPdim(C)", big_f);
        add_quantity(r, "|U|", u);
        run(r, [&] {
            if (!gate(r, {&rn, &out.s_isaacs_scope})) {
                return;
            }
            Scalar value = real_pow(big_t, ex.value) * big_f / (dx * u);
            add_quantity(r, "value", value);
            IntegralityVerdict v =
                dim_is_fp
                    ? power_quotient_verdict(table, x, delta, p + q, q, uq,
                                             true)
                    : is_algebraic_integer(big_t.pow(p) * big_f.pow(q) /
                                           (dx.pow(q) * uq));
            finish_integrality(r, unpowered(std::move(v), q));
        });
    }

    {
        TheoremReport r = base_report(
            "5.3",
            "(dim C)^(2s+1) / (|U| * dim(X)^2) is an algebraic integer");
        common(r);
        add_quantity(r, "|U|", u);
        run(r, [&] {
            if (!half_or_more) {
                r.status = TheoremCheck::Status::Skipped;
                r.detail = "requires s >= 1/2 (s = " + render_rat(s) + ")";
                return;
            }
            r.verified.push_back(at_least_half.name);
            if (!gate(r, {&faithful, &out.s_isaacs_scope})) {
                return;
            }
            add_quantity(r, "value",
                         real_pow(big_t, 2 * ex.value + 1) / (u * dx * dx));
            finish_integrality(
                r, unpowered(power_quotient_verdict(table, x, delta, 2 * p + q,
                                                    2 * q, uq, true),
                             q));
        });
    }

    {
        TheoremReport r = base_report(
            "5.4",
            "(dim C)^(s+1/2) / (dim(X) * sqrt(|U|)) is an algebraic integer");
        common(r);
        add_quantity(r, "|U|", u);
        run(r, [&] {
            if (!half_or_more) {
                r.status = TheoremCheck::Status::Skipped;
                r.detail = "requires s >= 1/2 (s = " + render_rat(s) + ")";
                return;
            }
            r.verified.push_back(at_least_half.name);
            if (!gate(r, {&faithful, &out.s_isaacs_scope})) {
                return;
            }
            add_quantity(r, "value",
                         real_pow(big_t, ex.value + BigRat(1, 2)) /
                             (dx * scalar_sqrt(u)));
            add_quantity(r, "square",
                         real_pow(big_t, 2 * ex.value + 1) / (u * dx * dx));
            // A value is an algebraic integer exactly when its square is, so
            // the verdict is decided on the square (power 2q overall).
            finish_integrality(
                r, unpowered(power_quotient_verdict(table, x, delta, 2 * p + q,
                                                    2 * q, uq, true),
                             2 * q));
        });
    }

    {
        TheoremReport r = base_report(
            "5.5",
            "(dim C)^(2s+1) / (dim(X)^2 * n_dim(Z(X))) is an algebraic integer");
        common(r);
        add_quantity(r, "n_dim(Z(X))", dz.n_dim);
        run(r, [&] {
            if (!half_or_more) {
                r.status = TheoremCheck::Status::Skipped;
                r.detail = "requires s >= 1/2 (s = " + render_rat(s) + ")";
                return;
            }
            r.verified.push_back(at_least_half.name);
            if (!gate(r, {&center_known, &out.s_isaacs_scope})) {
                return;
            }
            Scalar k = dz.n_dim.pow(q);
            add_quantity(r, "value", real_pow(big_t, 2 * ex.value + 1) /
                                         (dx * dx * dz.n_dim));
            finish_integrality(
                r, unpowered(power_quotient_verdict(table, x, delta, 2 * p + q,
                                                    2 * q, k, true),
                             q));
        });
    }

    {
        TheoremReport r = base_report(
            "6.2", "(dim C)^(s+1) / (|U| * dim(X)) is an algebraic integer");
        common(r);
        add_quantity(r, "|U|", u);
        run(r, [&] {
            if (!gate(r, {&faithful, &out.s_isaacs_scope})) {
                return;
            }
            add_quantity(r, "value",
                         real_pow(big_t, ex.value + 1) / (u * dx));
            finish_integrality(
                r, unpowered(power_quotient_verdict(table, x, delta, p + q, q,
                                                    uq, true),
                             q));
        });
    }

    {
        TheoremReport r = base_report(
            "6.3",
            "(dim C)^(s+1) / (n_dim(Z(X)) * dim(X)) is an algebraic integer");
        common(r);
        add_quantity(r, "n_dim(Z(X))", dz.n_dim);
        run(r, [&] {
            if (!gate(r, {&center_known, &out.s_isaacs_scope})) {
                return;
            }
            Scalar k = dz.n_dim.pow(q);
            add_quantity(r, "value",
                         real_pow(big_t, ex.value + 1) / (dz.n_dim * dx));
            finish_integrality(
                r, unpowered(power_quotient_verdict(table, x, delta, p + q, q,
                                                    k, true),
                             q));
        });
    }

    {
        TheoremReport r =
            base_report("6.4", "dim(X) divides FPdim(C)/n(Z(X))");
        common(r);
        add_quantity(r, "FPdim(C)", big_f);
        add_quantity(r, "n(Z(X))", dz.order);
        run(r, [&] {
            if (!gate(r, {&center_known, &out.zero_isaacs_scope})) {
                return;
            }
            add_quantity(r, "quotient", big_f / (dz.order * dx));
            IntegralityVerdict v =
                dim_is_fp ? power_quotient_verdict(table, x, delta, 1, 1,
                                                   dz.order, true)
                          : is_algebraic_integer(big_f / (dz.order * dx));
            finish_integrality(r, std::move(v));
        });
    }

    {
        TheoremReport r = base_report("6.5", "dim(X) divides FPdim(C)/|U|");
        common(r);
        add_quantity(r, "FPdim(C)", big_f);
        add_quantity(r, "|U|", u);
        run(r, [&] {
            if (!gate(r, {&rn, &out.zero_isaacs_scope})) {
                return;
            }
            add_quantity(r, "quotient", big_f / (u * dx));
            IntegralityVerdict v =
                dim_is_fp
                    ? power_quotient_verdict(table, x, delta, 1, 1, u, true)
                    : is_algebraic_integer(big_f / (u * dx));
            finish_integrality(r, std::move(v));
        });
    }

    {
        TheoremReport r = base_report(
            "6.6", "D_s^2 = C_s * FPdim(C)/|U| holds as an exact identity");
        common(r);
        run(r, [&] {
            r.verified.push_back("algebraic identity, no hypotheses");
            Scalar t2s = real_pow(big_t, 2 * ex.value);
            Scalar ds_base = big_f / (dx * u);
            Scalar lhs = t2s * ds_base * ds_base;
            Scalar cs = t2s * big_f / (dx * dx * u);
            Scalar rhs = cs * big_f / u;
            add_quantity(r, "C_s", cs);
            add_quantity(r, "D_s",
                         real_pow(big_t, ex.value) * big_f / (dx * u));
            add_quantity(r, "D_s^2", lhs);
            add_quantity(r, "C_s * FPdim(C)/|U|", rhs);
            finish_equality(r, scalar_eq(lhs, rhs));
        });
    }

    return out;
}

OrbitSumReport orbit_sum_identities(const CharacterTable& table,
                                    const SphericalData& spherical,
                                    const DualHypergroup& dual, std::size_t x,
                                    const BigRat& s) {
    RationalExponent ex = rational_exponent(s);
    if (x >= table.rank()) {
        throw Error("simple index out of range");
    }
    OrbitSumReport out;
    out.simple_x = x;
    out.s = s;

    Subring d = generated_subring(table.ring, {x});
    TheoremCheck faithful = verified_check(
        "X generates the ring", d.is_full(),
        d.is_full() ? "" : "<X> = " + index_list(d.members));

    TheoremReport norm = base_report(
        "6.1",
        "dim C/|U| equals the sum of dim(C^j) |mu_j([X])|^2 over the "
        "non-vanishing star-orbit representatives");
    norm.quantities.emplace_back("X", table.ring.label(x));
    try {
        if (gate(norm, {&faithful})) {
            GroupLikeData g = group_likes(table, dual);
            StarOrbits orbits = star_orbits(g, dual, table, x);
            Scalar rhs = Scalar::from_int(0L);
            std::vector<std::size_t> reps;
            for (std::size_t o = 0; o < orbits.orbits.size(); ++o) {
                if (!orbits.non_vanishing[o]) {
                    continue;
                }
                std::size_t rep = orbits.representatives[o];
                reps.push_back(rep);
                rhs = rhs + spherical.class_dims[rep] * table.at(rep, x).abs2();
            }
            Scalar u = Scalar::from_int(static_cast<long>(g.order()));
            Scalar lhs = spherical.dim_total / u;
            norm.quantities.emplace_back("representatives", index_list(reps));
            add_quantity(norm, "dim C/|U|", lhs);
            add_quantity(norm, "orbit sum", rhs);
            finish_equality(norm, scalar_eq(lhs, rhs));
        }
    } catch (const IndeterminateError& e) {
        norm.status = TheoremCheck::Status::Indeterminate;
        norm.detail = e.what();
    }
    out.norm_sum = std::move(norm);

    TheoremReport lam = base_report(
        "5.3-sum",
        "(dim C)^(2s+1)/dim(X)^2 equals the sum of lambda_s(mu_j, X) "
        "lambda_s(mu_j#, X) dim(C^j)^(2s-1) over all characters");
    lam.quantities.emplace_back("X", table.ring.label(x));
    lam.quantities.emplace_back("s", render_rat(s));
    try {
        if (gate(lam, {&faithful})) {
            BigRat exp_cd = 2 * ex.value - 1;
            Scalar rhs = Scalar::from_int(0L);
            for (std::size_t j = 0; j < table.rank(); ++j) {
                Scalar lj = lambda_display(table, spherical, j, x, s);
                Scalar ljc = lambda_display(table, spherical,
                                            table.involution[j], x, s);
                // dim(C^j)^0 is read as 1 even for irrational class
                // dimensions (the s = 1/2 boundary of the identity).
                Scalar cd = exp_cd == 0
                                ? Scalar::from_int(1L)
                                : real_pow(spherical.class_dims[j], exp_cd);
                rhs = rhs + lj * ljc * cd;
            }
            Scalar lhs = real_pow(spherical.dim_total, 2 * ex.value + 1) /
                         (spherical.dims[x] * spherical.dims[x]);
            add_quantity(lam, "(dim C)^(2s+1)/dim(X)^2", lhs);
            add_quantity(lam, "lambda sum", rhs);
            finish_equality(lam, scalar_eq(lhs, rhs));
        }
    } catch (const IndeterminateError& e) {
        lam.status = TheoremCheck::Status::Indeterminate;
        lam.detail = e.what();
    }
    out.lambda_sum = std::move(lam);
    return out;
}

ItoMichlerReport ito_michler(const CharacterTable& table,
                             const DualHypergroup& dual, long p,
                             const HypothesisFlags& assume) {
    if (p < 2) {
        throw Error("p must be a prime");
    }
    for (long i = 2; i * i <= p; ++i) {
        if (p % i == 0) {
            throw Error("p = " + std::to_string(p) + " is not prime");
        }
    }
    WeaklyIntegralReport wi = weakly_integral_check(table);
    if (!wi.weakly_integral) {
        throw Error("the ring is not weakly integral");
    }
    if (table.fp.total.kind() != Scalar::Kind::Rational ||
        !is_integer(table.fp.total.rat())) {
        throw Error("the global dimension is not an exact integer");
    }

    ItoMichlerReport out;
    out.p = p;
    BigInt n = rat_num(table.fp.total.rat());
    while (n % p == 0) {
        n /= p;
        ++out.alpha;
    }
    if (out.alpha == 0) {
        throw Error("p = " + std::to_string(p) +
                    " does not divide the global dimension");
    }
    out.cofactor = n;

    GroupLikeData g = group_likes(table, dual);
    out.u_order = g.order();
    BigInt p_alpha = 1;
    for (unsigned i = 0; i < out.alpha; ++i) {
        p_alpha *= p;
    }
    out.sylow_in_grading = BigInt(out.u_order) % p_alpha == 0;

    out.none_divisible = true;
    for (std::size_t i = 0; i < table.rank(); ++i) {
        Scalar sq = table.fp.dims[i] * table.fp.dims[i];
        if (sq.kind() != Scalar::Kind::Rational || !is_integer(sq.rat())) {
            throw Error("FPdim(X_" + std::to_string(i) +
                        ")^2 is not an exact integer");
        }
        bool div = rat_num(sq.rat()) % p == 0;
        out.square_divisible.push_back(div);
        if (div) {
            out.none_divisible = false;
        }
    }

    auto describe = [&](TheoremReport& r) {
        r.verified.push_back("weakly integral");
        note_flag(r, assume.braided, "braided");
        note_flag(r, assume.modular, "modular");
        r.quantities.emplace_back("p", std::to_string(p));
        r.quantities.emplace_back("alpha", std::to_string(out.alpha));
        add_quantity(r, "FPdim(C)", table.fp.total);
        r.quantities.emplace_back("|U|", std::to_string(out.u_order));
        r.quantities.emplace_back(
            "p^alpha divides |U|", out.sylow_in_grading ? "yes" : "no");
        r.quantities.emplace_back(
            "p divides some FPdim(X)^2", out.none_divisible ? "no" : "yes");
    };

    TheoremReport fwd = base_report(
        "1.6", "if p^alpha divides |U| then p divides no FPdim(X)^2");
    describe(fwd);
    if (!out.sylow_in_grading) {
        fwd.status = TheoremCheck::Status::Pass;
        fwd.detail = "premise fails, implication holds vacuously "
                     "(contrapositive consistent)";
    } else if (out.none_divisible) {
        fwd.status = TheoremCheck::Status::Pass;
        fwd.detail = "premise and conclusion both hold";
    } else {
        fwd.status = TheoremCheck::Status::Fail;
        fwd.detail = "p^alpha divides |U| yet some FPdim(X)^2 is divisible by p";
    }
    out.forward = std::move(fwd);

    TheoremReport conv = base_report(
        "1.5", "if p divides no FPdim(X)^2 then p^alpha divides |U|");
    describe(conv);
    if (!assume.modular) {
        conv.status = TheoremCheck::Status::Skipped;
        conv.detail = "requires the modular flag";
    } else if (!out.none_divisible) {
        conv.status = TheoremCheck::Status::Pass;
        conv.detail = "premise fails, implication holds vacuously";
    } else if (out.sylow_in_grading) {
        conv.status = TheoremCheck::Status::Pass;
        conv.detail = "premise and conclusion both hold";
    } else {
        conv.status = TheoremCheck::Status::Fail;
        conv.detail = "no FPdim(X)^2 is divisible by p yet p^alpha does not "
                      "divide |U|";
    }
    out.converse = std::move(conv);

    TheoremReport both = base_report(
        "1.7", "p^alpha divides |U| exactly when p divides no FPdim(X)^2");
    describe(both);
    if (!assume.modular) {
        both.status = TheoremCheck::Status::Skipped;
        both.detail = "requires the modular flag";
    } else if (out.sylow_in_grading == out.none_divisible) {
        both.status = TheoremCheck::Status::Pass;
        both.detail = "both sides of the equivalence agree";
    } else {
        both.status = TheoremCheck::Status::Fail;
        both.detail = "the two sides of the equivalence disagree";
    }
    out.biconditional = std::move(both);
    return out;
}

ConjectureReport conjecture_7_2(const CharacterTable& table,
                                const SphericalData& spherical,
                                const DualHypergroup& dual, std::size_t x,
                                const HypothesisFlags& assume) {
    if (x >= table.rank()) {
        throw Error("simple index out of range");
    }
    ConjectureReport out;
    out.simple_x = x;

    TheoremReport r = base_report(
        "7.2",
        "(dim C)^2 * FPdim(C) / (dim(X)^2 * |U|) is an algebraic integer");
    note_flag(r, assume.spherical, "spherical");
    r.quantities.emplace_back("X", table.ring.label(x));
    add_quantity(r, "dim C", spherical.dim_total);
    add_quantity(r, "FPdim(C)", table.fp.total);
    add_quantity(r, "dim(X)", spherical.dims[x]);
    TheoremCheck rn = rn_hypothesis(dual);
    try {
        if (gate(r, {&rn})) {
            GroupLikeData g = group_likes(table, dual);
            Scalar u = Scalar::from_int(static_cast<long>(g.order()));
            add_quantity(r, "|U|", u);
            const Scalar& big_t = spherical.dim_total;
            const Scalar& dx = spherical.dims[x];
            Scalar value = big_t * big_t * table.fp.total / (dx * dx * u);
            add_quantity(r, "value", value);
            std::size_t delta = spherical.dim_character_index;
            IntegralityVerdict v =
                delta == table.fp_index
                    ? power_quotient_verdict(table, x, delta, 3, 2, u, true)
                    : is_algebraic_integer(value);
            finish_integrality(r, std::move(v));
        }
    } catch (const IndeterminateError& e) {
        r.status = TheoremCheck::Status::Indeterminate;
        r.detail = e.what();
    }
    out.integrality = std::move(r);

    out.one_isaacs = is_s_isaacs(table, spherical, BigRat(1));
    out.one_isaacs.report.tag = "7.1";
    out.one_isaacs.report.statement =
        "the whole ring is 1-Isaacs (every lambda_1 value is an algebraic "
        "integer)";
    return out;
}

} // namespace fusionlab
