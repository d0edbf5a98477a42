#include "fusionlab/scalar.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <sstream>

namespace fusionlab {

namespace {

std::atomic<unsigned> g_precision{256};

} // namespace

unsigned working_precision() { return g_precision.load(); }

void set_working_precision(unsigned bits) {
    if (bits < 32 || bits > 1u << 20) {
        throw Error("working precision out of range [32, 2^20]: " + std::to_string(bits));
    }
    g_precision.store(bits);
}

BigRat integrality_tolerance() {
    return BigRat(1, BigInt(1) << (working_precision() / 2));
}

Scalar Scalar::from_rational(BigRat q) {
    Scalar s;
    s.kind_ = Kind::Rational;
    s.a_ = std::move(q);
    return s;
}

Scalar Scalar::quadratic(BigRat a, BigRat b, long long d) {
    if (b == 0) {
        return from_rational(std::move(a));
    }
    if (d == 0 || d == 1) {
        throw Error("quadratic radicand must differ from 0 and 1");
    }
    if (squarefree_split(BigInt(d)).square_root != 1) {
        throw Error("quadratic radicand must be squarefree: " + std::to_string(d));
    }
    Scalar s;
    s.kind_ = Kind::Quadratic;
    s.a_ = std::move(a);
    s.b_ = std::move(b);
    s.d_ = d;
    return s;
}

Scalar Scalar::from_ball(ComplexBall b) {
    Scalar s;
    s.kind_ = Kind::Interval;
    s.ball_ = std::move(b);
    return s;
}

Scalar Scalar::from_real_ball(const RealBall& b) {
    return from_ball(ComplexBall(b, RealBall(0, 0, b.prec())));
}

Scalar Scalar::sqrt_int(const BigInt& n) {
    if (n == 0) {
        return from_int(0L);
    }
    SquarefreeSplit sp = squarefree_split(n);
    if (sp.squarefree == 1) {
        return from_rational(BigRat(sp.square_root));
    }
    return quadratic(BigRat(0), BigRat(sp.square_root), sp.squarefree);
}

const BigRat& Scalar::rat() const {
    if (kind_ != Kind::Rational) {
        throw Error("scalar is not rational");
    }
    return a_;
}

const BigRat& Scalar::quad_a() const {
    if (kind_ != Kind::Quadratic) {
        throw Error("scalar is not quadratic");
    }
    return a_;
}

const BigRat& Scalar::quad_b() const {
    if (kind_ != Kind::Quadratic) {
        throw Error("scalar is not quadratic");
    }
    return b_;
}

long long Scalar::quad_d() const {
    if (kind_ != Kind::Quadratic) {
        throw Error("scalar is not quadratic");
    }
    return d_;
}

const ComplexBall& Scalar::ball() const {
    if (kind_ != Kind::Interval) {
        throw Error("scalar is not an interval");
    }
    return ball_;
}

bool Scalar::is_zero() const {
    return kind_ == Kind::Rational && a_ == 0;
}

bool Scalar::is_one() const {
    return kind_ == Kind::Rational && a_ == 1;
}

bool Scalar::is_real() const {
    switch (kind_) {
    case Kind::Rational:
        return true;
    case Kind::Quadratic:
        return d_ > 0;
    case Kind::Interval:
        return ball_.im().mant() == 0 && ball_.im().rad() == 0;
    }
    return false;
}

ComplexBall Scalar::to_ball(unsigned prec) const {
    switch (kind_) {
    case Kind::Rational:
        return ComplexBall(RealBall::from_rational(a_, prec), RealBall(0, 0, prec));
    case Kind::Quadratic: {
        RealBall root = RealBall::sqrt_of_int(BigInt(d_ > 0 ? d_ : -d_), prec);
        RealBall scaled = RealBall::from_rational(b_, prec) * root;
        RealBall re = RealBall::from_rational(a_, prec);
        if (d_ > 0) {
            return ComplexBall(re + scaled, RealBall(0, 0, prec));
        }
        return ComplexBall(re, scaled);
    }
    case Kind::Interval:
        return ComplexBall(ball_.re().to_prec(prec), ball_.im().to_prec(prec));
    }
    throw Error("corrupt scalar");
}

Scalar Scalar::conj() const {
    switch (kind_) {
    case Kind::Rational:
        return *this;
    case Kind::Quadratic:
        if (d_ > 0) {
            return *this; // real value: complex conjugation is the identity
        }
        return quadratic(a_, -b_, d_);
    case Kind::Interval:
        return from_ball(ball_.conj());
    }
    throw Error("corrupt scalar");
}

Scalar Scalar::abs2() const {
    if (kind_ == Kind::Interval) {
        // Componentwise re^2 + im^2 keeps the result exactly real; the
        // product with conj() would leave a zero-centered imaginary ball.
        return from_real_ball(ball_.abs2());
    }
    return *this * conj();
}

Scalar Scalar::pow(long e) const {
    if (e == 0) {
        return from_int(1L);
    }
    bool inv = e < 0;
    unsigned long n = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Scalar base = *this;
    Scalar acc = from_int(1L);
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
        return from_int(1L) / acc;
    }
    return acc;
}

Scalar Scalar::operator-() const {
    switch (kind_) {
    case Kind::Rational:
        return from_rational(-a_);
    case Kind::Quadratic:
        return quadratic(-a_, -b_, d_);
    case Kind::Interval:
        return from_ball(-ball_);
    }
    throw Error("corrupt scalar");
}

namespace {

/// Precision for a mixed-representation operation: the finest interval
/// precision among operands, or the global working precision when both are
/// exact but land outside a common quadratic field.
unsigned op_precision(const Scalar& x, const Scalar& y) {
    unsigned p = working_precision();
    if (x.kind() == Scalar::Kind::Interval) {
        p = std::max(p, x.ball().prec());
    }
    if (y.kind() == Scalar::Kind::Interval) {
        p = std::max(p, y.ball().prec());
    }
    return p;
}

/// True when x and y can be combined exactly: both rational, or quadratic
/// over the same radicand (rationals lift into any quadratic field).
bool common_exact_field(const Scalar& x, const Scalar& y, long long& d) {
    if (!x.is_exact() || !y.is_exact()) {
        return false;
    }
    bool xq = x.kind() == Scalar::Kind::Quadratic;
    bool yq = y.kind() == Scalar::Kind::Quadratic;
    if (!xq && !yq) {
        d = 0;
        return true;
    }
    if (xq && yq) {
        if (x.quad_d() != y.quad_d()) {
            return false;
        }
        d = x.quad_d();
        return true;
    }
    d = xq ? x.quad_d() : y.quad_d();
    return true;
}

void quad_parts(const Scalar& x, BigRat& a, BigRat& b) {
    if (x.kind() == Scalar::Kind::Quadratic) {
        a = x.quad_a();
        b = x.quad_b();
    } else {
        a = x.rat();
        b = 0;
    }
}

} // namespace

Scalar operator+(const Scalar& x, const Scalar& y) {
    long long d = 0;
    if (common_exact_field(x, y, d)) {
        if (d == 0) {
            return Scalar::from_rational(x.rat() + y.rat());
        }
        BigRat xa, xb, ya, yb;
        quad_parts(x, xa, xb);
        quad_parts(y, ya, yb);
        return Scalar::quadratic(xa + ya, xb + yb, d);
    }
    unsigned p = op_precision(x, y);
    return Scalar::from_ball(x.to_ball(p) + y.to_ball(p));
}

Scalar operator-(const Scalar& x, const Scalar& y) { return x + (-y); }

Scalar operator*(const Scalar& x, const Scalar& y) {
    long long d = 0;
    if (common_exact_field(x, y, d)) {
        if (d == 0) {
            return Scalar::from_rational(x.rat() * y.rat());
        }
        BigRat xa, xb, ya, yb;
        quad_parts(x, xa, xb);
        quad_parts(y, ya, yb);
        // (xa + xb r)(ya + yb r) with r^2 = d
        return Scalar::quadratic(xa * ya + xb * yb * BigRat(d), xa * yb + xb * ya, d);
    }
    unsigned p = op_precision(x, y);
    return Scalar::from_ball(x.to_ball(p) * y.to_ball(p));
}

Scalar operator/(const Scalar& x, const Scalar& y) {
    if (y.is_zero()) {
        throw Error("division by zero");
    }
    long long d = 0;
    if (common_exact_field(x, y, d)) {
        if (d == 0) {
            return Scalar::from_rational(x.rat() / y.rat());
        }
        BigRat ya, yb;
        quad_parts(y, ya, yb);
        // 1/(ya + yb r) = (ya - yb r) / (ya^2 - yb^2 d); the norm vanishes
        // only for the zero element since d is not a rational square.
        BigRat norm = ya * ya - yb * yb * BigRat(d);
        if (norm == 0) {
            throw Error("division by zero");
        }
        Scalar inv = Scalar::quadratic(ya / norm, -yb / norm, d);
        return x * inv;
    }
    unsigned p = op_precision(x, y);
    return Scalar::from_ball(x.to_ball(p) / y.to_ball(p));
}

std::string eq_verdict_name(EqVerdict v) {
    switch (v) {
    case EqVerdict::ExactEqual:
        return "EXACT_EQUAL";
    case EqVerdict::WithinRadius:
        return "WITHIN_RADIUS";
    case EqVerdict::Distinct:
        return "DISTINCT";
    case EqVerdict::Indeterminate:
        return "INDETERMINATE";
    }
    return "?";
}

EqVerdict scalar_eq(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact()) {
        long long d = 0;
        if (common_exact_field(a, b, d)) {
            if (d == 0) {
                return a.rat() == b.rat() ? EqVerdict::ExactEqual : EqVerdict::Distinct;
            }
            BigRat xa, xb, ya, yb;
            quad_parts(a, xa, xb);
            quad_parts(b, ya, yb);
            return (xa == ya && xb == yb) ? EqVerdict::ExactEqual : EqVerdict::Distinct;
        }
        // Distinct squarefree radicands with nonzero surd parts never
        // coincide: sqrt(d1) does not lie in Q(sqrt(d2)).
        return EqVerdict::Distinct;
    }
    unsigned p = op_precision(a, b);
    ComplexBall x = a.to_ball(p), y = b.to_ball(p);
    if (ComplexBall::certainly_distinct(x, y)) {
        return EqVerdict::Distinct;
    }
    BigRat spread = x.re().radius() + x.im().radius() + y.re().radius() + y.im().radius();
    if (spread <= 2 * integrality_tolerance()) {
        return EqVerdict::WithinRadius;
    }
    return EqVerdict::Indeterminate;
}

namespace {

int sign_rat(const BigRat& q) {
    if (q == 0) {
        return 0;
    }
    return q > 0 ? 1 : -1;
}

/// Exact sign of a + b*sqrt(d) for d > 1 squarefree.
int sign_quad_real(const BigRat& a, const BigRat& b, long long d) {
    if (b == 0) {
        return sign_rat(a);
    }
    if (a == 0) {
        return sign_rat(b);
    }
    int sa = sign_rat(a), sb = sign_rat(b);
    if (sa == sb) {
        return sa;
    }
    int cmp = sign_rat(a * a - b * b * BigRat(d)); // sign of |a|^2 - |b sqrt(d)|^2
    // Opposite signs: the term with larger magnitude wins; equality is
    // impossible since sqrt(d) is irrational.
    return cmp > 0 ? sa : sb;
}

int sign_ball(const RealBall& b) {
    if (b.mant() == 0 && b.rad() == 0) {
        return 0;
    }
    if (b.is_positive()) {
        return 1;
    }
    if (b.is_negative()) {
        return -1;
    }
    throw IndeterminateError("interval straddles zero; sign undecidable at this precision");
}

/// Certain signs of (Re x, Im x).
std::pair<int, int> component_signs(const Scalar& x) {
    switch (x.kind()) {
    case Scalar::Kind::Rational:
        return {sign_rat(x.rat()), 0};
    case Scalar::Kind::Quadratic:
        if (x.quad_d() > 0) {
            return {sign_quad_real(x.quad_a(), x.quad_b(), x.quad_d()), 0};
        }
        return {sign_rat(x.quad_a()), sign_rat(x.quad_b())};
    case Scalar::Kind::Interval:
        return {sign_ball(x.ball().re()), sign_ball(x.ball().im())};
    }
    throw Error("corrupt scalar");
}

} // namespace

int sign_real(const Scalar& x) {
    if (!x.is_real()) {
        throw Error("sign of a value that is not certainly real");
    }
    return component_signs(x).first;
}

int compare_lex(const Scalar& a, const Scalar& b) {
    Scalar d = a - b;
    auto [sre, sim] = component_signs(d);
    if (sre != 0) {
        return sre;
    }
    return sim;
}

Scalar scalar_sqrt(const Scalar& x) {
    switch (x.kind()) {
    case Scalar::Kind::Rational: {
        // sqrt(p/q) = sqrt(pq)/q, exact in Q or a quadratic field.
        const BigRat& q = x.rat();
        if (q == 0) {
            return Scalar::from_int(0L);
        }
        return Scalar::sqrt_int(rat_num(q) * rat_den(q)) / Scalar::from_rational(BigRat(rat_den(q)));
    }
    case Scalar::Kind::Quadratic: {
        if (x.quad_d() < 0) {
            throw Error("square root of a non-real exact value is unsupported");
        }
        if (sign_quad_real(x.quad_a(), x.quad_b(), x.quad_d()) < 0) {
            throw Error("square root of a negative quadratic value is unsupported");
        }
        // Try a perfect square inside the same field: (u + v sqrt(d))^2 =
        // a + b sqrt(d) forces u^2 = (a +- sqrt(a^2 - b^2 d))/2 with the inner
        // root rational.
        const BigRat& a = x.quad_a();
        const BigRat& b = x.quad_b();
        BigRat norm = a * a - b * b * BigRat(x.quad_d());
        if (norm >= 0) {
            Scalar inner = scalar_sqrt(Scalar::from_rational(norm));
            if (inner.kind() == Scalar::Kind::Rational) {
                for (int s : {1, -1}) {
                    BigRat u2 = (a + BigRat(s) * inner.rat()) / 2;
                    if (u2 < 0) {
                        continue;
                    }
                    Scalar u = scalar_sqrt(Scalar::from_rational(u2));
                    if (u.kind() != Scalar::Kind::Rational || u.rat() == 0) {
                        continue;
                    }
                    BigRat v = b / (2 * u.rat());
                    Scalar cand = Scalar::quadratic(u.rat(), v, x.quad_d());
                    if (sign_quad_real(u.rat(), v, x.quad_d()) > 0 &&
                        scalar_eq(cand * cand, x) == EqVerdict::ExactEqual) {
                        return cand;
                    }
                }
            }
        }
        RealBall ball = x.to_ball(working_precision()).re();
        return Scalar::from_real_ball(ball.sqrt());
    }
    case Scalar::Kind::Interval: {
        if (!x.is_real()) {
            throw Error("square root of a complex interval is unsupported");
        }
        return Scalar::from_real_ball(x.ball().re().sqrt());
    }
    }
    throw Error("corrupt scalar");
}

Scalar pow_rational(const Scalar& base, const BigRat& e) {
    if (is_integer(e)) {
        return base.pow(rat_num(e).convert_to<long>());
    }
    if (sign_real(base) <= 0) {
        throw Error("fractional power requires a certainly positive real base");
    }
    BigInt p = rat_num(e);
    BigInt q = rat_den(e);
    Scalar powed = base.pow(p.convert_to<long>());
    if (q == 2) {
        return scalar_sqrt(powed);
    }
    unsigned k = q.convert_to<unsigned>();
    if (powed.kind() == Scalar::Kind::Rational) {
        // Exact q-th root when numerator and denominator are perfect powers.
        const BigRat& r = powed.rat();
        BigInt rn = iroot_floor(rat_num(r), k);
        BigInt rd = iroot_floor(rat_den(r), k);
        BigInt pn = 1, pd = 1;
        for (unsigned i = 0; i < k; ++i) {
            pn *= rn;
            pd *= rd;
        }
        if (pn == rat_num(r) && pd == rat_den(r)) {
            return Scalar::from_rational(BigRat(rn, rd));
        }
    }
    RealBall ball = powed.to_ball(working_precision()).re();
    return Scalar::from_real_ball(ball.nth_root(k));
}

std::string tier_name(IntegralityVerdict::Tier t) {
    switch (t) {
    case IntegralityVerdict::Tier::IntegralExact:
        return "INTEGRAL_EXACT";
    case IntegralityVerdict::Tier::IntegralOrbit:
        return "INTEGRAL_ORBIT";
    case IntegralityVerdict::Tier::IntegralHeuristic:
        return "INTEGRAL_HEURISTIC";
    case IntegralityVerdict::Tier::NotIntegral:
        return "NOT_INTEGRAL";
    case IntegralityVerdict::Tier::Indeterminate:
        return "INDETERMINATE";
    }
    return "?";
}

namespace {

/// Nearest integer to the ball, if it is pinned down to within
/// tolerance + radius and no other integer could qualify.
std::optional<BigInt> pinned_integer(const RealBall& b, const BigRat& tol) {
    BigRat slack = tol + b.radius();
    if (2 * slack >= 1) {
        return std::nullopt;
    }
    BigRat mid = b.midpoint();
    BigInt k = div_round_nearest(rat_num(mid), rat_den(mid));
    if (boost::multiprecision::abs(mid - BigRat(k)) <= slack) {
        return k;
    }
    return std::nullopt;
}

bool near_zero(const RealBall& b, const BigRat& tol) {
    BigRat mid = b.midpoint();
    return boost::multiprecision::abs(mid) <= tol + b.radius();
}

IntegralityVerdict orbit_tier(const Scalar& v, const std::vector<Scalar>& superset) {
    bool contains = false;
    for (const auto& w : superset) {
        if (scalar_eq(v, w) != EqVerdict::Distinct) {
            contains = true;
            break;
        }
    }
    if (!contains) {
        throw Error("conjugate superset does not contain the value under test");
    }
    std::vector<Scalar> coeffs = orbit_product_polynomial(superset);
    BigRat tol = integrality_tolerance();
    std::vector<BigRat> witness;
    witness.reserve(coeffs.size());
    bool all_exact = true;
    for (const auto& c : coeffs) {
        if (c.kind() == Scalar::Kind::Rational) {
            if (!is_integer(c.rat())) {
                return {IntegralityVerdict::Tier::Indeterminate, {},
                        "orbit product has an exact non-integer coefficient"};
            }
            witness.push_back(c.rat());
            continue;
        }
        all_exact = false;
        ComplexBall ball = c.to_ball(working_precision());
        if (!near_zero(ball.im(), tol)) {
            return {IntegralityVerdict::Tier::Indeterminate, {},
                    "orbit product coefficient has a non-real component"};
        }
        auto k = pinned_integer(ball.re(), tol);
        if (!k) {
            return {IntegralityVerdict::Tier::Indeterminate, {},
                    "orbit product coefficient is not near an integer"};
        }
        witness.emplace_back(*k);
    }
    std::string detail = all_exact
        ? "orbit product has exact integer coefficients"
        : "orbit product coefficients are integers to within tolerance";
    return {IntegralityVerdict::Tier::IntegralOrbit, std::move(witness), detail};
}

} // namespace

IntegralityVerdict is_algebraic_integer(const Scalar& v,
                                        const std::vector<Scalar>* conjugate_superset) {
    switch (v.kind()) {
    case Scalar::Kind::Rational: {
        const BigRat& q = v.rat();
        std::vector<BigRat> witness = {BigRat(1), -q};
        if (is_integer(q)) {
            return {IntegralityVerdict::Tier::IntegralExact, std::move(witness),
                    "rational integer"};
        }
        return {IntegralityVerdict::Tier::NotIntegral, std::move(witness),
                "rational with denominator > 1"};
    }
    case Scalar::Kind::Quadratic: {
        BigRat trace = 2 * v.quad_a();
        BigRat norm = v.quad_a() * v.quad_a() - v.quad_b() * v.quad_b() * BigRat(v.quad_d());
        std::vector<BigRat> witness = {BigRat(1), -trace, norm};
        if (is_integer(trace) && is_integer(norm)) {
            return {IntegralityVerdict::Tier::IntegralExact, std::move(witness),
                    "monic minimal polynomial has integer coefficients"};
        }
        return {IntegralityVerdict::Tier::NotIntegral, std::move(witness),
                "monic minimal polynomial has a non-integer coefficient"};
    }
    case Scalar::Kind::Interval:
        break;
    }
    if (conjugate_superset != nullptr && !conjugate_superset->empty()) {
        IntegralityVerdict orbit = orbit_tier(v, *conjugate_superset);
        if (orbit.tier != IntegralityVerdict::Tier::Indeterminate) {
            return orbit;
        }
    }
    // Heuristic tier: the single value is pinned near an integer.
    BigRat tol = integrality_tolerance();
    const ComplexBall& b = v.ball();
    if (near_zero(b.im(), tol)) {
        auto k = pinned_integer(b.re(), tol);
        if (k) {
            return {IntegralityVerdict::Tier::IntegralHeuristic,
                    {BigRat(1), BigRat(-*k)},
                    "interval lies within tolerance of an integer"};
        }
    }
    return {IntegralityVerdict::Tier::Indeterminate, {},
            "interval representation; no orbit certificate and not near an integer"};
}

IntegralityVerdict divides(const Scalar& beta, const Scalar& alpha,
                           const std::vector<Scalar>* conjugate_superset) {
    if (beta.is_zero()) {
        throw Error("divisibility by zero");
    }
    try {
        Scalar q = alpha / beta;
        return is_algebraic_integer(q, conjugate_superset);
    } catch (const IndeterminateError& e) {
        return {IntegralityVerdict::Tier::Indeterminate, {}, e.what()};
    }
}

std::vector<Scalar> orbit_product_polynomial(const std::vector<Scalar>& values) {
    if (values.empty()) {
        throw Error("orbit product of an empty set");
    }
    // Lowest degree first during the build, reversed on return.
    std::vector<Scalar> c = {Scalar::from_int(1L)};
    for (const auto& w : values) {
        std::vector<Scalar> next(c.size() + 1, Scalar::from_int(0L));
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] = next[i + 1] + c[i];
            next[i] = next[i] - w * c[i];
        }
        c = std::move(next);
    }
    std::reverse(c.begin(), c.end());
    c.front() = Scalar::from_int(1L); // exactly monic by construction
    return c;
}

// ---------------------------------------------------------------------------
// Expression grammar
// ---------------------------------------------------------------------------

namespace {

class ExprParser {
public:
    explicit ExprParser(const std::string& text) : s_(text) {}

    Scalar run() {
        Scalar v = parse_expr();
        skip_ws();
        if (pos_ != s_.size()) {
            fail("unexpected trailing input");
        }
        return v;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw Error("parse error at position " + std::to_string(pos_) + ": " + msg);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
    }

    bool eat(char ch) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    BigInt parse_int() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
        if (pos_ == start) {
            fail("expected an integer");
        }
        return BigInt(s_.substr(start, pos_ - start));
    }

    Scalar parse_expr() {
        Scalar v = parse_term();
        while (true) {
            if (eat('+')) {
                v = v + parse_term();
            } else if (eat('-')) {
                v = v - parse_term();
            } else {
                return v;
            }
        }
    }

    Scalar parse_term() {
        Scalar v = parse_factor();
        while (true) {
            if (eat('*')) {
                v = v * parse_factor();
            } else if (eat('/')) {
                v = v / parse_factor();
            } else {
                return v;
            }
        }
    }

    Scalar parse_factor() {
        if (eat('-')) {
            return -parse_atom();
        }
        return parse_atom();
    }

    Scalar parse_atom() {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return Scalar::from_rational(BigRat(parse_int()));
        }
        if (c == 's') {
            if (s_.compare(pos_, 4, "sqrt") != 0) {
                fail("expected 'sqrt'");
            }
            pos_ += 4;
            if (!eat('(')) {
                fail("expected '(' after sqrt");
            }
            bool neg = eat('-');
            BigInt n = parse_int();
            if (!eat(')')) {
                fail("expected ')' to close sqrt");
            }
            return Scalar::sqrt_int(neg ? BigInt(-n) : n);
        }
        if (c == '(') {
            ++pos_;
            Scalar v = parse_expr();
            if (!eat(')')) {
                fail("expected ')'");
            }
            return v;
        }
        fail("expected an integer, sqrt(...), or a parenthesized expression");
    }
};

std::string render_rat(const BigRat& q) {
    if (is_integer(q)) {
        return rat_num(q).str();
    }
    return rat_num(q).str() + "/" + rat_den(q).str();
}

/// Coefficient times sqrt(d), without a leading sign; |b| is used.
std::string render_surd(const BigRat& b, long long d) {
    BigRat mag = boost::multiprecision::abs(b);
    std::string root = "sqrt(" + std::to_string(d) + ")";
    if (mag == 1) {
        return root;
    }
    return render_rat(mag) + "*" + root;
}

} // namespace

Scalar parse_scalar(const std::string& text) {
    ExprParser p(text);
    return p.run();
}

std::string render_scalar(const Scalar& v) {
    switch (v.kind()) {
    case Scalar::Kind::Rational:
        return render_rat(v.rat());
    case Scalar::Kind::Quadratic: {
        const BigRat& a = v.quad_a();
        const BigRat& b = v.quad_b();
        std::string surd = render_surd(b, v.quad_d());
        if (a == 0) {
            return (b < 0 ? "-" : "") + surd;
        }
        return render_rat(a) + (b < 0 ? " - " : " + ") + surd;
    }
    case Scalar::Kind::Interval: {
        const ComplexBall& ball = v.ball();
        const RealBall& re = ball.re();
        const RealBall& im = ball.im();
        std::string mag = (re.radius() >= im.radius()) ? re.radius_magnitude()
                                                       : im.radius_magnitude();
        std::ostringstream os;
        os << "[" << re.midpoint_decimal(20);
        if (!(im.mant() == 0 && im.rad() == 0)) {
            std::string imd = im.midpoint_decimal(20);
            if (!imd.empty() && imd[0] == '-') {
                os << " - " << imd.substr(1) << "*i";
            } else {
                os << " + " << imd << "*i";
            }
        }
        os << " ~ " << mag << "]";
        return os.str();
    }
    }
    throw Error("corrupt scalar");
}

std::string render_monic_poly(const std::vector<BigRat>& coeffs) {
    if (coeffs.empty()) {
        return "0";
    }
    int deg = static_cast<int>(coeffs.size()) - 1;
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const BigRat& c = coeffs[i];
        int k = deg - static_cast<int>(i);
        if (c == 0 && !(first && i + 1 == coeffs.size())) {
            continue;
        }
        BigRat mag = boost::multiprecision::abs(c);
        bool neg = c < 0;
        if (first) {
            if (neg) {
                os << "-";
            }
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::string var;
        if (k == 1) {
            var = "x";
        } else if (k > 1) {
            var = "x^" + std::to_string(k);
        }
        if (var.empty()) {
            os << render_rat(mag);
        } else if (mag == 1) {
            os << var;
        } else if (is_integer(mag)) {
            os << render_rat(mag) << var;
        } else {
            os << render_rat(mag) << "*" << var;
        }
    }
    return os.str();
}

} // namespace fusionlab
