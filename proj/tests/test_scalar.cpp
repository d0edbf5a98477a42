#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fusionlab/scalar.hpp"

#include <random>

using namespace fusionlab;

namespace {

Scalar phi() { return Scalar::quadratic(BigRat(1, 2), BigRat(1, 2), 5); }
Scalar phi_bar() { return Scalar::quadratic(BigRat(1, 2), BigRat(-1, 2), 5); }

bool exact_equal(const Scalar& a, const Scalar& b) {
    return scalar_eq(a, b) == EqVerdict::ExactEqual;
}

/// Outer complex ball covers every point of the inner one.
bool cball_covers(const ComplexBall& outer, const ComplexBall& inner) {
    auto covers = [](const RealBall& o, const RealBall& i) {
        BigRat gap = boost::multiprecision::abs(o.midpoint() - i.midpoint());
        return gap + i.radius() <= o.radius();
    };
    return covers(outer.re(), inner.re()) && covers(outer.im(), inner.im());
}

} // namespace

TEST_CASE("parsing exact expressions lands in the right field") {
    Scalar golden = parse_scalar("(1+sqrt(5))/2");
    REQUIRE(golden.kind() == Scalar::Kind::Quadratic);
    CHECK(golden.quad_a() == BigRat(1, 2));
    CHECK(golden.quad_b() == BigRat(1, 2));
    CHECK(golden.quad_d() == 5);

    Scalar half = parse_scalar("3/6");
    REQUIRE(half.kind() == Scalar::Kind::Rational);
    CHECK(half.rat() == BigRat(1, 2));

    Scalar two = parse_scalar("sqrt(2)*sqrt(2)");
    REQUIRE(two.kind() == Scalar::Kind::Rational);
    CHECK(two.rat() == 2);

    Scalar mixed = parse_scalar("sqrt(2)+sqrt(3)");
    CHECK(mixed.kind() == Scalar::Kind::Interval);

    Scalar surd = parse_scalar("sqrt(12)");
    REQUIRE(surd.kind() == Scalar::Kind::Quadratic);
    CHECK(surd.quad_b() == 2);
    CHECK(surd.quad_d() == 3);

    Scalar omega = parse_scalar("(-1+sqrt(-3))/2");
    REQUIRE(omega.kind() == Scalar::Kind::Quadratic);
    CHECK(omega.quad_d() == -3);
    CHECK_FALSE(omega.is_real());
}

TEST_CASE("parse errors carry positions and reasons") {
    CHECK_THROWS_WITH_AS(parse_scalar("1+"), doctest::Contains("position"), Error);
    CHECK_THROWS_AS(parse_scalar("sqrt(x)"), Error);
    CHECK_THROWS_AS(parse_scalar("(1"), Error);
    CHECK_THROWS_AS(parse_scalar("1/0"), Error);
    CHECK_THROWS_AS(parse_scalar(""), Error);
    CHECK_THROWS_AS(parse_scalar("2 3"), Error);
}

TEST_CASE("golden ratio arithmetic stays exact") {
    Scalar p = phi();
    Scalar sq = p * p;
    REQUIRE(sq.kind() == Scalar::Kind::Quadratic);
    CHECK(sq.quad_a() == BigRat(3, 2));
    CHECK(sq.quad_b() == BigRat(1, 2));
    // phi^2 = phi + 1
    CHECK(exact_equal(sq, p + Scalar::from_int(1L)));

    Scalar ratio = Scalar::from_int(2L) / parse_scalar("sqrt(2)");
    CHECK(exact_equal(ratio, parse_scalar("sqrt(2)")));

    Scalar inv = Scalar::from_int(1L) / p;
    // 1/phi = phi - 1
    CHECK(exact_equal(inv, p - Scalar::from_int(1L)));
}

TEST_CASE("fractional powers take positive real roots with certification") {
    Scalar base = parse_scalar("(5+sqrt(5))/2");
    Scalar root = pow_rational(base, BigRat(1, 2));
    // 1.902113... and squaring must re-enclose the base.
    ComplexBall sq = root.to_ball(256) * root.to_ball(256);
    CHECK(cball_covers(sq, base.to_ball(400)));

    CHECK(exact_equal(pow_rational(Scalar::from_int(4L), BigRat(1, 2)),
                      Scalar::from_int(2L)));
    CHECK(exact_equal(pow_rational(Scalar::from_int(8L), BigRat(1, 3)),
                      Scalar::from_int(2L)));
    CHECK(exact_equal(pow_rational(phi(), BigRat(2)), phi() + Scalar::from_int(1L)));
    // 2^(-1/2) = sqrt(2)/2 exactly
    Scalar is = pow_rational(Scalar::from_int(2L), BigRat(-1, 2));
    REQUIRE(is.kind() == Scalar::Kind::Quadratic);
    CHECK(is.quad_a() == 0);
    CHECK(is.quad_b() == BigRat(1, 2));
    CHECK(is.quad_d() == 2);

    Scalar cube = pow_rational(Scalar::from_int(2L), BigRat(1, 3));
    CHECK(cube.kind() == Scalar::Kind::Interval);
    ComplexBall cubed = cube.to_ball(256).pow_int(3);
    CHECK(cubed.re().contains_rational(BigRat(2)));

    CHECK_THROWS_AS(pow_rational(Scalar::from_int(-2L), BigRat(1, 2)), Error);
}

TEST_CASE("exact square roots recognize perfect squares in quadratic fields") {
    CHECK(exact_equal(scalar_sqrt(Scalar::from_int(4L)), Scalar::from_int(2L)));
    CHECK(exact_equal(scalar_sqrt(Scalar::from_rational(BigRat(1, 4))),
                      Scalar::from_rational(BigRat(1, 2))));
    Scalar r8 = scalar_sqrt(Scalar::from_int(8L));
    REQUIRE(r8.kind() == Scalar::Kind::Quadratic);
    CHECK(r8.quad_b() == 2);
    CHECK(r8.quad_d() == 2);
    // sqrt(phi^2) recovers phi exactly through the field-square route.
    CHECK(exact_equal(scalar_sqrt(phi() * phi()), phi()));
    // sqrt of a negative rational lands in an imaginary quadratic field.
    Scalar im = scalar_sqrt(Scalar::from_rational(BigRat(-3, 4)));
    REQUIRE(im.kind() == Scalar::Kind::Quadratic);
    CHECK(im.quad_d() == -3);
    CHECK(im.quad_b() == BigRat(1, 2));
}

TEST_CASE("integrality verdicts on exact values match minimal polynomials") {
    auto v = is_algebraic_integer(phi());
    CHECK(v.tier == IntegralityVerdict::Tier::IntegralExact);
    REQUIRE(v.witness.size() == 3);
    CHECK(v.witness[0] == 1);
    CHECK(v.witness[1] == -1);
    CHECK(v.witness[2] == -1);
    CHECK(render_monic_poly(v.witness) == "x^2 - x - 1");

    auto h = is_algebraic_integer(Scalar::from_rational(BigRat(1, 2)));
    CHECK(h.tier == IntegralityVerdict::Tier::NotIntegral);

    auto w = is_algebraic_integer(Scalar::quadratic(BigRat(5, 2), BigRat(-1, 2), 5));
    CHECK(w.tier == IntegralityVerdict::Tier::IntegralExact);
    REQUIRE(w.witness.size() == 3);
    CHECK(w.witness[1] == -5);
    CHECK(w.witness[2] == 5);
    CHECK(render_monic_poly(w.witness) == "x^2 - 5x + 5");

    // sqrt(2)/2 has minimal polynomial x^2 - 1/2: certified non-integral.
    auto n = is_algebraic_integer(Scalar::quadratic(BigRat(0), BigRat(1, 2), 2));
    CHECK(n.tier == IntegralityVerdict::Tier::NotIntegral);
    CHECK(render_monic_poly(n.witness) == "x^2 - 1/2");
}

TEST_CASE("divisibility follows quotient integrality") {
    auto a = divides(parse_scalar("sqrt(2)"), Scalar::from_int(2L));
    CHECK(a.tier == IntegralityVerdict::Tier::IntegralExact);

    auto b = divides(Scalar::from_int(2L), Scalar::from_int(1L));
    CHECK(b.tier == IntegralityVerdict::Tier::NotIntegral);

    auto c = divides(phi() * phi(), parse_scalar("(5+sqrt(5))/2"));
    CHECK(c.tier == IntegralityVerdict::Tier::IntegralExact);
    CHECK(render_monic_poly(c.witness) == "x^2 - 5x + 5");

    CHECK_THROWS_AS(divides(Scalar::from_int(0L), Scalar::from_int(1L)), Error);
}

TEST_CASE("orbit products expand symmetric polynomials exactly") {
    auto p = orbit_product_polynomial({phi(), phi_bar()});
    REQUIRE(p.size() == 3);
    CHECK(exact_equal(p[0], Scalar::from_int(1L)));
    CHECK(exact_equal(p[1], Scalar::from_int(-1L)));
    CHECK(exact_equal(p[2], Scalar::from_int(-1L)));

    auto z = orbit_product_polynomial({Scalar::from_int(0L)});
    REQUIRE(z.size() == 2);
    CHECK(exact_equal(z[1], Scalar::from_int(0L)));

    auto q = orbit_product_polynomial({Scalar::from_int(2L), Scalar::from_int(3L)});
    REQUIRE(q.size() == 3);
    CHECK(exact_equal(q[1], Scalar::from_int(-5L)));
    CHECK(exact_equal(q[2], Scalar::from_int(6L)));
}

TEST_CASE("orbit certification upgrades interval values") {
    // phi as a pure interval, with its Galois orbit supplied as intervals.
    Scalar pi1 = Scalar::from_ball(phi().to_ball(192));
    Scalar pi2 = Scalar::from_ball(phi_bar().to_ball(192));
    std::vector<Scalar> orbit = {pi1, pi2};
    auto v = is_algebraic_integer(pi1, &orbit);
    CHECK(v.tier == IntegralityVerdict::Tier::IntegralOrbit);
    REQUIRE(v.witness.size() == 3);
    CHECK(v.witness[1] == -1);
    CHECK(v.witness[2] == -1);

    // A value that is not near an integer and has no orbit data abstains.
    Scalar half_i = Scalar::from_ball(Scalar::from_rational(BigRat(1, 2)).to_ball(192));
    auto iv = is_algebraic_integer(half_i);
    CHECK(iv.tier == IntegralityVerdict::Tier::Indeterminate);

    // A lone interval near an integer gets the heuristic tier.
    Scalar three = Scalar::from_ball(Scalar::from_int(3L).to_ball(192));
    auto hv = is_algebraic_integer(three);
    CHECK(hv.tier == IntegralityVerdict::Tier::IntegralHeuristic);

    // Supplying a superset that omits the value is a caller error.
    std::vector<Scalar> bad = {pi2};
    CHECK_THROWS_AS(is_algebraic_integer(pi1, &bad), Error);
}

TEST_CASE("raising precision only sharpens verdicts") {
    unsigned original = working_precision();
    for (unsigned prec : {128u, 256u, 512u}) {
        set_working_precision(prec);
        Scalar pi1 = Scalar::from_ball(phi().to_ball(prec));
        Scalar pi2 = Scalar::from_ball(phi_bar().to_ball(prec));
        std::vector<Scalar> orbit = {pi1, pi2};
        auto v = is_algebraic_integer(pi1, &orbit);
        CHECK(v.tier == IntegralityVerdict::Tier::IntegralOrbit);

        Scalar half_i = Scalar::from_ball(Scalar::from_rational(BigRat(1, 2)).to_ball(prec));
        auto h = is_algebraic_integer(half_i);
        CHECK(h.tier != IntegralityVerdict::Tier::NotIntegral);
    }
    set_working_precision(original);
}

TEST_CASE("equality verdicts distinguish representations correctly") {
    CHECK(scalar_eq(phi(), phi()) == EqVerdict::ExactEqual);
    CHECK(scalar_eq(phi(), phi_bar()) == EqVerdict::Distinct);
    CHECK(scalar_eq(parse_scalar("sqrt(2)"), parse_scalar("sqrt(3)")) == EqVerdict::Distinct);
    CHECK(scalar_eq(parse_scalar("sqrt(2)"), Scalar::from_rational(BigRat(3, 2))) ==
          EqVerdict::Distinct);

    Scalar interval_phi = Scalar::from_ball(phi().to_ball(256));
    CHECK(scalar_eq(interval_phi, phi()) == EqVerdict::WithinRadius);
    CHECK(scalar_eq(interval_phi, phi_bar()) == EqVerdict::Distinct);

    // sqrt(2)*sqrt(3) computed through intervals vs exact sqrt(6).
    Scalar prod = Scalar::from_ball(parse_scalar("sqrt(2)").to_ball(256)) *
                  Scalar::from_ball(parse_scalar("sqrt(3)").to_ball(256));
    CHECK(scalar_eq(prod, parse_scalar("sqrt(6)")) == EqVerdict::WithinRadius);

    // Huge radii admit no useful verdict.
    Scalar fat = Scalar::from_real_ball(RealBall(BigInt(0), BigInt(1) << 200, 256));
    CHECK(scalar_eq(fat, Scalar::from_int(0L)) == EqVerdict::Indeterminate);
}

TEST_CASE("signs and lexicographic comparison are certain") {
    CHECK(sign_real(phi()) == 1);
    CHECK(sign_real(phi_bar()) == -1);
    CHECK(sign_real(Scalar::from_int(0L)) == 0);
    CHECK(sign_real(Scalar::quadratic(BigRat(3), BigRat(-1), 5)) == 1);  // 3 - sqrt(5) > 0
    CHECK(sign_real(Scalar::quadratic(BigRat(2), BigRat(-1), 5)) == -1); // 2 - sqrt(5) < 0
    // Negative rational part with a dominant radical and vice versa; all
    // four sign combinations of the two terms must resolve correctly.
    CHECK(sign_real(Scalar::quadratic(BigRat(-1, 2), BigRat(1, 2), 5)) == 1);  // (sqrt(5)-1)/2 > 0
    CHECK(sign_real(Scalar::quadratic(BigRat(1, 2), BigRat(-1, 2), 5)) == -1); // (1-sqrt(5))/2 < 0
    CHECK(sign_real(Scalar::quadratic(BigRat(-2), BigRat(1), 2)) == -1);       // sqrt(2) - 2 < 0
    CHECK(sign_real(Scalar::quadratic(BigRat(2), BigRat(-1), 2)) == 1);        // 2 - sqrt(2) > 0
    CHECK(sign_real(Scalar::quadratic(BigRat(-1), BigRat(1), 2)) == 1);        // sqrt(2) - 1 > 0
    CHECK(sign_real(Scalar::quadratic(BigRat(1), BigRat(-1), 2)) == -1);       // 1 - sqrt(2) < 0
    CHECK_THROWS_AS(sign_real(parse_scalar("sqrt(-3)")), Error);
    Scalar fat = Scalar::from_real_ball(RealBall(BigInt(1), BigInt(10), 64));
    CHECK_THROWS_AS(sign_real(fat), IndeterminateError);

    CHECK(compare_lex(Scalar::from_int(-1L), Scalar::from_rational(BigRat(1, 2))) < 0);
    CHECK(compare_lex(phi(), Scalar::from_rational(BigRat(1, 2))) > 0);
    CHECK(compare_lex(phi(), phi()) == 0);
    // Mixed-sign quadratic difference: phi - 1 = (sqrt(5)-1)/2 > 0.
    CHECK(compare_lex(phi(), Scalar::from_int(1L)) > 0);
    CHECK(compare_lex(Scalar::quadratic(BigRat(-1, 2), BigRat(1, 2), 5), Scalar::from_int(0L)) > 0);
    // Same real part: order by imaginary part.
    Scalar i_pos = Scalar::quadratic(BigRat(0), BigRat(1), -1);
    Scalar i_neg = Scalar::quadratic(BigRat(0), BigRat(-1), -1);
    CHECK(compare_lex(i_neg, i_pos) < 0);
}

TEST_CASE("conjugation and squared modulus respect the representation") {
    Scalar omega = parse_scalar("(-1+sqrt(-3))/2");
    Scalar wc = omega.conj();
    CHECK(exact_equal(wc, parse_scalar("(-1-sqrt(-3))/2")));
    CHECK(exact_equal(omega.abs2(), Scalar::from_int(1L)));
    CHECK(exact_equal(omega * wc, Scalar::from_int(1L)));
    // omega^3 = 1
    CHECK(exact_equal(omega.pow(3), Scalar::from_int(1L)));
    // Real quadratics are fixed by conjugation.
    CHECK(exact_equal(phi().conj(), phi()));
    CHECK(exact_equal(phi().abs2(), phi() * phi()));
}

TEST_CASE("rendering exact scalars round-trips through the grammar") {
    std::vector<Scalar> samples = {
        Scalar::from_int(0L),
        Scalar::from_int(-7L),
        Scalar::from_rational(BigRat(3, 4)),
        Scalar::from_rational(BigRat(-22, 7)),
        phi(),
        phi_bar(),
        Scalar::quadratic(BigRat(0), BigRat(1), 2),
        Scalar::quadratic(BigRat(0), BigRat(-3, 2), 7),
        Scalar::quadratic(BigRat(-1, 2), BigRat(1, 2), -3),
        Scalar::quadratic(BigRat(5), BigRat(2), 6),
    };
    for (const auto& s : samples) {
        std::string text = render_scalar(s);
        CAPTURE(text);
        CHECK(exact_equal(parse_scalar(text), s));
    }
}

TEST_CASE("random exact scalars round-trip through the grammar") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 12);
    std::vector<long long> rads = {2, 3, 5, -1, -3, 6, 10, -7};
    std::uniform_int_distribution<std::size_t> rad(0, rads.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
        BigRat a(num(rng), den(rng));
        BigRat b(num(rng), den(rng));
        Scalar s = (trial % 3 == 0) ? Scalar::from_rational(a)
                                    : Scalar::quadratic(a, b, rads[rad(rng)]);
        std::string text = render_scalar(s);
        CAPTURE(text);
        CHECK(exact_equal(parse_scalar(text), s));
    }
}

TEST_CASE("quadratic fields satisfy exact field laws") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    for (long long d : {2LL, 5LL, -3LL}) {
        for (int trial = 0; trial < 60; ++trial) {
            auto draw = [&]() {
                return Scalar::quadratic(BigRat(num(rng), den(rng)), BigRat(num(rng), den(rng)), d);
            };
            Scalar x = draw(), y = draw(), z = draw();
            CHECK(exact_equal((x + y) + z, x + (y + z)));
            CHECK(exact_equal((x * y) * z, x * (y * z)));
            CHECK(exact_equal(x * (y + z), x * y + x * z));
            CHECK(exact_equal(x + y, y + x));
            CHECK(exact_equal(x * y, y * x));
            if (!x.is_zero()) {
                CHECK(exact_equal(x * (Scalar::from_int(1L) / x), Scalar::from_int(1L)));
            }
            CHECK(exact_equal(x - x, Scalar::from_int(0L)));
        }
    }
}

TEST_CASE("interval evaluation always encloses the exact value") {
    // Random expression trees evaluated exactly (single field) and through
    // 128-bit interval arithmetic; the exact value must lie inside.
    std::mt19937 rng(314159);
    std::uniform_int_distribution<int> small(-8, 8);
    std::uniform_int_distribution<int> denom(1, 6);
    std::uniform_int_distribution<int> opsel(0, 3);
    int checked = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        // Build a random chain of ops over Q(sqrt(5)).
        Scalar exact = Scalar::quadratic(BigRat(small(rng), denom(rng)),
                                         BigRat(small(rng), denom(rng)), 5);
        ComplexBall ball = exact.to_ball(128);
        for (int step = 0; step < 4; ++step) {
            Scalar next = Scalar::quadratic(BigRat(small(rng), denom(rng)),
                                            BigRat(small(rng), denom(rng)), 5);
            ComplexBall nb = next.to_ball(128);
            switch (opsel(rng)) {
            case 0:
                exact = exact + next;
                ball = ball + nb;
                break;
            case 1:
                exact = exact - next;
                ball = ball - nb;
                break;
            case 2:
                exact = exact * next;
                ball = ball * nb;
                break;
            default:
                if (!next.is_zero() && !nb.abs2().contains_zero()) {
                    exact = exact / next;
                    ball = ball / nb;
                }
                break;
            }
        }
        // The tight enclosure of the exact value must sit inside the coarse
        // 128-bit interval computation.
        CHECK(cball_covers(ball, exact.to_ball(512)));
        ++checked;
    }
    CHECK(checked == 1000);
}

TEST_CASE("integrality agrees with the trace and norm oracle on a grid") {
    int disagreements = 0;
    for (long long d : {2LL, 3LL, 5LL, 6LL, 7LL, 10LL, -1LL, -2LL, -3LL}) {
        for (int p = -6; p <= 6; ++p) {
            for (int q = -6; q <= 6; ++q) {
                for (int r = 1; r <= 6; ++r) {
                    Scalar v = q == 0
                        ? Scalar::from_rational(BigRat(p, r))
                        : Scalar::quadratic(BigRat(p, r), BigRat(q, r), d);
                    bool oracle;
                    if (q == 0) {
                        oracle = is_integer(BigRat(p, r));
                    } else {
                        BigRat trace(2 * p, r);
                        BigRat norm = BigRat(p, r) * BigRat(p, r) -
                                      BigRat(q, r) * BigRat(q, r) * BigRat(d);
                        oracle = is_integer(trace) && is_integer(norm);
                    }
                    auto verdict = is_algebraic_integer(v);
                    bool got = verdict.tier == IntegralityVerdict::Tier::IntegralExact;
                    bool refuted = verdict.tier == IntegralityVerdict::Tier::NotIntegral;
                    if (got != oracle || refuted == oracle) {
                        ++disagreements;
                    }
                }
            }
        }
    }
    CHECK(disagreements == 0);
}

TEST_CASE("working precision is configurable and bounded") {
    unsigned original = working_precision();
    set_working_precision(512);
    CHECK(working_precision() == 512);
    CHECK(integrality_tolerance() == BigRat(1, BigInt(1) << 256));
    CHECK_THROWS_AS(set_working_precision(1), Error);
    set_working_precision(original);
}

TEST_CASE("interval rendering shows midpoint and radius magnitude") {
    Scalar v = Scalar::from_ball(parse_scalar("sqrt(2)").to_ball(128));
    std::string text = render_scalar(v);
    CHECK(text.find("1.4142135") != std::string::npos);
    CHECK(text.find("2^") != std::string::npos);
}
