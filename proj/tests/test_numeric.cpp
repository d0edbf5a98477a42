#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fusionlab/ball.hpp"
#include "fusionlab/numeric.hpp"
#include "fusionlab/polyz.hpp"

#include <random>

using namespace fusionlab;

namespace {

bool ball_contains_rat(const RealBall& b, const BigRat& q) {
    return b.contains_rational(q);
}

/// Every point of the inner ball lies inside the outer ball.
bool ball_covers(const RealBall& outer, const RealBall& inner) {
    BigRat gap = boost::multiprecision::abs(outer.midpoint() - inner.midpoint());
    return gap + inner.radius() <= outer.radius();
}

} // namespace

TEST_CASE("integer square roots floor correctly") {
    CHECK(isqrt_floor(BigInt(0)) == 0);
    CHECK(isqrt_floor(BigInt(1)) == 1);
    CHECK(isqrt_floor(BigInt(2)) == 1);
    CHECK(isqrt_floor(BigInt(35)) == 5);
    CHECK(isqrt_floor(BigInt(36)) == 6);
    BigInt big = BigInt("123456789123456789");
    BigInt r = isqrt_floor(big * big + 5);
    CHECK(r == big);
    CHECK_THROWS_AS(isqrt_floor(BigInt(-1)), Error);
}

TEST_CASE("integer k-th roots floor correctly") {
    CHECK(iroot_floor(BigInt(0), 3) == 0);
    CHECK(iroot_floor(BigInt(26), 3) == 2);
    CHECK(iroot_floor(BigInt(27), 3) == 3);
    CHECK(iroot_floor(BigInt(28), 3) == 3);
    CHECK(iroot_floor(BigInt(1024), 10) == 2);
    CHECK(iroot_floor(BigInt(1023), 10) == 1);
    BigInt b = BigInt("987654321");
    CHECK(iroot_floor(b * b * b, 3) == b);
}

TEST_CASE("squarefree factorization separates the square part") {
    auto s = squarefree_split(BigInt(12));
    CHECK(s.square_root == 2);
    CHECK(s.squarefree == 3);
    s = squarefree_split(BigInt(49));
    CHECK(s.square_root == 7);
    CHECK(s.squarefree == 1);
    s = squarefree_split(BigInt(-75));
    CHECK(s.square_root == 5);
    CHECK(s.squarefree == -3);
    s = squarefree_split(BigInt(1));
    CHECK(s.square_root == 1);
    CHECK(s.squarefree == 1);
    s = squarefree_split(BigInt(30));
    CHECK(s.square_root == 1);
    CHECK(s.squarefree == 30);
}

TEST_CASE("nearest and ceiling division handle signs") {
    CHECK(div_round_nearest(BigInt(7), BigInt(2)) == 4);
    CHECK(div_round_nearest(BigInt(-7), BigInt(2)) == -3);
    CHECK(div_round_nearest(BigInt(6), BigInt(4)) == 2);
    CHECK(div_round_nearest(BigInt(-6), BigInt(4)) == -1);
    CHECK(div_ceil(BigInt(7), BigInt(2)) == 4);
    CHECK(div_ceil(BigInt(-7), BigInt(2)) == -3);
    CHECK(div_ceil(BigInt(8), BigInt(2)) == 4);
}

TEST_CASE("double to rational conversion is exact") {
    CHECK(rat_from_double(0.5) == BigRat(1, 2));
    CHECK(rat_from_double(-3.25) == BigRat(-13, 4));
    CHECK(rat_from_double(0.0) == 0);
    CHECK(rat_from_double(1024.0) == 1024);
}

TEST_CASE("real balls enclose rational constructions") {
    RealBall third = RealBall::from_rational(BigRat(1, 3), 128);
    CHECK(ball_contains_rat(third, BigRat(1, 3)));
    CHECK_FALSE(third.contains_zero());
    CHECK(third.is_positive());

    RealBall exact = RealBall::exact_int(BigInt(7), 64);
    CHECK(exact.rad() == 0);
    CHECK(exact.midpoint() == 7);
}

TEST_CASE("ball arithmetic is conservative under the four operations") {
    std::mt19937 rng(20240915);
    std::uniform_int_distribution<int> num(-50, 50);
    std::uniform_int_distribution<int> den(1, 30);
    for (int trial = 0; trial < 300; ++trial) {
        BigRat x(num(rng), den(rng));
        BigRat y(num(rng), den(rng));
        RealBall bx = RealBall::from_rational(x, 96);
        RealBall by = RealBall::from_rational(y, 96);
        CHECK(ball_contains_rat(bx + by, x + y));
        CHECK(ball_contains_rat(bx - by, x - y));
        CHECK(ball_contains_rat(bx * by, x * y));
        if (y != 0 && !by.contains_zero()) {
            CHECK(ball_contains_rat(bx / by, x / y));
        }
    }
}

TEST_CASE("ball square roots bracket the true value") {
    RealBall two = RealBall::sqrt_of_int(BigInt(2), 256);
    // (sqrt 2)^2 must contain 2.
    CHECK(ball_contains_rat(two * two, BigRat(2)));
    RealBall nine = RealBall::sqrt_of_int(BigInt(9), 128);
    CHECK(ball_contains_rat(nine, BigRat(3)));

    RealBall x = RealBall::from_rational(BigRat(5, 4), 200);
    RealBall r = x.sqrt();
    CHECK(ball_contains_rat(r * r, BigRat(5, 4)));

    RealBall c = RealBall::from_rational(BigRat(27), 200).nth_root(3);
    CHECK(ball_contains_rat(c, BigRat(3)));
    RealBall c2 = RealBall::from_rational(BigRat(2), 200).nth_root(5);
    CHECK(ball_contains_rat(c2.pow_int(5), BigRat(2)));
}

TEST_CASE("division by a zero-straddling ball is refused") {
    RealBall num = RealBall::exact_int(BigInt(1), 64);
    RealBall tiny(BigInt(1), BigInt(5), 64); // 2^-64 +- 5*2^-64 straddles zero
    CHECK(tiny.contains_zero());
    CHECK_THROWS_AS(num / tiny, IndeterminateError);
}

TEST_CASE("distinctness and ordering of balls require separation") {
    RealBall a = RealBall::from_rational(BigRat(1, 3), 128);
    RealBall b = RealBall::from_rational(BigRat(2, 3), 128);
    CHECK(RealBall::certainly_distinct(a, b));
    CHECK(RealBall::certainly_less(a, b));
    CHECK_FALSE(RealBall::certainly_less(b, a));
    RealBall fat(BigInt(0), BigInt(1) << 130, 128); // radius 4: covers both
    CHECK_FALSE(RealBall::certainly_distinct(fat, a));
}

TEST_CASE("precision changes keep enclosures sound") {
    RealBall x = RealBall::from_rational(BigRat(22, 7), 256);
    RealBall down = x.to_prec(64);
    CHECK(ball_contains_rat(down, BigRat(22, 7)));
    RealBall up = down.to_prec(512);
    CHECK(ball_contains_rat(up, BigRat(22, 7)));
}

TEST_CASE("complex ball multiplication and division stay sound") {
    // (1 + 2i) * (3 - i) = 5 + 5i
    ComplexBall a(RealBall::exact_int(BigInt(1), 128), RealBall::exact_int(BigInt(2), 128));
    ComplexBall b(RealBall::exact_int(BigInt(3), 128), RealBall::exact_int(BigInt(-1), 128));
    ComplexBall p = a * b;
    CHECK(ball_contains_rat(p.re(), BigRat(5)));
    CHECK(ball_contains_rat(p.im(), BigRat(5)));
    ComplexBall q = p / b;
    CHECK(ball_contains_rat(q.re(), BigRat(1)));
    CHECK(ball_contains_rat(q.im(), BigRat(2)));
    RealBall n = a.abs2();
    CHECK(ball_contains_rat(n, BigRat(5)));
}

TEST_CASE("decimal rendering of midpoints is stable") {
    RealBall x = RealBall::from_rational(BigRat(1, 4), 128);
    CHECK(x.midpoint_decimal(6) == "0.25");
    RealBall y = RealBall::from_rational(BigRat(-3, 2), 128);
    CHECK(y.midpoint_decimal(4) == "-1.5");
    RealBall z = RealBall::exact_int(BigInt(3), 64);
    CHECK(z.midpoint_decimal(5) == "3.0");
}

TEST_CASE("characteristic polynomials of integer matrices are exact") {
    // Multiplication matrix of the golden ratio element: x^2 - x - 1.
    std::vector<std::vector<BigInt>> fib = {{BigInt(0), BigInt(1)}, {BigInt(1), BigInt(1)}};
    PolyZ p = char_poly(fib);
    REQUIRE(p.degree() == 2);
    CHECK(p.c[0] == -1);
    CHECK(p.c[1] == -1);
    CHECK(p.c[2] == 1);

    std::vector<std::vector<BigInt>> diag = {
        {BigInt(2), BigInt(0), BigInt(0)},
        {BigInt(0), BigInt(3), BigInt(0)},
        {BigInt(0), BigInt(0), BigInt(-1)}};
    PolyZ q = char_poly(diag);
    // (x-2)(x-3)(x+1) = x^3 - 4x^2 + x + 6
    REQUIRE(q.degree() == 3);
    CHECK(q.c[0] == 6);
    CHECK(q.c[1] == 1);
    CHECK(q.c[2] == -4);
    CHECK(q.c[3] == 1);

    // Trace/determinant cross-check on random 4x4 matrices.
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<std::vector<BigInt>> m(4, std::vector<BigInt>(4));
        BigInt tr = 0;
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                m[i][j] = entry(rng);
            }
            tr += m[i][i];
        }
        PolyZ cp = char_poly(m);
        REQUIRE(cp.degree() == 4);
        CHECK(cp.c[4] == 1);
        CHECK(cp.c[3] == -tr); // coefficient of x^3 is -trace
    }
}

TEST_CASE("polynomial gcd and squarefree machinery") {
    // (x-1)^2 (x+2) = x^3 - 3x + 2
    PolyZ p;
    p.c = {BigInt(2), BigInt(-3), BigInt(0), BigInt(1)};
    CHECK_FALSE(poly_is_squarefree(p));
    PolyZ sf = squarefree_part(p);
    // Should be (x-1)(x+2) = x^2 + x - 2
    REQUIRE(sf.degree() == 2);
    CHECK(sf.c[0] == -2);
    CHECK(sf.c[1] == 1);
    CHECK(sf.c[2] == 1);

    PolyZ q;
    q.c = {BigInt(-1), BigInt(0), BigInt(1)}; // x^2 - 1
    CHECK(poly_is_squarefree(q));

    PolyZ lin;
    lin.c = {BigInt(-2), BigInt(1)}; // x - 2
    PolyZ quad;
    quad.c = {BigInt(6), BigInt(-5), BigInt(1)}; // x^2 - 5x + 6
    CHECK(poly_divides(lin, quad));
    PolyZ other;
    other.c = {BigInt(-5), BigInt(1)};
    CHECK_FALSE(poly_divides(other, quad));
    PolyZ quot = poly_div_exact(quad, lin);
    REQUIRE(quot.degree() == 1);
    CHECK(quot.c[0] == -3);
    CHECK(quot.c[1] == 1);
}

TEST_CASE("certified complex roots isolate and classify correctly") {
    PolyZ golden;
    golden.c = {BigInt(-1), BigInt(-1), BigInt(1)}; // x^2 - x - 1
    auto roots = certified_roots(golden, 192);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].real);
    CHECK(roots[1].real);
    int hits = 0;
    for (const auto& r : roots) {
        // phi satisfies x^2 = x + 1; check the enclosure squares correctly.
        ComplexBall sq = r.ball * r.ball;
        ComplexBall lin = r.ball + ComplexBall::from_real(RealBall::exact_int(BigInt(1), 192));
        CHECK_FALSE(ComplexBall::certainly_distinct(sq, lin));
        if (r.ball.re().is_positive()) {
            ++hits;
        }
    }
    CHECK(hits == 1); // exactly one positive root

    PolyZ cyc;
    cyc.c = {BigInt(1), BigInt(0), BigInt(1)}; // x^2 + 1
    auto imag = certified_roots(cyc, 128);
    REQUIRE(imag.size() == 2);
    CHECK_FALSE(imag[0].real);
    CHECK_FALSE(imag[1].real);
    for (const auto& r : imag) {
        CHECK(ball_contains_rat(r.ball.re(), BigRat(0)));
    }

    PolyZ quint;
    quint.c = {BigInt(-1), BigInt(0), BigInt(0), BigInt(0), BigInt(0), BigInt(1)}; // x^5 - 1
    auto five = certified_roots(quint, 256);
    REQUIRE(five.size() == 5);
    int reals = 0;
    for (const auto& r : five) {
        if (r.real) {
            ++reals;
            CHECK(ball_contains_rat(r.ball.re(), BigRat(1)));
        }
    }
    CHECK(reals == 1);
}

TEST_CASE("certified roots refuse non-squarefree input") {
    PolyZ sq;
    sq.c = {BigInt(1), BigInt(-2), BigInt(1)}; // (x-1)^2
    CHECK_THROWS_AS(certified_roots(sq, 128), Error);
}

TEST_CASE("real root refinement certifies tight enclosures") {
    PolyZ p;
    p.c = {BigInt(-5), BigInt(0), BigInt(1)}; // x^2 - 5
    RealBall r = refine_real_root(p, 2.23, 256);
    CHECK(ball_contains_rat(r * r, BigRat(5)));
    CHECK(r.is_positive());
    // Radius should be tiny at 256 bits.
    CHECK(r.radius() < BigRat(1, BigInt(1) << 200));
}

TEST_CASE("root enclosures from a matrix spectrum cover exact eigenvalues") {
    // Matrix with spectrum {0, +sqrt(2), -sqrt(2)} (Ising-style column).
    std::vector<std::vector<BigInt>> m = {
        {BigInt(0), BigInt(0), BigInt(1)},
        {BigInt(0), BigInt(0), BigInt(1)},
        {BigInt(1), BigInt(1), BigInt(0)}};
    PolyZ cp = char_poly(m);       // x^3 - 2x
    auto roots = certified_roots(cp, 160);
    REQUIRE(roots.size() == 3);
    int zero_hits = 0, pos = 0, neg = 0;
    for (const auto& r : roots) {
        CHECK(r.real);
        if (ball_contains_rat(r.ball.re(), BigRat(0))) {
            ++zero_hits;
        } else if (r.ball.re().is_positive()) {
            ++pos;
            CHECK(ball_contains_rat(r.ball.re() * r.ball.re(), BigRat(2)));
        } else {
            ++neg;
        }
    }
    CHECK(zero_hits == 1);
    CHECK(pos == 1);
    CHECK(neg == 1);
}

TEST_CASE("ball covering helper sanity") {
    RealBall wide(BigInt(0), BigInt(1000), 64);
    RealBall narrow(BigInt(5), BigInt(3), 64);
    CHECK(ball_covers(wide, narrow));
    CHECK_FALSE(ball_covers(narrow, wide));
}
