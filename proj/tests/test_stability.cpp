#include "k3walls/stability.hpp"

#include <doctest.h>

using namespace k3walls;

namespace {

StabilityParams sp32() { return StabilityParams(SurfaceParams(3, 2), Rational(1, 10)); }

}  // namespace

TEST_CASE("derived polarisation numbers")
{
    StabilityParams sp = sp32();
    CHECK(sp.heps2() == Rational(11, 25));
    CHECK(sp.dot({1, 0}) == Rational(12, 5));
    CHECK(sp.dot({0, 1}) == Rational(1, 5));
    CHECK_THROWS_AS(StabilityParams(SurfaceParams(3, 2), 0), Error);
}

TEST_CASE("central charge")
{
    StabilityParams sp = sp32();
    CentralCharge z = central_charge(sp, {0, 1}, {1, 0, 0, 1});
    CHECK(z.re == Rational(11, 25));
    CHECK(z.im == 0);
    z = central_charge(sp, {0, 1}, {0, 1, 0, -1});
    CHECK(z.re == 1);
    CHECK(z.im == Rational(12, 5));
    z = central_charge(sp, {0, 0}, {1, 0, 0, 1});
    CHECK(z.re == 0);
    CHECK(z.im == 0);
}

TEST_CASE("slopes")
{
    StabilityParams sp = sp32();
    for (int w = 0; w < 5; ++w) CHECK(slope(sp, {0, w}, {0, 1, 0, -1}) == Slope{false, Rational(-5, 12)});
    CHECK(slope(sp, {0, 3}, {1, 0, 0, 1}).infinite);
    for (const Rational& w : {Rational(0), Rational(1, 3), Rational(7, 2)})
        CHECK(slope(sp, {0, w}, {1, 0, 1, 1}) == Slope{false, Rational(-11) * w / 5});
    CHECK(!(Slope::inf() == Slope{false, 0}));
}

TEST_CASE("parabola region")
{
    CHECK(in_parabola_region({0, Rational(1, 100)}));
    CHECK(!in_parabola_region({2, 2}));
    CHECK(!in_parabola_region({1, Rational(1, 2)}));
}

TEST_CASE("projection")
{
    StabilityParams sp = sp32();
    Projection o = projection(sp, {1, 0, 0, 1});
    CHECK(o.b == 0);
    CHECK(o.w == 0);
    Projection p = projection(sp, {1, 0, 1, 1});
    CHECK(p.b == Rational(5, 11));
    CHECK(p.w == 0);
    CHECK_THROWS_WITH_AS(projection(sp, {0, 1, 0, -1}), "projection undefined for rank 0", Error);
}

TEST_CASE("walls on the central ray")
{
    StabilityParams sp = sp32();
    MukaiVector v{0, 1, 0, -1};
    WallPoint w1 = wall_on_axis(sp, v, {1, 0, 1, 1});
    CHECK(w1.w == Rational(25, 132));
    CHECK(w1.kind == WallKind::LineBundle);
    CHECK(*w1.e == 1);
    // substituting back gives equal slopes
    CHECK(slope(sp, {0, w1.w}, v) == slope(sp, {0, w1.w}, {1, 0, 1, 1}));

    WallPoint w2 = wall_on_axis(sp, v, {1, 0, 2, 1});
    CHECK(w2.w == Rational(25, 66));
    CHECK(slope(sp, {0, w2.w}, v) == slope(sp, {0, w2.w}, {1, 0, 2, 1}));

    WallPoint w3 = wall_on_axis(sp, {1, 0, 1, 1}, {1, 0, 2, 1});
    CHECK(w3.w == 0);

    WallPoint o = wall_on_axis(sp, v, {1, 0, 0, 1});
    CHECK(o.kind == WallKind::OriginRay);
    CHECK(o.w == 0);

    CHECK(wall_on_axis(sp, {1, 0, 1, 1}, {0, 1, 0, -1}).kind == WallKind::RankZero);
    CHECK(wall_on_axis(sp, v, {1, 0, 1, 2}).kind == WallKind::Numerical);
    CHECK_THROWS_AS(wall_on_axis(sp, v, {2, 0, 1, 1}), Error);  // w = -25/24
}

TEST_CASE("wall errors")
{
    StabilityParams sp = sp32();
    CHECK_THROWS_WITH_AS(wall_on_axis(sp, {0, 1, 0, -1}, {0, 2, 0, -2}), "proportional classes, no wall", Error);
    // two rank-0 classes: both slopes are w-independent
    try {
        wall_on_axis(sp, {0, 1, 0, -1}, {0, 1, 1, -1});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == "no_intersection");
    }
    // s > 0 puts the solution below the axis
    try {
        wall_on_axis(sp, {0, 1, 0, 1}, {1, 0, 1, 1});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == "no_intersection");
    }
}

TEST_CASE("epsilon thresholds")
{
    CHECK(epsilon_threshold(SurfaceParams(3, 2), 0) == Rational(2, 5));
    CHECK(epsilon_threshold(SurfaceParams(3, 2), 1) == Rational(1, 3));
    CHECK(no_wall_threshold(SurfaceParams(4, 2)) == Rational(2, 5));
    // M = (g-1)^2 = 4, eps_M = 2/9, k/(g+1) = 1/2
    CHECK(default_epsilon(SurfaceParams(3, 2), {0, 1, 0, -1}) == Rational(1, 9));
    CHECK_THROWS_AS(default_epsilon(SurfaceParams(3, 2), {0, 2, 0, -1}), Error);
}

TEST_CASE("spherical scan")
{
    StabilityParams sp = sp32();
    auto b1 = spherical_scan(sp, 1);
    REQUIRE(b1);
    CHECK(*b1 == Rational(25, 121));
    auto b2 = spherical_scan(sp, 2);
    REQUIRE(b2);
    CHECK(*b2 <= *b1);
    CHECK(!spherical_scan(sp, 0));
}

TEST_CASE("bounded small-degree class scan")
{
    SurfaceParams p(3, 2);
    for (int m = 0; m <= 4; ++m) {
        StabilityParams sp(p, epsilon_threshold(p, m) * Rational(9, 10));
        SmallDegreeScan scan = small_degree_scan(sp, m, 12);
        CHECK(scan.violations.empty());
        CHECK(scan.examined > 0);
    }
    // far above the threshold the scan does find classes with t = 2, e.g. (1, 2H-3E, -3)
    SmallDegreeScan loose = small_degree_scan(StabilityParams(p, 10), 4, 12);
    bool found = false;
    for (const auto& c : loose.violations) found = found || (c.r == 1 && c.t == 2 && c.q == -3 && c.s == -3);
    CHECK(found);
}
