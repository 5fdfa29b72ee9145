#include "k3walls/hbn.hpp"
#include "k3walls/strata.hpp"

#include <doctest.h>

using namespace k3walls;

TEST_CASE("validate_type")
{
    StabilityType t{{1, 1}, {0, 1}};
    CHECK(validate_type(t, 1, false));
    CHECK(!validate_type(t, 1, true));
    CHECK(validate_type({}, -1, false));
    CHECK(!validate_type({}, 0, false));
    CHECK_THROWS_AS(validate_type({{0, 2}, {1, 1}}, 1, false), Error);
    CHECK_THROWS_AS(validate_type({{1, 0}}, 1, false), Error);
    // p = 1, e_1 >= 1: refined bound reads 2 m_1 <= r + 1
    CHECK(validate_type({{1, 1}}, 1, true));
    CHECK(!validate_type({{2, 2}}, 2, true));
    CHECK(validate_type({{0, 2}}, 1, true));
}

TEST_CASE("enumerate_types")
{
    SurfaceParams p(5, 2);
    MukaiVector v{0, 1, 0, -1};
    auto all = enumerate_types(p, v, 1, {});
    REQUIRE(all.items.size() == 3);
    CHECK(all.items[0] == StabilityType{{0, 2}});
    CHECK(all.items[1] == StabilityType{{1, 1}});
    CHECK(all.items[2] == StabilityType{{1, 1}, {0, 1}});

    auto r0 = enumerate_types(p, v, 0, {});
    REQUIRE(r0.items.size() == 1);
    CHECK(r0.items[0] == StabilityType{{0, 1}});

    auto refined = enumerate_types(p, v, 1, {true, false});
    REQUIRE(refined.items.size() == 2);
    CHECK(refined.items[0] == StabilityType{{0, 2}});
    CHECK(refined.items[1] == StabilityType{{1, 1}});

    auto empty = enumerate_types(p, v, -1, {});
    REQUIRE(empty.items.size() == 1);
    CHECK(empty.items[0].empty());

    CHECK_THROWS_AS(enumerate_types(p, {0, 2, 0, -1}, 1, {}), Error);
    CHECK_THROWS_AS(enumerate_types(p, {0, 1, 1, -1}, 1, {}), Error);
}

TEST_CASE("square filter keeps types with square >= -2")
{
    SurfaceParams p(5, 2);
    MukaiVector v{0, 1, 0, -1};
    auto kept = enumerate_types(p, v, 1, {false, true});
    // squares: {(0,2)} -> -4, {(1,1)} -> 0, {(1,1),(0,1)} -> -8
    REQUIRE(kept.items.size() == 1);
    CHECK(kept.items[0] == StabilityType{{1, 1}});
    CHECK(type_square(p, v, {{0, 2}}) == -4);
    CHECK(type_square(p, v, {{1, 1}, {0, 1}}) == -8);
}

TEST_CASE("stratum_dimension")
{
    SurfaceParams p(5, 2);
    MukaiVector v{0, 1, 0, -1};
    CHECK(stratum_dimension(p, v, {{0, 2}}) == 4);
    CHECK(stratum_dimension(p, v, {{1, 1}}) == 6);
    CHECK(stratum_dimension(p, v, {{1, 1}, {0, 1}}) == 2);
    // closed form 2g - (sum m e)k - (sum m)(g-d-1) - (sum m)^2 for v = (0,H,1+d-g)
    for (int g = 3; g <= 9; ++g)
        for (int d = 0; d < g; ++d) {
            SurfaceParams q(g, 3);
            StabilityType t{{2, 1}, {1, 2}};
            long me = 2 + 2, m = 3;
            CHECK(stratum_dimension(q, {0, 1, 0, 1 + d - g}, t) == 2 * g - me * 3 - m * (g - d - 1) - m * m);
        }
}

TEST_CASE("balanced types")
{
    CHECK(BalancedType{1, 0, 2}.to_type() == StabilityType{{1, 2}});
    CHECK(BalancedType{1, 2, 1}.to_type() == StabilityType{{2, 2}, {1, 1}});
    auto b = as_balanced({{3, 1}, {2, 4}});
    REQUIRE(b);
    CHECK(b->e == 2);
    CHECK(b->m1 == 1);
    CHECK(b->m2 == 4);
    CHECK(!as_balanced({{3, 1}, {1, 4}}));
    CHECK(as_balanced({{0, 2}})->m1 == 0);
}

TEST_CASE("balanced_nonempty")
{
    SurfaceParams p(5, 2);
    MukaiVector v{0, 1, 0, -1};
    auto a = balanced_nonempty(p, v, {1, 0, 1}, DegreeCase::Generic);
    CHECK(a.verdict == Verdict::NonEmpty);
    CHECK(a.square == 0);
    auto b = balanced_nonempty(p, v, {2, 0, 1}, DegreeCase::Generic);
    CHECK(b.verdict == Verdict::EmptyByNecessity);
    CHECK(b.square == -4);
    // v_2 = (-3, H-2E, -4) has square -24 < -2, so the square test decides
    auto c = balanced_nonempty(p, v, {0, 2, 1}, DegreeCase::Generic);
    CHECK(c.square == -24);
    CHECK(c.verdict == Verdict::EmptyByNecessity);

    // square >= -2 but m1 + m2 > k + r0
    SurfaceParams big(16, 2);
    auto u = balanced_nonempty(big, {0, 1, 0, -1}, {0, 2, 1}, DegreeCase::Generic);
    CHECK(u.square >= -2);
    CHECK(u.verdict == Verdict::Unknown);

    // d = g-1: strict inequality m1 + m2 < k
    SurfaceParams q(9, 3);
    CHECK(balanced_nonempty(q, {0, 1, 0, 0}, {0, 0, 2}, DegreeCase::GenusMinusOne).verdict == Verdict::NonEmpty);
    CHECK(balanced_nonempty(q, {0, 1, 0, 0}, {0, 0, 3}, DegreeCase::GenusMinusOne).verdict == Verdict::Unknown);

    CHECK_THROWS_AS(balanced_nonempty(p, v, {1, 0, 1}, DegreeCase::GenusMinusOne), Error);
    CHECK_THROWS_AS(balanced_nonempty(p, v, {1, 1, 0}, DegreeCase::Generic), Error);
    CHECK_THROWS_AS(balanced_nonempty(p, {1, 1, 0, 0}, {1, 0, 1}, DegreeCase::Generic), Error);
}

TEST_CASE("wall_sequence")
{
    StabilityParams sp(SurfaceParams(3, 2), Rational(1, 10));
    MukaiVector v{0, 1, 0, -1};
    auto one = wall_sequence(sp, v, {{1, 1}});
    REQUIRE(one.size() == 1);
    CHECK(one[0].w == Rational(25, 132));

    auto origin = wall_sequence(sp, v, {{0, 1}});
    REQUIRE(origin.size() == 1);
    CHECK(origin[0].kind == WallKind::OriginRay);
    CHECK(origin[0].w == 0);

    auto two = wall_sequence(sp, v, {{1, 1}, {0, 1}});
    REQUIRE(two.size() == 2);
    CHECK(two[0].w == Rational(25, 132));
    CHECK(two[1].w == 0);
    CHECK(two[1].destabilizer == MukaiVector{1, 0, 0, 1});

    // eps = 2 with e = (3,2): the running quotient (-1, H-3E, -2) has negative H_eps degree
    StabilityParams loose(SurfaceParams(3, 2), 2);
    try {
        wall_sequence(loose, v, {{3, 1}, {2, 1}});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == "non_monotone_walls");
    }
}
