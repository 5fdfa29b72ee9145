#include "k3walls/chains.hpp"
#include "k3walls/hbn.hpp"

#include <doctest.h>

using namespace k3walls;

TEST_CASE("adjusted_rho")
{
    CHECK(adjusted_rho(1, 1, 3, {{0, 0}, {1, 2}}) == 0);
    CHECK(adjusted_rho(1, 1, 3, {{0, 1}, {1, 1}}) == 0);
    CHECK(adjusted_rho(7, 2, 6, {}) == rho(7, 2, 6));
    CHECK_THROWS_AS(adjusted_rho(1, 1, 3, {{1, 0}}), Error);
    CHECK_THROWS_AS(adjusted_rho(1, 1, 3, {{0, 3}}), Error);
}

TEST_CASE("complement")
{
    CHECK(complement(1, 3, {1, 1}) == RamificationSequence{1, 1});
    CHECK(complement(1, 3, {0, 0}) == RamificationSequence{2, 2});
    CHECK(complement(2, 7, {0, 2, 5}) == RamificationSequence{0, 3, 5});
    RamificationSequence x{0, 1, 1, 4};
    CHECK(complement(3, 7, complement(3, 7, x)) == x);
}

TEST_CASE("build_chain worked trace")
{
    ChainSeries c = build_chain(4, 3, 1, 3);
    REQUIRE(c.components.size() == 4);
    const std::vector<std::pair<RamificationSequence, RamificationSequence>> expect{
        {{0, 0}, {1, 2}}, {{0, 1}, {1, 1}}, {{1, 1}, {0, 1}}, {{1, 2}, {0, 0}}};
    for (int a = 0; a < 4; ++a) {
        CHECK(c.components[a].a == a + 1);
        CHECK(c.components[a].in == expect[a].first);
        CHECK(c.components[a].out == expect[a].second);
        CHECK(c.components[a].adj_rho == 0);
    }
    ChainCheck chk = verify_chain(c);
    CHECK(chk.ok());
    CHECK(chk.total_adj_rho == 0);
}

TEST_CASE("boundary component carries (r(g-d+r))^(r+1)")
{
    for (int g = 3; g <= 10; ++g)
        for (int k = 2; k <= 6; ++k)
            for (int r = 0; r + 2 <= k; ++r)
                for (int d = r; d <= g - 1; ++d) {
                    if (rho(g, r, d) < 0) continue;
                    int h = g - d + r, a = 1 + (r + 1) * h;
                    if (a > g) continue;
                    ChainSeries c = build_chain(g, k, r, d);
                    CHECK(c.components[a - 1].in == RamificationSequence(r + 1, r * h));
                }
}

TEST_CASE("last range has adjusted rho 1")
{
    // (5,4,1,3) has rho = -1, so it is rejected; d = 4 gives rho = 1
    CHECK_THROWS_AS(build_chain(5, 4, 1, 3), Error);
    ChainSeries c = build_chain(5, 4, 1, 4);
    REQUIRE(c.components.size() == 5);
    const ChainComponent& last = c.components.back();
    CHECK(last.adj_rho == 1);
    CHECK(weight(last.in) + weight(last.out) == 2 * (4 - 1 - 1));
    for (int a = 0; a < 4; ++a) CHECK(c.components[a].adj_rho == 0);
    CHECK(verify_chain(c).total_adj_rho == 1);
}

TEST_CASE("verify_chain on more inputs")
{
    ChainSeries c = build_chain(6, 4, 1, 4);
    ChainCheck chk = verify_chain(c);
    CHECK(chk.ok());
    CHECK(chk.total_adj_rho == 0);

    ChainSeries big = build_chain(10, 6, 2, 9);
    CHECK(verify_chain(big).ok());
    CHECK(verify_chain(big).total_adj_rho == rho(10, 2, 9));
}

TEST_CASE("tampering is detected at the node")
{
    ChainSeries c = build_chain(4, 3, 1, 3);
    c.components[1].out = {1, 2};  // was (1,1)
    ChainCheck chk = verify_chain(c);
    CHECK(!chk.ok());
    bool node = false;
    for (const auto& f : chk.failures) node = node || f.find("node 2") != std::string::npos;
    CHECK(node);
}

TEST_CASE("preconditions")
{
    CHECK_THROWS_AS(build_chain(4, 2, 1, 3), Error);  // k < r+2
    CHECK_THROWS_AS(build_chain(4, 3, 1, 4), Error);  // d > g-1
    CHECK_THROWS_AS(build_chain(5, 3, 1, 3), Error);  // rho < 0
}
