#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qhex/lgv.hpp"
#include "qhex/oracle.hpp"
#include "test_util.hpp"

using namespace qhex;

TEST_CASE("single-path enumeration") {
    SUBCASE("empty path") {
        const auto paths = enumerate_single({{0, 0}, {0, 0}});
        REQUIRE(paths.size() == 1);
        CHECK(paths[0].points.size() == 1);
        CHECK(paths[0].weight == LaurentPoly::one());
    }
    SUBCASE("two paths with weights 1 and w2") {
        const auto paths = enumerate_single({{0, 1}, {1, 0}});
        REQUIRE(paths.size() == 2);
        LaurentPoly sum = LaurentPoly::zero();
        for (const auto& p : paths) sum = sum + p.weight;
        CHECK(sum == LP({{0, 1, 1}, {2, 1, 2}, {-2, 1, 2}}));
    }
    SUBCASE("infeasible spec yields no paths") {
        CHECK(enumerate_single({{0, 0}, {2, 1}}).empty());
    }
    SUBCASE("cap is checked before enumerating") {
        CHECK_THROWS_AS(enumerate_single({{0, 20}, {20, 0}}, 1000), CapExceeded);
    }
}

TEST_CASE("family generating functions on worked regions") {
    CHECK(family_gf(RegionSpec(1, 0, DS({0}))) == LaurentPoly::one());
    CHECK(family_gf(RegionSpec(1, 1, DS({0}))) == LP({{1, 1, 2}, {-1, 1, 2}}));
    // one family: the bottom row with labels 1, 2 and a fixed empty path
    CHECK(family_gf(RegionSpec(2, 0, DS({0, 1}))) ==
          LP({{3, 1, 4}, {1, 1, 4}, {-1, 1, 4}, {-3, 1, 4}}));
    // hand enumeration: paths RDR/DRR for the first slot give w1 w4 + w3 w4
    const LaurentPoly expected = weight(1) * weight(4) + weight(3) * weight(4);
    CHECK(family_gf(RegionSpec(2, 0, DS({-1, 0}))) == expected);
}

TEST_CASE("family counts") {
    CHECK(family_count(RegionSpec(1, 0, DS({0}))) == 1);
    CHECK(family_count(RegionSpec(2, 0, DS({-1, 0}))) == 2);
    CHECK(family_count(RegionSpec(2, 0, DS({0, 1}))) == 1);
    // count equals the generating function evaluated at q = 1
    const RegionSpec region(3, 1, DS({-2, 0, 1}));
    CHECK(BigRational(static_cast<long>(family_count(region))) ==
          family_gf(region).eval(BigRational(1)));
    // terminal above start for the last path
    CHECK(family_count(RegionSpec(2, 0, DS({0, 2}))) == 0);
    CHECK(family_count(RegionSpec(1, 2, DS({1}))) == 0);
}

TEST_CASE("every enumerated family is vertex-disjoint with pinned endpoints") {
    const RegionSpec region(3, 1, DS({-3, -1, 1}));
    std::uint64_t seen = 0;
    enumerate_families(region, kDefaultEnumerationCap, [&](const PathFamily& f) {
        ++seen;
        REQUIRE(f.paths.size() == 3);
        std::set<std::pair<std::int64_t, std::int64_t>> vertices;
        for (int i = 0; i < 3; ++i) {
            const auto& path = f.paths[static_cast<std::size_t>(i)];
            REQUIRE(!path.empty());
            CHECK(path.front() == LatticePoint{2 * i + 1, i});
            CHECK(path.back() == LatticePoint{2 * 3 - 1 + 1, region.dents[static_cast<std::size_t>(i)]});
            for (std::size_t s = 0; s + 1 < path.size(); ++s) {
                const bool right = path[s + 1] == LatticePoint{path[s].x + 1, path[s].y};
                const bool down = path[s + 1] == LatticePoint{path[s].x, path[s].y - 1};
                CHECK((right || down));
            }
            for (const auto& p : path) CHECK(vertices.insert({p.x, p.y}).second);
        }
    });
    CHECK(seen == family_count(region));
}

TEST_CASE("family weights match the recomputed label products") {
    const RegionSpec region(2, 1, DS({-2, 0}));
    LaurentPoly total = LaurentPoly::zero();
    enumerate_families(region, kDefaultEnumerationCap,
                       [&](const PathFamily& f) { total = total + f.weight(); });
    CHECK(total == family_gf(region));
}

TEST_CASE("enumeration cap aborts the search") {
    CHECK_THROWS_AS(family_gf(RegionSpec(4, 2, DS({-5, -4, -3, -2})), 1000), CapExceeded);
}

TEST_CASE("sum over single paths equals the recursion value exhaustively") {
    for (std::int64_t dx = 0; dx <= 5; ++dx) {
        for (std::int64_t dy = 0; dy <= 5; ++dy) {
            const PathSpec spec{{1, 2}, {1 + dx, 2 - dy}};
            LaurentPoly sum = LaurentPoly::zero();
            for (const auto& p : enumerate_single(spec)) sum = sum + p.weight;
            CHECK(sum == gf_dp(spec));
        }
    }
}
