#include "oracles.hpp"

#include "k3/fixed_locus.hpp"
#include "k3/profile_space.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>

using namespace k3;

TEST_SUITE("fixed_locus")
{
    TEST_CASE("lefschetz_euler")
    {
        const auto p = OrbitProfile::parse("1^2 12^1 60^1");
        CHECK(lefschetz_euler(p, 30) == -16);
        CHECK(lefschetz_euler(p, 10) == 14);
        CHECK(lefschetz_euler(p, 12) == 4);
        CHECK(lefschetz_euler(p, 1) == 4);
        CHECK_THROWS_AS(lefschetz_euler(p, 60), std::invalid_argument);
        CHECK_THROWS_AS(lefschetz_euler(p, 0), std::invalid_argument);
        CHECK_THROWS_AS(lefschetz_euler(OrbitProfile::parse("1^2"), 1), std::invalid_argument);
        for (const auto& q : enumerate_profiles(OrderSignature{1, 60})) {
            for (std::int64_t a = 1; a < 60; ++a) {
                CHECK(lefschetz_euler(q, a) == lefschetz_euler(profile_power(q, a), 1));
            }
        }
    }

    TEST_CASE("decompose_fixed_locus under the involution axiom")
    {
        const auto models = decompose_fixed_locus(-8, 6, false, true);
        REQUIRE(models.size() == 6);
        for (std::int64_t d = 0; d <= 5; ++d) {
            const bool found = std::any_of(models.begin(), models.end(), [&](const FixedLocusModel& m) {
                return m.rational_curves() == d && m.irrational_curves() == 1 && m.curves.back().genus == d + 5;
            });
            CHECK(found);
        }
        const auto nsym2 = decompose_fixed_locus(-16, 2, false, true);
        REQUIRE(nsym2.size() == 2);
        std::vector<std::vector<std::int64_t>> genera;
        for (const auto& m : nsym2) {
            std::vector<std::int64_t> g;
            for (const auto& c : m.curves) {
                g.push_back(c.genus);
            }
            genera.push_back(g);
        }
        std::sort(genera.begin(), genera.end());
        CHECK(genera == std::vector<std::vector<std::int64_t>>{{0, 10}, {9}});
    }

    TEST_CASE("decompose_fixed_locus with points")
    {
        const auto m = decompose_fixed_locus(4, 0, true, false);
        REQUIRE(m.size() == 1);
        CHECK(m[0].points == 4);
        CHECK(m[0].curves.empty());
        CHECK(decompose_fixed_locus(-3, 0, true, false).empty());
        for (std::int64_t e = -20; e <= 24; ++e) {
            for (const auto& x : decompose_fixed_locus(e, 3, true, false, 4)) {
                std::int64_t sum = x.points;
                for (const auto& c : x.curves) {
                    sum += 2 - 2 * c.genus;
                }
                CHECK(sum == e);
                CHECK(x.euler() == e);
                CHECK(x.curves.size() <= 3);
            }
            for (const auto& x : decompose_fixed_locus(e, 6, false, true)) {
                CHECK(x.euler() == e);
                CHECK(x.points == 0);
                CHECK(x.irrational_curves() <= 1);
            }
        }
    }

    TEST_CASE("rh_feasible against brute force")
    {
        CHECK_FALSE(rh_feasible(3, 5, 16));
        CHECK_FALSE(rh_feasible(2, 8, 0));
        CHECK_FALSE(rh_feasible(3, 8, 13));
        CHECK(rh_feasible(2, 10, 2));
        for (std::int64_t n : {2, 3, 5, 7}) {
            for (std::int64_t g = 0; g <= 20; ++g) {
                for (std::int64_t f = 0; f <= 100; ++f) {
                    REQUIRE(rh_feasible(n, g, f) == oracle::rh(n, g, f));
                }
            }
        }
        CHECK_THROWS_AS(rh_feasible(4, 1, 0), std::invalid_argument);
    }

    TEST_CASE("orbit_partitions")
    {
        using V = std::vector<std::vector<std::int64_t>>;
        CHECK(orbit_partitions(3, 60) == V{{1, 1, 1}, {1, 2}, {3}});
        CHECK(orbit_partitions(0, 7) == V{{}});
        const auto twelve = orbit_partitions(12, 30);
        CHECK(std::find(twelve.begin(), twelve.end(), std::vector<std::int64_t>{1, 1, 10}) != twelve.end());
        // every multiset of divisors, built by brute force over counts
        for (std::int64_t d = 0; d <= 12; ++d) {
            std::set<std::vector<std::int64_t>> want;
            std::vector<std::int64_t> divs{1, 2, 3, 5, 6, 10};
            std::function<void(std::size_t, std::int64_t, std::vector<std::int64_t>)> rec =
                [&](std::size_t i, std::int64_t left, std::vector<std::int64_t> cur) {
                    if (i == divs.size()) {
                        if (left == 0) {
                            want.insert(cur);
                        }
                        return;
                    }
                    for (std::int64_t k = 0; k * divs[i] <= left; ++k) {
                        rec(i + 1, left - k * divs[i], cur);
                        cur.push_back(divs[i]);
                    }
                };
            rec(0, d, {});
            const auto got = orbit_partitions(d, 30);
            CHECK(std::set<std::vector<std::int64_t>>(got.begin(), got.end()) == want);
            CHECK(got.size() == want.size());
        }
    }
}
