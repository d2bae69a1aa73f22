#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "pscert/region.hpp"

using namespace pscert;

TEST_CASE("plain disk region") {
    Region disk = build_region({});
    CHECK(disk.constraint_count() == 1);
    CHECK(disk.c0_bound == 1);
    CHECK(classify_point(disk, {Rational(0), Rational(0)}).inside);
    CHECK(classify_point(disk, {Rational(1), Rational(0)}).inside);  // boundary counts
    CHECK(!classify_point(disk, {Rational(1), Rational(1)}).inside);
    CHECK(classify_point(disk, {Rational(1, 2), Rational(0)}).margin == Rational(3, 4));
}

TEST_CASE("one-hole region membership") {
    Region r = build_region({{{Rational(1, 2), Rational(0)}, Rational(1, 4)}});
    CHECK(r.constraint_count() == 2);
    CHECK(classify_point(r, {Rational(0), Rational(0)}).inside);
    CHECK(!classify_point(r, {Rational(1, 2), Rational(0)}).inside);  // hole interior
    CHECK(classify_point(r, {Rational(3, 4), Rational(0)}).inside);   // hole boundary
    CHECK(classify_point(r, r.witness).inside);
}

TEST_CASE("invalid hole configurations are rejected") {
    CHECK_THROWS_AS(build_region({{{Rational(5), Rational(0)}, Rational(1, 2)}}), RedundantHole);
    CHECK_THROWS_AS(build_region({{{Rational(0), Rational(0)}, Rational(-1)}}),
                    std::invalid_argument);
    // small hole strictly inside a big one
    CHECK_THROWS_AS(build_region({{{Rational(0), Rational(0)}, Rational(1, 8)},
                                  {{Rational(0), Rational(0)}, Rational(1, 2)}}),
                    HypothesisViolation);
    // hole eats the whole disk -> empty region
    CHECK_THROWS_AS(build_region({{{Rational(0), Rational(0)}, Rational(3, 2)}}), EmptyRegion);
}

TEST_CASE("constraint scaling keeps 0 <= g <= 1 on the region") {
    Region r = normalize_constraints(build_region({{{Rational(1, 2), Rational(0)}, Rational(1, 4)}}));
    CHECK(r.scales[0] == 1);
    CHECK(r.scales[1] < 1);
    for (long i = -8; i <= 8; ++i) {
        for (long j = -8; j <= 8; ++j) {
            RatPoint x{Rational(i, 8), Rational(j, 8)};
            auto cls = classify_point(r, x);
            if (!cls.inside) continue;
            for (const BivarPoly& g : r.constraints) {
                Rational v = g.eval(x.first, x.second);
                CHECK(v >= 0);
                CHECK(v <= 1);
            }
        }
    }
}

TEST_CASE("gradient-angle constant for intersecting circles") {
    CHECK(lojasiewicz_c0({}) == 1);
    // disjoint holes: 1 / r_min
    CHECK(lojasiewicz_c0({{{Rational(1, 2), Rational(0)}, Rational(1, 8)},
                          {{Rational(-1, 2), Rational(0)}, Rational(1, 8)}}) == 8);
    // overlapping pair must give a strictly larger constant
    Rational c = lojasiewicz_c0({{{Rational(1, 4), Rational(0)}, Rational(1, 2)},
                                 {{Rational(-1, 4), Rational(0)}, Rational(1, 2)}});
    CHECK(c > 4);
}

TEST_CASE("hole file format round-trips") {
    std::vector<Hole> holes{{{Rational(1, 2), Rational(-1, 3)}, Rational(1, 8)},
                            {{Rational(0), Rational(0)}, Rational(7, 8)}};
    Region r;
    r.holes = holes;
    std::vector<Hole> back = parse_holes(to_string_region(r));
    REQUIRE(back.size() == 2);
    CHECK(back[0].center == holes[0].center);
    CHECK(back[0].radius == holes[0].radius);
    CHECK(back[1].radius == holes[1].radius);
    CHECK(parse_holes("# comment\n\n").empty());
    CHECK_THROWS_AS(parse_holes("1/2, 0, 1/4"), ParseError);
}

TEST_CASE("exterior distance obeys the constraint-violation bound") {
    // dist(x, S) <= c0_bound * max_i(-g_i(x)) for x outside S; the distance is
    // over-approximated by the closest point of an S sample, so the check
    // carries a slack of one sample-grid diagonal.
    std::vector<std::vector<Hole>> fixtures{
        {},
        {{{Rational(1, 2), Rational(0)}, Rational(1, 4)}},
        {{{Rational(11, 40), Rational(0)}, Rational(1, 2)},
         {{Rational(-11, 40), Rational(0)}, Rational(1, 2)}}};
    for (const auto& holes : fixtures) {
        Region r = normalize_constraints(build_region(holes));
        std::vector<std::pair<double, double>> inside;
        const long m = 120;
        for (long i = -m; i <= m; ++i)
            for (long j = -m; j <= m; ++j)
                if (classify_point(r, {Rational(i, m), Rational(j, m)}).inside)
                    inside.emplace_back(double(i) / m, double(j) / m);
        REQUIRE(!inside.empty());
        double c0 = to_double(r.c0_bound);
        long violations = 0;
        for (long i = -40; i <= 40; ++i) {
            for (long j = -40; j <= 40; ++j) {
                RatPoint x{Rational(i, 40), Rational(j, 40)};
                auto cls = classify_point(r, x);
                if (cls.inside) continue;
                double dist = 1e300;
                for (const auto& [px, py] : inside)
                    dist = std::min(dist, std::hypot(px - double(i) / 40, py - double(j) / 40));
                if (dist > c0 * (-to_double(cls.margin)) + 2.0 / m) ++violations;
            }
        }
        CHECK(violations == 0);
    }
}
