#include <cmath>
#include <limits>
#include <numbers>

#include <doctest.h>

#include "test_util.hpp"
#include "zonekit/errors.hpp"
#include "zonekit/region.hpp"
#include "zonekit/rng.hpp"

using namespace zonekit;
using zktest::square;

namespace {
const double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("directions have unit norm under their own lp norm") {
    for (const double p : {1.0, 1.5, 2.0, 3.0, 7.0, kInf}) {
        const LpNorm n(p);
        for (const Direction& d : sample_directions(n, 48)) {
            CHECK(n(d.vector) == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS((void)sample_directions(LpNorm(2.0), 3), std::invalid_argument);
}

TEST_CASE("axis directions snap exactly") {
    const DirectionTable dirs = sample_directions(LpNorm(kInf), 4);
    CHECK(dirs[0].vector == Point2{1.0, 0.0});
    CHECK(dirs[1].vector == Point2{0.0, 1.0});
    CHECK(dirs[2].vector == Point2{-1.0, 0.0});
    CHECK(dirs[3].vector == Point2{0.0, -1.0});
}

TEST_CASE("polygon validation") {
    const LpNorm n(2.0);
    CHECK_THROWS_AS(ConvexRegion::polygon({{0, 0}, {1, 0}}, n), ValidationError);
    // Clockwise square.
    CHECK_THROWS_AS(ConvexRegion::polygon({{-1, -1}, {-1, 1}, {1, 1}, {1, -1}}, n),
                    ValidationError);
    // Reflex vertex.
    CHECK_THROWS_AS(ConvexRegion::polygon({{0, 0}, {2, 0}, {1, 0.5}, {2, 2}, {0, 2}}, n),
                    ValidationError);
}

TEST_CASE("containment basics") {
    const ConvexRegion sq = square(1.0, 2.0);
    CHECK(sq.contains({0.0, 0.0}));
    CHECK(sq.contains({1.0, 1.0}));
    CHECK_FALSE(sq.contains({1.1, 0.0}));

    const ConvexRegion disk = ConvexRegion::ball({0, 0}, 2.0, LpNorm(2.0));
    CHECK(disk.contains({2.0, 0.0}));
    CHECK_FALSE(disk.contains({2.0, 0.1}));
}

TEST_CASE("ray exit pinned values") {
    const ConvexRegion sq = square(1.0, 2.0);
    const Direction east = make_direction(0.0, LpNorm(2.0));
    CHECK(sq.ray_exit({0, 0}, east) == doctest::Approx(1.0).epsilon(1e-8));

    const ConvexRegion disk = ConvexRegion::ball({0, 0}, 2.0, LpNorm(2.0));
    CHECK(disk.ray_exit({1.0, 0.0}, east) == doctest::Approx(1.0).epsilon(1e-7));

    const ConvexRegion l3ball = ConvexRegion::ball({0, 0}, 1.0, LpNorm(3.0));
    CHECK(l3ball.ray_exit({0, 0}, make_direction(0.0, LpNorm(3.0))) ==
          doctest::Approx(1.0).epsilon(1e-7));

    CHECK_THROWS_AS((void)sq.ray_exit({5.0, 0.0}, east), std::invalid_argument);
}

TEST_CASE("ray exit is consistent with membership") {
    RandomStream rng(21, "ray-exit");
    for (const double p : {1.0, 2.0, 3.5, kInf}) {
        const LpNorm n(p);
        const ConvexRegion shapes[] = {
            square(2.0, p),
            ConvexRegion::polygon({{-2, -1}, {1, -2}, {2.5, 0.5}, {0, 2}, {-1.8, 1.2}}, n),
            ConvexRegion::ball({0.3, -0.2}, 1.7, n),
        };
        for (const ConvexRegion& x : shapes) {
            for (int i = 0; i < 60; ++i) {
                Point2 q = rng.in_box(x.bbox_min(), x.bbox_max());
                if (!x.contains(q)) continue;
                const Direction th = make_direction(rng.uniform(0.0, 2.0 * std::numbers::pi), n);
                const double exit = x.ray_exit(q, th);
                CHECK(exit >= 0.0);
                CHECK(exit <= x.diameter() + 1e-6);
                if (exit > 1e-6) {
                    CHECK(x.contains(q + (exit - 1e-7 * (1.0 + exit)) * th.vector));
                }
                CHECK_FALSE(x.contains(q + (exit + 1e-5 * (1.0 + exit)) * th.vector));
            }
        }
    }
}

TEST_CASE("diameters") {
    CHECK(square(3.0, 2.0).diameter() == doctest::Approx(6.0 * std::sqrt(2.0)));
    CHECK(square(3.0, kInf).diameter() == doctest::Approx(6.0));
    CHECK(square(3.0, 1.0).diameter() == doctest::Approx(12.0));
    CHECK(ConvexRegion::ball({1, 1}, 2.5, LpNorm(3.0)).diameter() == doctest::Approx(5.0));
}

TEST_CASE("emanation scan is clean on convex regions") {
    const ConvexRegion sq = square(3.0, 2.0);
    const EmanationReport center = emanation_scan(sq, {0, 0}, 360, 0.12);
    CHECK(center.clean());
    // Off-center, near a corner: chords swing fast but continuously, so a
    // finer angular step keeps adjacent gaps below eps.
    const EmanationReport corner = emanation_scan(sq, {2.5, 2.5}, 2880, 0.3);
    CHECK(corner.clean());
    CHECK(corner.largest_drop > 0.0);

    const ConvexRegion ball = ConvexRegion::ball({0, 0}, 2.0, LpNorm(kInf));
    CHECK(emanation_scan(ball, {1.2, -0.7}, 720, 0.12).clean());
}
