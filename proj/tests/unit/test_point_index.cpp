#include <algorithm>
#include <limits>
#include <vector>

#include <doctest.h>

#include "test_util.hpp"
#include "zonekit/point_index.hpp"
#include "zonekit/rng.hpp"

using namespace zonekit;

TEST_CASE("kd nearest matches brute force across norms") {
    RandomStream rng(11, "kd");
    std::vector<Point2> cloud;
    for (int i = 0; i < 700; ++i) {
        cloud.push_back(rng.in_box({-3, -2}, {4, 3}));
    }
    // Duplicates and axis-aligned clusters stress the median splits.
    for (int i = 0; i < 30; ++i) cloud.push_back({1.0, static_cast<double>(i % 7)});
    const PointIndex index(cloud);
    CHECK(index.size() == cloud.size());

    for (const double p : {1.0, 2.0, 3.5, std::numeric_limits<double>::infinity()}) {
        const LpNorm n(p);
        for (int i = 0; i < 300; ++i) {
            const Point2 q = rng.in_box({-4, -3}, {5, 4});
            const double expect = zktest::brute_nearest(q, cloud, n);
            CHECK(index.nearest(q, n) == doctest::Approx(expect).epsilon(1e-12));
        }
    }
}

TEST_CASE("bounded query returns min of truth and the bound") {
    RandomStream rng(12, "kd-bound");
    std::vector<Point2> cloud;
    for (int i = 0; i < 400; ++i) cloud.push_back(rng.in_box({0, 0}, {1, 1}));
    const PointIndex index(cloud);
    const LpNorm n(2.0);
    for (int i = 0; i < 200; ++i) {
        const Point2 q = rng.in_box({-0.5, -0.5}, {1.5, 1.5});
        const double truth = zktest::brute_nearest(q, cloud, n);
        CHECK(index.nearest(q, n, 1e9) == doctest::Approx(truth).epsilon(1e-12));
        CHECK(index.nearest(q, n, truth * 0.5) == doctest::Approx(truth * 0.5));
        CHECK(index.nearest(q, n, truth + 1e-3) == doctest::Approx(truth).epsilon(1e-12));
        CHECK(index.nearest(q, n, 0.0) == 0.0);
    }
}

TEST_CASE("degenerate clouds") {
    const PointIndex empty;
    CHECK(empty.nearest({0, 0}, LpNorm(2.0)) == std::numeric_limits<double>::infinity());

    const PointIndex one(std::vector<Point2>{{2.0, -1.0}});
    CHECK(one.nearest({2.0, -1.0}, LpNorm(2.0)) == 0.0);
    CHECK(one.nearest({2.0, 2.0}, LpNorm(1.0)) == doctest::Approx(3.0));

    std::vector<Point2> same(50, Point2{0.5, 0.5});
    const PointIndex dup(same);
    CHECK(dup.nearest({0.5, 0.75}, LpNorm(2.0)) == doctest::Approx(0.25));
}
