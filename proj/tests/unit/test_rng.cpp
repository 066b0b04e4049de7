#include <limits>
#include <vector>

#include <doctest.h>

#include "zonekit/norms.hpp"
#include "zonekit/rng.hpp"

using namespace zonekit;

TEST_CASE("streams are reproducible and name-separated") {
    RandomStream a(42, "alpha");
    RandomStream b(42, "alpha");
    RandomStream c(42, "beta");
    RandomStream d(43, "alpha");
    bool all_equal = true, diverged_name = false, diverged_seed = false;
    for (int i = 0; i < 64; ++i) {
        const std::uint64_t va = a.next_u64();
        all_equal = all_equal && (va == b.next_u64());
        diverged_name = diverged_name || (va != c.next_u64());
        diverged_seed = diverged_seed || (va != d.next_u64());
    }
    CHECK(all_equal);
    CHECK(diverged_name);
    CHECK(diverged_seed);
}

TEST_CASE("uniform ranges") {
    RandomStream rng(7, "uniform");
    double lo = 1.0, hi = 0.0, acc = 0.0;
    const int trials = 20000;
    for (int i = 0; i < trials; ++i) {
        const double u = rng.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        lo = std::min(lo, u);
        hi = std::max(hi, u);
        acc += u;
    }
    CHECK(lo < 0.01);
    CHECK(hi > 0.99);
    CHECK(acc / trials == doctest::Approx(0.5).epsilon(0.02));

    for (int i = 0; i < 200; ++i) {
        const double v = rng.uniform(-3.0, -1.0);
        CHECK(v >= -3.0);
        CHECK(v < -1.0);
    }
}

TEST_CASE("uniform_int hits inclusive bounds") {
    RandomStream rng(7, "ints");
    std::vector<int> seen(5, 0);
    for (int i = 0; i < 2000; ++i) {
        const int v = rng.uniform_int(2, 6);
        REQUIRE(v >= 2);
        REQUIRE(v <= 6);
        ++seen[v - 2];
    }
    for (const int count : seen) CHECK(count > 0);
}

TEST_CASE("in_ball stays strictly inside across norms") {
    for (const double p : {1.0, 2.0, 5.0, std::numeric_limits<double>::infinity()}) {
        const LpNorm n(p);
        RandomStream rng(9, "ball");
        const Point2 c{1.0, -2.0};
        for (int i = 0; i < 500; ++i) {
            const Point2 q = rng.in_ball(c, 0.75, n);
            CHECK(distance(q, c, n) < 0.75);
        }
    }
}
