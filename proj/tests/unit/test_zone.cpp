#include <cmath>
#include <vector>

#include <doctest.h>

#include "test_util.hpp"
#include "zonekit/errors.hpp"
#include "zonekit/zone.hpp"

using namespace zonekit;
using zktest::square;

namespace {

SiteSystem two_singletons(const ConvexRegion& x) {
    return validate_system({PointsSite{{{-1.0, 0.0}}}, PointsSite{{{1.0, 0.0}}}}, x, 50,
                           x.norm_ref());
}

}  // namespace

TEST_CASE("config resolution fills region-scaled defaults") {
    const ConvexRegion sq = square(3.0, 2.0);
    const double diam = sq.diameter();
    const IterationConfig rc = IterationConfig{}.resolved(sq);
    CHECK(rc.bisect_tol == doctest::Approx(1e-6 * diam));
    CHECK(rc.cloud_pitch == doctest::Approx(diam / 1000.0));
    CHECK(rc.eps == doctest::Approx(4.0 * rc.cloud_pitch));
    CHECK(rc.directions == 720);
    CHECK(rc.max_iter == 64);

    IterationConfig keep;
    keep.bisect_tol = 0.5;
    keep.cloud_pitch = 0.25;
    keep.eps = 2.0;
    const IterationConfig kept = keep.resolved(sq);
    CHECK(kept.bisect_tol == 0.5);
    CHECK(kept.cloud_pitch == 0.25);
    CHECK(kept.eps == 2.0);

    IterationConfig bad;
    bad.directions = 2;
    CHECK_THROWS_AS((void)bad.resolved(sq), ValidationError);
    bad = IterationConfig{};
    bad.eps = -1.0;
    CHECK_THROWS_AS((void)bad.resolved(sq), ValidationError);
    bad = IterationConfig{};
    bad.max_iter = 0;
    CHECK_THROWS_AS((void)bad.resolved(sq), ValidationError);
}

TEST_CASE("voronoi cells equal dom_fan against the rival point union") {
    const ConvexRegion sq = square(3.0, 2.0);
    const LpNorm& n = sq.norm_ref();
    const SiteSystem sys = validate_system(
        {PointsSite{{{-1.0, 0.0}, {-1.3, 0.4}}}, PointsSite{{{1.0, 0.0}}},
         PointsSite{{{0.2, -1.6}}}},
        sq, 50, n);
    IterationConfig cfg;
    cfg.directions = 90;
    const IterationConfig rc = cfg.resolved(sq);
    const DirectionTable dirs = sample_directions(n, rc.directions);
    const ZoneState s0 = voronoi(sys, sq, cfg, dirs);
    REQUIRE(s0.cells.size() == 3);

    for (std::size_t k = 0; k < 3; ++k) {
        std::vector<Point2> rivals;
        for (std::size_t j = 0; j < 3; ++j) {
            if (j == k) continue;
            rivals.insert(rivals.end(), sys.sites[j].begin(), sys.sites[j].end());
        }
        const DistanceField field = [&](Point2 q) { return set_distance(q, rivals, n); };
        const CellFan expect = dom_fan(sys.sites[k], field, sq, dirs, rc.bisect_tol);
        REQUIRE(s0.cells[k].radii.size() == expect.radii.size());
        for (std::size_t a = 0; a < expect.radii.size(); ++a) {
            for (std::size_t i = 0; i < dirs.size(); ++i) {
                CHECK(s0.cells[k].radii[a][i] == expect.radii[a][i]);
            }
        }
        CHECK(s0.cells[k].sample_spacing == rc.cloud_pitch);
    }
}

TEST_CASE("one Dom application shrinks the voronoi seed raywise") {
    const ConvexRegion sq = square(3.0, 2.0);
    const SiteSystem sys = two_singletons(sq);
    IterationConfig cfg;
    cfg.directions = 120;
    cfg.cloud_pitch = 0.05;
    const IterationConfig rc = cfg.resolved(sq);
    const DirectionTable dirs = sample_directions(sq.norm_ref(), rc.directions);

    const ZoneState s0 = voronoi(sys, sq, cfg, dirs);
    const ZoneState s1 = dom_map(s0, sys, sq, cfg, dirs);
    for (std::size_t k = 0; k < 2; ++k) {
        for (std::size_t i = 0; i < dirs.size(); ++i) {
            CHECK(s1.cells[k].radii[0][i] <= s0.cells[k].radii[0][i] + rc.bisect_tol + 1e-12);
        }
    }

    ZoneState wrong;
    wrong.cells.push_back(s0.cells[0]);
    CHECK_THROWS_AS((void)dom_map(wrong, sys, sq, cfg, dirs), InternalError);
}

TEST_CASE("iteration converges on two singletons and leaves a gap") {
    const ConvexRegion sq = square(3.0, 2.0);
    const SiteSystem sys = two_singletons(sq);
    IterationConfig cfg;
    cfg.directions = 180;
    cfg.cloud_pitch = 0.05;
    cfg.eps = 0.2;
    cfg.max_iter = 30;
    const IterationConfig rc = cfg.resolved(sq);
    const DirectionTable dirs = sample_directions(sq.norm_ref(), rc.directions);

    const IterationTrace trace = iterate(sys, sq, cfg, dirs);
    CHECK(trace.verdict == "converged");
    REQUIRE(!trace.steps.empty());
    CHECK(trace.trajectory.size() == trace.steps.size() + 1);
    CHECK(trace.steps.back() <= cfg.eps);
    CHECK(trace.residual <= 2.0 * cfg.eps);

    // The residual helper recomputes exactly what iterate measured last.
    CHECK(fixed_point_residual(trace.trajectory.back(), sys, sq, cfg, dirs) ==
          doctest::Approx(trace.residual).epsilon(1e-12));

    // Approximate zone cells of two sites keep a neutral band between them.
    const ZoneState& last = trace.trajectory.back();
    const GridMask m0 = fan_mask(last.cells[0], dirs, sq, 150);
    const GridMask m1 = fan_mask(last.cells[1], dirs, sq, 150);
    std::size_t overlap = 0;
    for (std::size_t i = 0; i < m0.bits.size(); ++i) {
        overlap += (m0.bits[i] != 0 && m1.bits[i] != 0);
    }
    CHECK(overlap <= 5);

    // Interleaved bracketing of the trajectory.
    const BracketingReport br = bracketing_check(trace.trajectory, dirs, rc.cloud_pitch,
                                                 sq.norm_ref(), 2.0 * rc.cloud_pitch);
    CHECK(br.all_ok());
    REQUIRE(br.links.size() == trace.trajectory.size() - 1);
    CHECK(br.links.front().from_epoch == 1);
    CHECK(br.links.back().to_epoch == 0);
    for (const BracketingLink& link : br.links) {
        CHECK(link.excess <= br.tolerance);
    }
}

TEST_CASE("iteration reports an exhausted budget honestly") {
    const ConvexRegion sq = square(3.0, 2.0);
    const SiteSystem sys = two_singletons(sq);
    IterationConfig cfg;
    cfg.directions = 64;
    cfg.cloud_pitch = 0.1;
    cfg.eps = 1e-9;
    cfg.max_iter = 1;
    const DirectionTable dirs = sample_directions(sq.norm_ref(), 64);
    const IterationTrace trace = iterate(sys, sq, cfg, dirs);
    CHECK(trace.verdict == "budget-exhausted");
    CHECK(trace.trajectory.size() == 2);
    CHECK(trace.steps.size() == 1);
    CHECK(trace.steps[0] > cfg.eps);
}
