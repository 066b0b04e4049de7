#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "zonekit/dominance.hpp"
#include "zonekit/region.hpp"

namespace zonekit {

struct StabilityRow {
    double delta = 0.0;
    double measured = 0.0;  // worst Hausdorff distance between boundary clouds over the trials
    int trials = 0;
};

struct StabilityTable {
    std::vector<StabilityRow> rows;  // deltas sorted descending
    std::uint64_t seed = 0;
    int grid_resolution = 0;
};

/// Empirical probe of Hausdorff stability of dom(P, A): every point of P and
/// A is jittered inside a delta-ball (clamped back into X; clamping is
/// distance-nonexpanding so D(P, P') < delta survives, and each trial
/// re-measures it), the grid oracle is re-run, and the Hausdorff distance
/// between the base and perturbed boundary clouds is recorded. Deltas must
/// respect the stability theorem's regime delta < d(P, A)/6; delta = 0 is the
/// no-perturbation baseline. Measures trends only: the theory proves a
/// modulus exists but gives no rate.
[[nodiscard]] StabilityTable stability_probe(std::span<const Point2> p, std::span<const Point2> a,
                                             const ConvexRegion& x, std::vector<double> deltas,
                                             int trials, int grid_resolution, std::uint64_t seed);

struct JumpLevel {
    int directions = 0;
    double max_jump = 0.0;  // largest adjacent-direction |T_i - T_{i+1}|
};

struct JumpReport {
    std::vector<JumpLevel> levels;
    double threshold = 0.0;
    double stabilized_jump = 0.0;  // last level's max_jump
    std::string verdict;           // "continuous", "jump", or "inconclusive"
};

/// Scans the fan radius T(theta, p) for direction discontinuities: recomputes
/// the fan at base_directions, doubled, doubled again (doublings >= 2 extra
/// levels), tracking the largest adjacent |Delta T| per level. A genuine
/// discontinuity keeps that gap pinned while refinement shrinks everything
/// else. Verdict "continuous" when each doubling shrinks the gap to <= 0.75
/// of the previous level (plus bisection slack), "jump" when the gap
/// stabilizes at or above the threshold (default: a quarter of the region
/// diameter), "inconclusive" otherwise.
[[nodiscard]] JumpReport t_jump_scan(Point2 p, const DistanceField& dist_to_rival,
                                     const ConvexRegion& x, int base_directions, int doublings,
                                     double bisect_tol, double threshold = 0.0);

/// Bit-exact raster check of dom(P1 u ... u Pn, A) == union of dom(Pi, A).
/// The identity is exact in any metric space, so any mismatch is an
/// implementation bug, not a tolerance issue.
[[nodiscard]] bool decomposition_check(const std::vector<std::vector<Point2>>& parts,
                                       std::span<const Point2> a, const ConvexRegion& x,
                                       int resolution);

}  // namespace zonekit
