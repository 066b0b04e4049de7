#pragma once

#include <string>
#include <vector>

#include "zonekit/dominance.hpp"
#include "zonekit/sites.hpp"

namespace zonekit {

/// Knobs for the fan construction and the fixed-point iteration. Zeroed
/// fields resolve to the region-scaled defaults.
struct IterationConfig {
    int directions = 720;
    double bisect_tol = 0.0;   // 0 -> 1e-6 * diameter(X)
    double cloud_pitch = 0.0;  // 0 -> diameter(X) / 1000
    double eps = 0.0;          // 0 -> 4 * cloud_pitch
    int max_iter = 64;
    int site_m = 50;

    [[nodiscard]] IterationConfig resolved(const ConvexRegion& x) const;
};

struct ZoneState {
    std::vector<CellFan> cells;
};

/// Voronoi diagram as ray fans: cell k is dom(P_k, union of the rival sites'
/// points). Also the seed S^0 of the iteration.
[[nodiscard]] ZoneState voronoi(const SiteSystem& sys, const ConvexRegion& x,
                                const IterationConfig& cfg, const DirectionTable& dirs);

/// One application of the Dom mapping: every cell recomputed against the
/// union of the rival cells' sample clouds.
[[nodiscard]] ZoneState dom_map(const ZoneState& state, const SiteSystem& sys,
                                const ConvexRegion& x, const IterationConfig& cfg,
                                const DirectionTable& dirs);

struct IterationTrace {
    std::vector<ZoneState> trajectory;  // S^0 = Voronoi first
    std::vector<double> steps;          // uniform Hausdorff between consecutive states
    std::string verdict;                // "converged" or "budget-exhausted"
    double residual = 0.0;              // uniform Hausdorff of one more Dom application
};

/// Picard iteration S^{n+1} = Dom(S^n) from the Voronoi seed, stopping when
/// the uniform Hausdorff step drops to eps or the epoch budget runs out.
[[nodiscard]] IterationTrace iterate(const SiteSystem& sys, const ConvexRegion& x,
                                     const IterationConfig& cfg, const DirectionTable& dirs);

[[nodiscard]] double fixed_point_residual(const ZoneState& state, const SiteSystem& sys,
                                          const ConvexRegion& x, const IterationConfig& cfg,
                                          const DirectionTable& dirs);

struct BracketingLink {
    int from_epoch = 0;
    int to_epoch = 0;
    double excess = 0.0;  // directed excess of S^from over S^to
    bool ok = false;
};

struct BracketingReport {
    std::vector<BracketingLink> links;
    double tolerance = 0.0;
    [[nodiscard]] bool all_ok() const;
};

/// The squared mapping is monotone, so the trajectory interleaves:
/// S^1 c S^3 c S^5 c ... c S^4 c S^2 c S^0 (odd epochs ascend, even epochs
/// descend, bridged at the far end). Verifies every inclusion link in cloud
/// form: the one-sided excess of the smaller state over the larger must stay
/// within tol.
[[nodiscard]] BracketingReport bracketing_check(const std::vector<ZoneState>& trajectory,
                                                const DirectionTable& dirs, double h,
                                                const LpNorm& n, double tol);

}  // namespace zonekit
