#pragma once

#include <variant>
#include <vector>

#include "zonekit/norms.hpp"
#include "zonekit/region.hpp"

namespace zonekit {

struct PointsSite {
    std::vector<Point2> points;
};

struct SegmentSite {
    Point2 a;
    Point2 b;
};

struct PolylineSite {
    std::vector<Point2> points;
};

struct BallBoundarySite {
    Point2 center;
    double radius = 0.0;
};

struct BallSite {
    Point2 center;
    double radius = 0.0;
};

using SiteSpec = std::variant<PointsSite, SegmentSite, PolylineSite, BallBoundarySite, BallSite>;

/// Finite sample P_m of the spec's point set with Hausdorff distance
/// D(P_m, P) < 1/m under the active norm. Sampling densities are chosen
/// conservatively (spacing bounds strict, curvature slack for arcs) so the
/// certificate holds with margin.
[[nodiscard]] std::vector<Point2> discretize_site(const SiteSpec& spec, int m, const LpNorm& n);

struct SiteSystem {
    std::vector<std::vector<Point2>> sites;
    double separation = 0.0;            // min cross-pair distance over the discretized sets
    double discretization_error = 0.0;  // the 1/m certificate radius
};

/// Discretizes every spec and checks the admissibility contract: at least two
/// sites, every sample inside X, pairwise separation clear of twice the
/// discretization error. Violations throw ValidationError naming the sites.
[[nodiscard]] SiteSystem validate_system(const std::vector<SiteSpec>& specs, const ConvexRegion& x,
                                         int m, const LpNorm& n);

}  // namespace zonekit
