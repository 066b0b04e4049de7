#pragma once

#include <vector>

#include "zonekit/norms.hpp"

namespace zonekit {

/// Unit vector under the active norm, tagged with the angle that generated it.
struct Direction {
    Point2 vector;
    double angle = 0.0;
};

using DirectionTable = std::vector<Direction>;

[[nodiscard]] Direction make_direction(double angle, const LpNorm& n);

/// count directions at angles 2*pi*i/count, each normalized to unit l_p
/// length. count must be at least 4.
[[nodiscard]] DirectionTable sample_directions(const LpNorm& n, int count);

/// Compact convex subset X of the plane: a convex CCW polygon or an l_p ball
/// under the active norm. Membership and ray_exit are computed against the
/// same slightly inflated boundary (slack 1e-9), so along any ray from an
/// interior point the member set {t : p + t*dir in X} is exactly [0, ray_exit].
class ConvexRegion {
public:
    static ConvexRegion polygon(std::vector<Point2> vertices, const LpNorm& n);
    static ConvexRegion ball(Point2 center, double radius, const LpNorm& n);

    [[nodiscard]] bool contains(Point2 x) const;

    /// Largest t with p + t*th.vector still in X; p must be in X.
    [[nodiscard]] double ray_exit(Point2 p, const Direction& th) const;

    [[nodiscard]] double diameter() const { return diameter_; }
    [[nodiscard]] const LpNorm& norm_ref() const { return norm_; }
    [[nodiscard]] Point2 bbox_min() const { return bbox_min_; }
    [[nodiscard]] Point2 bbox_max() const { return bbox_max_; }

    [[nodiscard]] bool is_polygon() const { return !vertices_.empty(); }
    [[nodiscard]] const std::vector<Point2>& vertices() const { return vertices_; }
    [[nodiscard]] Point2 ball_center() const { return center_; }
    [[nodiscard]] double ball_radius() const { return radius_; }

private:
    explicit ConvexRegion(const LpNorm& n) : norm_(n) {}

    LpNorm norm_;
    std::vector<Point2> vertices_;      // empty for balls
    std::vector<Point2> edge_normals_;  // unit l_2 outward normals, one per edge
    std::vector<double> edge_offsets_;  // edge plane offsets n_i . v_i
    Point2 center_{};
    double radius_ = 0.0;
    Point2 bbox_min_{};
    Point2 bbox_max_{};
    double diameter_ = 0.0;
};

struct EmanationViolation {
    int index = 0;  // direction index on the longer side of the drop
    double angle = 0.0;
    double drop = 0.0;
};

struct EmanationReport {
    std::vector<EmanationViolation> violations;
    double largest_drop = 0.0;
    [[nodiscard]] bool clean() const { return violations.empty(); }
};

/// Numeric scan for evidence against lower semicontinuity of the chord length
/// L(theta) = ray_exit(p, theta): adjacent sampled directions, both with
/// positive chord, whose lengths differ by more than eps while the angular gap
/// stays below beta_min (default: twice the sampling step). Both rotation
/// senses are scanned. A clean report means no evidence at this resolution,
/// not a proof.
[[nodiscard]] EmanationReport emanation_scan(const ConvexRegion& x, Point2 p, int directions,
                                             double eps, double beta_min = 0.0);

}  // namespace zonekit
