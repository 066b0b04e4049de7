#pragma once

#include <vector>

#include "zonekit/norms.hpp"

namespace zonekit {

/// Static kd-tree over a point cloud, queried for nearest-neighbor distances
/// under any l_p norm. Axis pruning is valid for every p >= 1 because the
/// per-axis gap never exceeds the l_p distance; each node also carries its
/// subtree bounding box, so a search entering a hopeless region backs out
/// after one clamp-and-measure instead of walking to a leaf.
class PointIndex {
public:
    PointIndex() = default;
    explicit PointIndex(std::vector<Point2> points);

    /// Distance from q to the nearest stored point (inf when empty).
    [[nodiscard]] double nearest(Point2 q, const LpNorm& n) const;

    /// Bounded query: returns min(true nearest distance, upper). The bound
    /// lets the search prune hard when the caller only needs a comparison
    /// against a threshold or already holds a better candidate.
    [[nodiscard]] double nearest(Point2 q, const LpNorm& n, double upper) const;

    [[nodiscard]] std::size_t size() const { return points_.size(); }
    [[nodiscard]] const std::vector<Point2>& points() const { return points_; }

private:
    struct NodeBox {
        double xlo, xhi, ylo, yhi;
    };

    void build(std::size_t lo, std::size_t hi, int axis);
    void query(std::size_t lo, std::size_t hi, int axis, Point2 q, const LpNorm& n,
               double& best) const;

    std::vector<Point2> points_;  // median-reordered in place
    std::vector<NodeBox> boxes_;  // subtree bounds, indexed by the node's median slot
};

}  // namespace zonekit
