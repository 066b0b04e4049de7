#include "zonekit/point_index.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace zonekit {

PointIndex::PointIndex(std::vector<Point2> points) : points_(std::move(points)) {
    if (!points_.empty()) {
        boxes_.resize(points_.size());
        build(0, points_.size(), 0);
    }
}

void PointIndex::build(std::size_t lo, std::size_t hi, int axis) {
    if (hi <= lo) return;
    const std::size_t mid = lo + (hi - lo) / 2;
    if (hi - lo <= 1) {
        const Point2& p = points_[mid];
        boxes_[mid] = {p.x, p.x, p.y, p.y};
        return;
    }
    auto key = [axis](const Point2& p) { return axis == 0 ? p.x : p.y; };
    std::nth_element(points_.begin() + lo, points_.begin() + mid, points_.begin() + hi,
                     [&](const Point2& a, const Point2& b) { return key(a) < key(b); });
    build(lo, mid, 1 - axis);
    build(mid + 1, hi, 1 - axis);

    NodeBox b{points_[mid].x, points_[mid].x, points_[mid].y, points_[mid].y};
    auto grow = [&b](const NodeBox& c) {
        b.xlo = std::min(b.xlo, c.xlo);
        b.xhi = std::max(b.xhi, c.xhi);
        b.ylo = std::min(b.ylo, c.ylo);
        b.yhi = std::max(b.yhi, c.yhi);
    };
    if (lo < mid) grow(boxes_[lo + (mid - lo) / 2]);
    if (mid + 1 < hi) grow(boxes_[mid + 1 + (hi - mid - 1) / 2]);
    boxes_[mid] = b;
}

void PointIndex::query(std::size_t lo, std::size_t hi, int axis, Point2 q, const LpNorm& n,
                       double& best) const {
    if (lo >= hi) return;
    const std::size_t mid = lo + (hi - lo) / 2;

    // Clamping q into the subtree box gives a norm lower bound for every
    // point below this node; a hopeless subtree costs one measurement.
    const NodeBox& box = boxes_[mid];
    const Point2 clamped{std::clamp(q.x, box.xlo, box.xhi), std::clamp(q.y, box.ylo, box.yhi)};
    if (n(q - clamped) >= best) return;

    const Point2& node = points_[mid];
    best = std::min(best, n(q - node));

    const double split = axis == 0 ? node.x : node.y;
    const double qv = axis == 0 ? q.x : q.y;
    const double gap = std::fabs(qv - split);

    if (qv < split) {
        query(lo, mid, 1 - axis, q, n, best);
        if (gap < best) query(mid + 1, hi, 1 - axis, q, n, best);
    } else {
        query(mid + 1, hi, 1 - axis, q, n, best);
        if (gap < best) query(lo, mid, 1 - axis, q, n, best);
    }
}

double PointIndex::nearest(Point2 q, const LpNorm& n) const {
    return nearest(q, n, std::numeric_limits<double>::infinity());
}

double PointIndex::nearest(Point2 q, const LpNorm& n, double upper) const {
    double best = upper;
    if (!points_.empty()) query(0, points_.size(), 0, q, n, best);
    return best;
}

}  // namespace zonekit
