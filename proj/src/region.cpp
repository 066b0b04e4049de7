#include "zonekit/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "zonekit/errors.hpp"

namespace zonekit {

namespace {

// Shared boundary slack: membership and ray exits reference the same
// inflated region, which is what makes them mutually consistent.
constexpr double kBoundarySlack = 1e-9;

}  // namespace

Direction make_direction(double angle, const LpNorm& n) {
    Point2 v{std::cos(angle), std::sin(angle)};
    // Snap near-zero components so axis directions are exact.
    if (std::fabs(v.x) < 1e-15) v.x = 0.0;
    if (std::fabs(v.y) < 1e-15) v.y = 0.0;
    const double len = n(v);
    Direction d{v * (1.0 / len), angle};
    if (std::fabs(n(d.vector) - 1.0) > 1e-12) {
        throw InternalError("make_direction: normalization failed");
    }
    return d;
}

DirectionTable sample_directions(const LpNorm& n, int count) {
    if (count < 4) throw std::invalid_argument("sample_directions: count must be >= 4");
    DirectionTable table;
    table.reserve(count);
    for (int i = 0; i < count; ++i) {
        table.push_back(make_direction(2.0 * std::numbers::pi * i / count, n));
    }
    return table;
}

ConvexRegion ConvexRegion::polygon(std::vector<Point2> vertices, const LpNorm& n) {
    if (vertices.size() < 3) {
        throw ValidationError("region.vertices: a polygon needs at least 3 vertices");
    }
    const std::size_t k = vertices.size();
    for (std::size_t i = 0; i < k; ++i) {
        const Point2 a = vertices[i];
        const Point2 b = vertices[(i + 1) % k];
        const Point2 c = vertices[(i + 2) % k];
        if (cross(b - a, c - b) <= 0.0) {
            throw ValidationError(
                "region.vertices: must be strictly convex in counterclockwise order");
        }
    }

    ConvexRegion r(n);
    r.vertices_ = std::move(vertices);
    r.edge_normals_.reserve(k);
    r.edge_offsets_.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        const Point2 v = r.vertices_[i];
        const Point2 w = r.vertices_[(i + 1) % k];
        const Point2 e = w - v;
        const double len = std::hypot(e.x, e.y);
        const Point2 nrm{e.y / len, -e.x / len};
        r.edge_normals_.push_back(nrm);
        r.edge_offsets_.push_back(dot(nrm, v) + kBoundarySlack);
    }

    double lox = std::numeric_limits<double>::infinity(), loy = lox;
    double hix = -lox, hiy = -lox;
    for (const Point2& v : r.vertices_) {
        lox = std::min(lox, v.x);
        loy = std::min(loy, v.y);
        hix = std::max(hix, v.x);
        hiy = std::max(hiy, v.y);
    }
    r.bbox_min_ = {lox, loy};
    r.bbox_max_ = {hix, hiy};

    // The diameter of a convex polygon is attained at a vertex pair, in any
    // norm.
    double diam = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            diam = std::max(diam, distance(r.vertices_[i], r.vertices_[j], n));
        }
    }
    r.diameter_ = diam;
    return r;
}

ConvexRegion ConvexRegion::ball(Point2 center, double radius, const LpNorm& n) {
    if (!(radius > 0.0)) throw ValidationError("region.radius: must be positive");
    ConvexRegion r(n);
    r.center_ = center;
    r.radius_ = radius;
    r.bbox_min_ = {center.x - radius, center.y - radius};
    r.bbox_max_ = {center.x + radius, center.y + radius};
    r.diameter_ = 2.0 * radius;
    return r;
}

bool ConvexRegion::contains(Point2 x) const {
    if (is_polygon()) {
        for (std::size_t i = 0; i < edge_normals_.size(); ++i) {
            if (dot(edge_normals_[i], x) > edge_offsets_[i]) return false;
        }
        return true;
    }
    return distance(x, center_, norm_) <= radius_ + kBoundarySlack;
}

double ConvexRegion::ray_exit(Point2 p, const Direction& th) const {
    if (!contains(p)) throw std::invalid_argument("ray_exit: base point lies outside the region");

    if (is_polygon()) {
        double t = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < edge_normals_.size(); ++i) {
            const double s = dot(edge_normals_[i], th.vector);
            if (s > 1e-14) {
                t = std::min(t, (edge_offsets_[i] - dot(edge_normals_[i], p)) / s);
            }
        }
        if (!std::isfinite(t)) throw InternalError("ray_exit: unbounded ray in a polygon");
        return std::max(t, 0.0);
    }

    if (norm_.p() == 2.0) {
        const double r_eff = radius_ + kBoundarySlack;
        const Point2 q = p - center_;
        const double a = dot(th.vector, th.vector);
        const double b = 2.0 * dot(q, th.vector);
        const double c = dot(q, q) - r_eff * r_eff;
        const double disc = std::max(0.0, b * b - 4.0 * a * c);
        return std::max(0.0, (-b + std::sqrt(disc)) / (2.0 * a));
    }

    // General l_p ball: the member set along the ray is an interval, so
    // bisect the membership predicate.
    double lo = 0.0;
    double hi = 2.0 * radius_ + 1.0;
    for (int i = 0; i < 80 && (hi - lo) > 1e-10; ++i) {
        const double mid = 0.5 * (lo + hi);
        (contains(p + mid * th.vector) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

EmanationReport emanation_scan(const ConvexRegion& x, Point2 p, int directions, double eps,
                               double beta_min) {
    const DirectionTable table = sample_directions(x.norm_ref(), directions);
    const double beta = 2.0 * std::numbers::pi / directions;
    if (beta_min <= 0.0) beta_min = 2.0 * beta;

    std::vector<double> chord(table.size());
    for (std::size_t i = 0; i < table.size(); ++i) chord[i] = x.ray_exit(p, table[i]);

    const double floor = 1e-9 * std::max(1.0, x.diameter());
    EmanationReport report;
    if (beta >= beta_min) return report;
    for (std::size_t i = 0; i < table.size(); ++i) {
        const std::size_t j = (i + 1) % table.size();
        if (chord[i] <= floor || chord[j] <= floor) continue;
        const double gap = std::fabs(chord[i] - chord[j]);
        report.largest_drop = std::max(report.largest_drop, gap);
        if (gap > eps) {
            const std::size_t hi_side = chord[i] >= chord[j] ? i : j;
            report.violations.push_back(
                {static_cast<int>(hi_side), table[hi_side].angle, gap});
        }
    }
    return report;
}

}  // namespace zonekit
