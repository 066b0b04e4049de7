#include "zonekit/dominance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "zonekit/errors.hpp"
#include "zonekit/parallel.hpp"

namespace zonekit {

Point2 GridMask::cell_center(int ix, int iy) const {
    const double fx = (ix + 0.5) / resolution;
    const double fy = (iy + 0.5) / resolution;
    return {box_min.x + fx * (box_max.x - box_min.x), box_min.y + fy * (box_max.y - box_min.y)};
}

std::size_t GridMask::count_true() const {
    std::size_t c = 0;
    for (const auto b : bits) c += (b != 0);
    return c;
}

std::string GridMask::to_pgm() const {
    std::string out = "P5\n" + std::to_string(resolution) + " " + std::to_string(resolution) +
                      "\n255\n";
    out.reserve(out.size() + bits.size());
    for (int iy = resolution - 1; iy >= 0; --iy) {
        for (int ix = 0; ix < resolution; ++ix) {
            out.push_back(at(ix, iy) ? static_cast<char>(255) : static_cast<char>(0));
        }
    }
    return out;
}

namespace {

template <class FieldT>
double reach_core(Point2 p, const Direction& th, const FieldT& dist_to_rival,
                  const ConvexRegion& x, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("reach: tol must be positive");
    const double chord = x.ray_exit(p, th);
    const double at_anchor = dist_to_rival(p, std::numeric_limits<double>::infinity());
    if (!(at_anchor > 0.0)) {
        throw InternalError("reach: rival distance is zero at the anchor");
    }
    if (chord <= 0.0) return 0.0;

    // Lipschitz cache along the ray: th.vector is unit in the scene norm, so
    // the field value at parameter t differs from the cached value at
    // parameter s by at most |t - s|. Probes outside that window resolve
    // without touching the field; the rest carry a tight upper bound into the
    // query. The pad keeps rounding noise from flipping a shortcut answer.
    double cached_t = 0.0;
    double cached_val = at_anchor;
    auto holds = [&](double t) {
        const double drift = std::fabs(t - cached_t);
        const double pad = 1e-9 * (1.0 + drift + cached_val);
        if (t <= cached_val - drift - pad) return true;
        if (t > cached_val + drift + pad) return false;
        const double val = dist_to_rival(p + t * th.vector, cached_val + drift + pad);
        cached_t = t;
        cached_val = val;
        return t <= val;
    };
    if (holds(chord)) return chord;

    // holds is true at 0, false at chord, and downward closed in t, so the
    // switch point is bracketed and bisection converges unconditionally.
    double lo = 0.0;
    double hi = chord;
    for (int i = 0; i < 40 && (hi - lo) > 0.5 * tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        (holds(mid) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

template <class FieldT>
CellFan dom_fan_impl(std::span<const Point2> site, const FieldT& dist_to_rival,
                     const ConvexRegion& x, const DirectionTable& dirs, double tol) {
    if (site.empty()) throw std::invalid_argument("dom_fan: empty site");
    if (dirs.empty()) throw std::invalid_argument("dom_fan: empty direction table");

    CellFan fan;
    fan.anchors.assign(site.begin(), site.end());
    fan.radii.assign(site.size(), std::vector<double>(dirs.size(), 0.0));

    const std::size_t per = dirs.size();
    parallel_for(site.size() * per, [&](std::size_t idx) {
        const std::size_t a = idx / per;
        const std::size_t i = idx % per;
        fan.radii[a][i] = reach_core(fan.anchors[a], dirs[i], dist_to_rival, x, tol);
    });
    return fan;
}

}  // namespace

double reach(Point2 p, const Direction& th, const DistanceField& dist_to_rival,
             const ConvexRegion& x, double tol) {
    auto plain = [&dist_to_rival](Point2 q, double) { return dist_to_rival(q); };
    return reach_core(p, th, plain, x, tol);
}

double reach(Point2 p, const Direction& th, const BoundedField& dist_to_rival,
             const ConvexRegion& x, double tol) {
    return reach_core(p, th, dist_to_rival, x, tol);
}

CellFan dom_fan(std::span<const Point2> site, const DistanceField& dist_to_rival,
                const ConvexRegion& x, const DirectionTable& dirs, double tol) {
    auto plain = [&dist_to_rival](Point2 q, double) { return dist_to_rival(q); };
    return dom_fan_impl(site, plain, x, dirs, tol);
}

CellFan dom_fan(std::span<const Point2> site, const BoundedField& dist_to_rival,
                const ConvexRegion& x, const DirectionTable& dirs, double tol) {
    return dom_fan_impl(site, dist_to_rival, x, dirs, tol);
}

GridMask dom_grid_oracle(std::span<const Point2> p, std::span<const Point2> a,
                         const ConvexRegion& x, int resolution) {
    if (resolution < 2) throw std::invalid_argument("dom_grid_oracle: resolution must be >= 2");
    GridMask mask;
    mask.resolution = resolution;
    mask.box_min = x.bbox_min();
    mask.box_max = x.bbox_max();
    mask.bits.assign(static_cast<std::size_t>(resolution) * resolution, 0);

    const LpNorm& n = x.norm_ref();
    parallel_for(static_cast<std::size_t>(resolution), [&](std::size_t iy) {
        for (int ix = 0; ix < resolution; ++ix) {
            const Point2 c = mask.cell_center(ix, static_cast<int>(iy));
            if (!x.contains(c)) continue;
            if (set_distance(c, p, n) <= set_distance(c, a, n) + 1e-12) {
                mask.bits[iy * resolution + ix] = 1;
            }
        }
    });
    return mask;
}

GridMask fan_mask(const CellFan& fan, const DirectionTable& dirs, const ConvexRegion& x,
                  int resolution, double slack) {
    if (resolution < 2) throw std::invalid_argument("fan_mask: resolution must be >= 2");
    GridMask mask;
    mask.resolution = resolution;
    mask.box_min = x.bbox_min();
    mask.box_max = x.bbox_max();
    mask.bits.assign(static_cast<std::size_t>(resolution) * resolution, 0);

    const LpNorm& n = x.norm_ref();
    const std::size_t m = dirs.size();
    const double step = 2.0 * std::numbers::pi / static_cast<double>(m);

    parallel_for(static_cast<std::size_t>(resolution), [&](std::size_t iy) {
        for (int ix = 0; ix < resolution; ++ix) {
            const Point2 c = mask.cell_center(ix, static_cast<int>(iy));
            if (!x.contains(c)) continue;
            bool inside = false;
            for (std::size_t av = 0; av < fan.anchors.size() && !inside; ++av) {
                const Point2 d = c - fan.anchors[av];
                const double t = n(d);
                if (t <= 1e-15) {
                    inside = true;
                    break;
                }
                double ang = std::atan2(d.y, d.x);
                if (ang < 0.0) ang += 2.0 * std::numbers::pi;
                const double u = ang / step;
                const auto i0 = static_cast<std::size_t>(u) % m;
                const double frac = u - std::floor(u);
                const double radius =
                    (1.0 - frac) * fan.radii[av][i0] + frac * fan.radii[av][(i0 + 1) % m];
                inside = t <= radius + slack;
            }
            if (inside) mask.bits[iy * resolution + ix] = 1;
        }
    });
    return mask;
}

std::vector<Point2> fan_point_cloud(const CellFan& fan, const DirectionTable& dirs, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("fan_point_cloud: pitch must be positive");
    std::vector<Point2> cloud;
    std::size_t estimate = fan.anchors.size();
    for (const auto& row : fan.radii) {
        for (const double t : row) estimate += static_cast<std::size_t>(t / h) + 1;
    }
    cloud.reserve(estimate);

    for (const Point2& p : fan.anchors) cloud.push_back(p);
    for (std::size_t a = 0; a < fan.anchors.size(); ++a) {
        const Point2 p = fan.anchors[a];
        for (std::size_t i = 0; i < dirs.size(); ++i) {
            const double t = fan.radii[a][i];
            if (t <= 0.0) continue;
            const Point2 v = dirs[i].vector;
            for (double k = 1.0; k * h < t - 1e-9 * h; k += 1.0) {
                cloud.push_back(p + (k * h) * v);
            }
            cloud.push_back(p + t * v);
        }
    }
    return cloud;
}

FanCloud::FanCloud(const CellFan& fan, const DirectionTable& dirs, double h, const LpNorm& n)
    : index_(fan_point_cloud(fan, dirs, h)), norm_(n), pitch_(h) {}

double FanCloud::distance_to(Point2 q) const { return index_.nearest(q, norm_); }

double FanCloud::distance_to(Point2 q, double upper) const {
    return index_.nearest(q, norm_, upper);
}

double dist_to_fan(Point2 x, const CellFan& fan, const DirectionTable& dirs, double h,
                   const LpNorm& n) {
    return FanCloud(fan, dirs, h, n).distance_to(x);
}

double directed_hausdorff(std::span<const Point2> a, std::span<const Point2> b, const LpNorm& n) {
    if (a.empty() || b.empty()) throw std::invalid_argument("hausdorff: empty cloud");
    double worst = 0.0;
    if (b.size() > 64) {
        const PointIndex index(std::vector<Point2>(b.begin(), b.end()));
        for (const Point2& q : a) worst = std::max(worst, index.nearest(q, n));
    } else {
        for (const Point2& q : a) worst = std::max(worst, set_distance(q, b, n));
    }
    return worst;
}

double hausdorff(std::span<const Point2> a, std::span<const Point2> b, const LpNorm& n) {
    return std::max(directed_hausdorff(a, b, n), directed_hausdorff(b, a, n));
}

double fan_directed_excess(const CellFan& a, const CellFan& b, const DirectionTable& dirs,
                           double h, const FanCloud& b_cloud) {
    if (a.anchors.size() != b.anchors.size()) {
        throw InternalError("fan_directed_excess: fans do not share anchors");
    }
    const double tip_guard = 1e-9 * h;
    double worst = 0.0;

    for (std::size_t av = 0; av < a.anchors.size(); ++av) {
        const Point2 p = a.anchors[av];
        if (!(p == b.anchors[av])) {
            throw InternalError("fan_directed_excess: fans do not share anchors");
        }
        for (std::size_t i = 0; i < dirs.size(); ++i) {
            const double ta = a.radii[av][i];
            if (ta <= 0.0) continue;
            const double tb = b.radii[av][i];
            const Point2 v = dirs[i].vector;

            // b's samples on this ray sit at {0, h, ..., kb*h} plus the tip
            // tb, so any a-sample at a multiple of h up to kb*h has an exact
            // partner and contributes nothing.
            const double kb = std::max(0.0, std::ceil((tb - tip_guard) / h) - 1.0);
            auto on_ray_bound = [&](double t) {
                const double k0 = std::clamp(std::floor(t / h), 0.0, kb);
                const double k1 = std::clamp(k0 + 1.0, 0.0, kb);
                double bound = std::min(std::fabs(t - k0 * h), std::fabs(t - k1 * h));
                bound = std::min(bound, std::fabs(t - tb));
                return bound;
            };
            auto probe = [&](double t) {
                const double upper = on_ray_bound(t) + 1e-12 + 1e-9 * h;
                worst = std::max(worst, b_cloud.distance_to(p + t * v, upper));
            };

            for (double k = kb + 1.0; k * h < ta - tip_guard; k += 1.0) probe(k * h);
            probe(ta);
        }
    }
    return worst;
}

double fan_hausdorff(const CellFan& a, const CellFan& b, const DirectionTable& dirs, double h,
                     const FanCloud& a_cloud, const FanCloud& b_cloud) {
    return std::max(fan_directed_excess(a, b, dirs, h, b_cloud),
                    fan_directed_excess(b, a, dirs, h, a_cloud));
}

std::vector<Point2> mask_boundary(const GridMask& mask) {
    std::vector<Point2> out;
    const int n = mask.resolution;
    for (int iy = 0; iy < n; ++iy) {
        for (int ix = 0; ix < n; ++ix) {
            if (!mask.at(ix, iy)) continue;
            const bool edge = ix == 0 || iy == 0 || ix == n - 1 || iy == n - 1;
            if (edge || !mask.at(ix - 1, iy) || !mask.at(ix + 1, iy) || !mask.at(ix, iy - 1) ||
                !mask.at(ix, iy + 1)) {
                out.push_back(mask.cell_center(ix, iy));
            }
        }
    }
    return out;
}

}  // namespace zonekit
