#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "zonekit/norms.hpp"
#include "zonekit/point_index.hpp"
#include "zonekit/region.hpp"

namespace zonekit {

/// Distance to the rival set, d(., A). Must be positive at every anchor a
/// fan is grown from. As a set distance it is 1-Lipschitz in the scene norm;
/// reach leans on that, so a field that is not a genuine distance must still
/// satisfy |f(q1) - f(q2)| <= n(q1 - q2).
using DistanceField = std::function<double(Point2)>;

/// Same field with a caller-supplied upper bound: the returned value must be
/// exact whenever it lies below the bound, and may be anything >= the true
/// value otherwise (an index query seeded with the bound does exactly this).
/// reach derives the bounds it passes from the Lipschitz property.
using BoundedField = std::function<double(Point2, double)>;

/// Dominance region stored as a ray fan: segments [p, p + T*theta] for each
/// anchor p and table direction theta. radii is indexed [anchor][direction]
/// and stays aligned with the direction table it was built against.
struct CellFan {
    std::vector<Point2> anchors;
    std::vector<std::vector<double>> radii;
    double sample_spacing = 0.0;
};

/// Boolean raster over the bounding box of X, row-major with iy*resolution+ix,
/// cell (ix, iy) covering the obvious subsquare and tested at its center.
struct GridMask {
    int resolution = 0;
    Point2 box_min{};
    Point2 box_max{};
    std::vector<std::uint8_t> bits;

    [[nodiscard]] bool at(int ix, int iy) const {
        return bits[static_cast<std::size_t>(iy) * resolution + ix] != 0;
    }
    [[nodiscard]] Point2 cell_center(int ix, int iy) const;
    [[nodiscard]] std::size_t count_true() const;
    [[nodiscard]] std::string to_pgm() const;

    friend bool operator==(const GridMask&, const GridMask&) = default;
};

/// T(theta, p): how far dominance over the rival set extends from p along
/// theta. The member set {t : t <= d(p + t*theta, A)} is an interval [0, T]
/// (segment lemma), so after the endpoint checks a plain bisection brackets T
/// to within tol. dist_to_rival(p) must be positive; the result is clamped to
/// the chord [0, ray_exit].
[[nodiscard]] double reach(Point2 p, const Direction& th, const DistanceField& dist_to_rival,
                           const ConvexRegion& x, double tol);
[[nodiscard]] double reach(Point2 p, const Direction& th, const BoundedField& dist_to_rival,
                           const ConvexRegion& x, double tol);

/// Fans reach over every (anchor, direction) pair; parallel over pairs.
[[nodiscard]] CellFan dom_fan(std::span<const Point2> site, const DistanceField& dist_to_rival,
                              const ConvexRegion& x, const DirectionTable& dirs, double tol);
[[nodiscard]] CellFan dom_fan(std::span<const Point2> site, const BoundedField& dist_to_rival,
                              const ConvexRegion& x, const DirectionTable& dirs, double tol);

/// Independent brute-force oracle: an n-by-n raster of the dominance
/// predicate d(c, P) <= d(c, A) + 1e-12 at cell centers inside X. Shares no
/// code path with reach/dom_fan beyond the norm itself.
[[nodiscard]] GridMask dom_grid_oracle(std::span<const Point2> p, std::span<const Point2> a,
                                       const ConvexRegion& x, int resolution);

/// Rasterizes a fan by angular interpolation of the radii; slack inflates the
/// interpolated radius before the comparison.
[[nodiscard]] GridMask fan_mask(const CellFan& fan, const DirectionTable& dirs,
                                const ConvexRegion& x, int resolution, double slack = 0.0);

/// Flattens a fan to sample points: every anchor once, then t = h, 2h, ...
/// strictly below T plus the tip T itself, per direction. Deterministic order.
[[nodiscard]] std::vector<Point2> fan_point_cloud(const CellFan& fan, const DirectionTable& dirs,
                                                  double h);

/// Fan flattened to a cloud plus a kd-tree for distance queries against it.
class FanCloud {
public:
    FanCloud(const CellFan& fan, const DirectionTable& dirs, double h, const LpNorm& n);

    [[nodiscard]] double distance_to(Point2 q) const;
    [[nodiscard]] double distance_to(Point2 q, double upper) const;
    [[nodiscard]] const std::vector<Point2>& points() const { return index_.points(); }
    [[nodiscard]] const LpNorm& norm_ref() const { return norm_; }
    [[nodiscard]] double pitch() const { return pitch_; }

private:
    PointIndex index_;
    LpNorm norm_;
    double pitch_;
};

/// Convenience one-shot d(x, cloud(fan)); builds the cloud on every call, so
/// loops should hold a FanCloud instead.
[[nodiscard]] double dist_to_fan(Point2 x, const CellFan& fan, const DirectionTable& dirs,
                                 double h, const LpNorm& n);

[[nodiscard]] double directed_hausdorff(std::span<const Point2> a, std::span<const Point2> b,
                                        const LpNorm& n);
[[nodiscard]] double hausdorff(std::span<const Point2> a, std::span<const Point2> b,
                               const LpNorm& n);

/// Directed Hausdorff excess sup_{x in cloud(a)} d(x, cloud(b)) for two fans
/// sharing anchors and direction table. Exact, but far cheaper than the
/// generic cloud query: sample parameters are the same h-grid on both sides,
/// so points with a same-parameter partner contribute zero and only tip
/// neighborhoods need index queries, seeded with the on-ray distance bound.
[[nodiscard]] double fan_directed_excess(const CellFan& a, const CellFan& b,
                                         const DirectionTable& dirs, double h,
                                         const FanCloud& b_cloud);

[[nodiscard]] double fan_hausdorff(const CellFan& a, const CellFan& b, const DirectionTable& dirs,
                                   double h, const FanCloud& a_cloud, const FanCloud& b_cloud);

/// Centers of true cells that touch the mask boundary: a false 4-neighbor or
/// the raster edge.
[[nodiscard]] std::vector<Point2> mask_boundary(const GridMask& mask);

}  // namespace zonekit
