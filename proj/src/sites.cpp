#include "zonekit/sites.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "zonekit/errors.hpp"

namespace zonekit {

namespace {

void append_segment(std::vector<Point2>& out, Point2 a, Point2 b, int m, const LpNorm& n) {
    const double len = distance(a, b, n);
    // k subintervals with spacing len/k strictly below 2/m puts every segment
    // point within 1/m of a sample.
    const int k = static_cast<int>(std::floor(len * m / 2.0)) + 1;
    for (int i = 0; i <= k; ++i) {
        // Endpoints must stay bit-exact; a + 1.0 * (b - a) can round away from b.
        const Point2 q = (i == k) ? b : a + (static_cast<double>(i) / k) * (b - a);
        if (!out.empty() && out.back() == q) continue;
        out.push_back(q);
    }
}

void append_arc(std::vector<Point2>& out, Point2 c, double r, double a0, double a1,
                double chord_cap, const LpNorm& n, int depth) {
    const Point2 p0 = c + r * Point2{std::cos(a0), std::sin(a0)};
    const Point2 p1 = c + r * Point2{std::cos(a1), std::sin(a1)};
    if (depth > 40 || (a1 - a0) < 1e-9 || distance(p0, p1, n) <= chord_cap) {
        if (out.empty() || !(out.back() == p0)) out.push_back(p0);
        return;
    }
    const double mid = 0.5 * (a0 + a1);
    append_arc(out, c, r, a0, mid, chord_cap, n, depth + 1);
    append_arc(out, c, r, mid, a1, chord_cap, n, depth + 1);
}

// Circle samples with adjacent l_p chords at most chord_cap.
std::vector<Point2> circle_samples(Point2 c, double r, double chord_cap, const LpNorm& n) {
    std::vector<Point2> out;
    const double two_pi = 2.0 * std::numbers::pi;
    const int coarse = 64;
    for (int i = 0; i < coarse; ++i) {
        append_arc(out, c, r, two_pi * i / coarse, two_pi * (i + 1) / coarse, chord_cap, n, 0);
    }
    return out;
}

std::vector<Point2> discretize_ball(Point2 c, double r, int m, const LpNorm& n) {
    std::vector<Point2> out = circle_samples(c, r, 0.8 / m, n);
    // Interior grid with cell half-diagonal at most 1/(2m): an interior point
    // is within 1/(2m) of a kept node, or so close to the boundary that the
    // circle samples cover it.
    const double half_diag_unit = n(Point2{0.5, 0.5});  // 2^(1/p)/2
    const double pitch = 1.0 / (2.0 * m * half_diag_unit);
    const int span = static_cast<int>(std::ceil(r / pitch));
    for (int iy = -span; iy <= span; ++iy) {
        for (int ix = -span; ix <= span; ++ix) {
            const Point2 q{c.x + ix * pitch, c.y + iy * pitch};
            if (distance(q, c, n) <= r) out.push_back(q);
        }
    }
    return out;
}

}  // namespace

std::vector<Point2> discretize_site(const SiteSpec& spec, int m, const LpNorm& n) {
    if (m < 1) throw ValidationError("site_m: must be a positive integer");
    std::vector<Point2> out;

    if (const auto* pts = std::get_if<PointsSite>(&spec)) {
        if (pts->points.empty()) throw ValidationError("site: empty point list");
        out = pts->points;
    } else if (const auto* seg = std::get_if<SegmentSite>(&spec)) {
        append_segment(out, seg->a, seg->b, m, n);
    } else if (const auto* poly = std::get_if<PolylineSite>(&spec)) {
        if (poly->points.size() < 2) {
            throw ValidationError("site: a polyline needs at least 2 points");
        }
        for (std::size_t i = 0; i + 1 < poly->points.size(); ++i) {
            append_segment(out, poly->points[i], poly->points[i + 1], m, n);
        }
    } else if (const auto* ring = std::get_if<BallBoundarySite>(&spec)) {
        if (!(ring->radius > 0.0)) throw ValidationError("site: ball_boundary radius must be positive");
        out = circle_samples(ring->center, ring->radius, 1.0 / m, n);
    } else if (const auto* ball = std::get_if<BallSite>(&spec)) {
        if (!(ball->radius > 0.0)) throw ValidationError("site: ball radius must be positive");
        out = discretize_ball(ball->center, ball->radius, m, n);
    }

    if (out.empty()) throw InternalError("discretize_site: produced no samples");
    return out;
}

SiteSystem validate_system(const std::vector<SiteSpec>& specs, const ConvexRegion& x, int m,
                           const LpNorm& n) {
    if (specs.size() < 2) throw ValidationError("sites: at least 2 sites are required");

    SiteSystem sys;
    sys.discretization_error = 1.0 / m;
    sys.sites.reserve(specs.size());
    for (std::size_t k = 0; k < specs.size(); ++k) {
        std::vector<Point2> pts = discretize_site(specs[k], m, n);
        for (const Point2& q : pts) {
            if (!x.contains(q)) {
                throw ValidationError("site " + std::to_string(k) + ": point (" +
                                      std::to_string(q.x) + ", " + std::to_string(q.y) +
                                      ") lies outside the region");
            }
        }
        sys.sites.push_back(std::move(pts));
    }

    double sep = std::numeric_limits<double>::infinity();
    std::size_t sep_j = 0, sep_k = 1;
    for (std::size_t j = 0; j < sys.sites.size(); ++j) {
        for (std::size_t k = j + 1; k < sys.sites.size(); ++k) {
            const double d = set_set_distance(sys.sites[j], sys.sites[k], n);
            if (d < sep) {
                sep = d;
                sep_j = j;
                sep_k = k;
            }
        }
    }
    sys.separation = sep;

    const auto pair_name = std::to_string(sep_j) + "," + std::to_string(sep_k);
    if (!(sep > 0.0)) {
        throw ValidationError("sites " + pair_name + " not disjoint");
    }
    if (sep <= 2.0 * sys.discretization_error) {
        throw ValidationError("sites " + pair_name + ": separation " + std::to_string(sep) +
                              " is not clearly above twice the discretization error 1/m; raise site_m");
    }
    return sys;
}

}  // namespace zonekit
