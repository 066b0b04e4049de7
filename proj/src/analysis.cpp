#include "zonekit/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zonekit/errors.hpp"
#include "zonekit/rng.hpp"

namespace zonekit {

namespace {

// Pulls an escaped jitter target back into X along the segment to its origin
// (which is inside). A segment walk, not a metric projection, but still
// non-expanding: the returned point is on [origin, target], so its distance
// to origin only shrinks.
Point2 clamp_into(Point2 target, Point2 origin, const ConvexRegion& x) {
    if (x.contains(target)) return target;
    double lo = 0.0;
    double hi = 1.0;
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        (x.contains(origin + mid * (target - origin)) ? lo : hi) = mid;
    }
    return origin + lo * (target - origin);
}

std::vector<Point2> jitter_set(std::span<const Point2> pts, double delta, const ConvexRegion& x,
                               const LpNorm& n, RandomStream& rng) {
    std::vector<Point2> out;
    out.reserve(pts.size());
    for (const Point2& q : pts) {
        if (delta <= 0.0) {
            out.push_back(q);
        } else {
            out.push_back(clamp_into(rng.in_ball(q, delta * 0.999, n), q, x));
        }
    }
    return out;
}

double max_displacement(std::span<const Point2> a, const std::vector<Point2>& b,
                        const LpNorm& n) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, distance(a[i], b[i], n));
    }
    return worst;
}

std::vector<Point2> oracle_boundary(std::span<const Point2> p, std::span<const Point2> a,
                                    const ConvexRegion& x, int resolution) {
    const std::vector<Point2> cloud = mask_boundary(dom_grid_oracle(p, a, x, resolution));
    if (cloud.empty()) throw InternalError("stability: oracle mask has no boundary cells");
    return cloud;
}

}  // namespace

StabilityTable stability_probe(std::span<const Point2> p, std::span<const Point2> a,
                               const ConvexRegion& x, std::vector<double> deltas, int trials,
                               int grid_resolution, std::uint64_t seed) {
    const LpNorm& n = x.norm_ref();
    if (p.empty() || a.empty()) throw ValidationError("stability: empty generator set");
    if (trials < 1) throw ValidationError("stability: trials must be >= 1");
    if (deltas.empty()) throw ValidationError("stability: no deltas given");

    const double r = set_set_distance(p, a, n);
    if (!(r > 0.0)) throw ValidationError("stability: d(P,A) must be positive");
    for (const double d : deltas) {
        if (d < 0.0 || !(d < r / 6.0)) {
            throw ValidationError("stability: delta " + std::to_string(d) +
                                  " outside the theorem regime [0, d(P,A)/6)");
        }
    }

    std::sort(deltas.begin(), deltas.end(), std::greater<>());
    for (std::size_t i = 0; i + 1 < deltas.size(); ++i) {
        if (deltas[i] == deltas[i + 1]) throw ValidationError("stability: deltas must be distinct");
    }

    const std::vector<Point2> base_boundary = oracle_boundary(p, a, x, grid_resolution);

    StabilityTable table;
    table.seed = seed;
    table.grid_resolution = grid_resolution;
    for (std::size_t di = 0; di < deltas.size(); ++di) {
        const double delta = deltas[di];
        double worst = 0.0;
        for (int t = 0; t < trials; ++t) {
            RandomStream rng(seed, "stability/" + std::to_string(di) + "/" + std::to_string(t));
            const std::vector<Point2> p2 = jitter_set(p, delta, x, n, rng);
            const std::vector<Point2> a2 = jitter_set(a, delta, x, n, rng);
            if (delta > 0.0 && (max_displacement(p, p2, n) >= delta ||
                                max_displacement(a, a2, n) >= delta)) {
                throw InternalError("stability: clamped perturbation escaped its delta-ball");
            }
            const std::vector<Point2> moved_boundary = oracle_boundary(p2, a2, x, grid_resolution);
            worst = std::max(worst, hausdorff(base_boundary, moved_boundary, n));
        }
        table.rows.push_back({delta, worst, trials});
    }
    return table;
}

JumpReport t_jump_scan(Point2 p, const DistanceField& dist_to_rival, const ConvexRegion& x,
                       int base_directions, int doublings, double bisect_tol, double threshold) {
    if (base_directions < 4) throw ValidationError("tjump: directions must be >= 4");
    if (doublings < 2) throw ValidationError("tjump: doublings must be >= 2");
    if (threshold <= 0.0) threshold = 0.25 * x.diameter();

    const double chord_floor = 1e-9 * std::max(1.0, x.diameter());
    JumpReport report;
    report.threshold = threshold;

    int m = base_directions;
    for (int level = 0; level <= doublings; ++level, m *= 2) {
        const DirectionTable dirs = sample_directions(x.norm_ref(), m);
        std::vector<double> radius(dirs.size(), 0.0);
        std::vector<double> chord(dirs.size(), 0.0);
        for (std::size_t i = 0; i < dirs.size(); ++i) {
            chord[i] = x.ray_exit(p, dirs[i]);
            radius[i] = chord[i] <= chord_floor
                            ? 0.0
                            : reach(p, dirs[i], dist_to_rival, x, bisect_tol);
        }
        double worst = 0.0;
        for (std::size_t i = 0; i < dirs.size(); ++i) {
            const std::size_t j = (i + 1) % dirs.size();
            if (chord[i] <= chord_floor || chord[j] <= chord_floor) continue;
            worst = std::max(worst, std::fabs(radius[i] - radius[j]));
        }
        report.levels.push_back({m, worst});
    }

    report.stabilized_jump = report.levels.back().max_jump;
    const double slack = 4.0 * bisect_tol;
    bool decays = true;
    for (std::size_t l = 0; l + 1 < report.levels.size(); ++l) {
        if (report.levels[l + 1].max_jump > 0.75 * report.levels[l].max_jump + slack) {
            decays = false;
        }
    }
    const double last = report.stabilized_jump;
    const double prev = report.levels[report.levels.size() - 2].max_jump;
    const bool stabilized = std::fabs(last - prev) <= 0.25 * last + slack;

    if (decays) {
        report.verdict = "continuous";
    } else if (last >= threshold && stabilized) {
        report.verdict = "jump";
    } else {
        report.verdict = "inconclusive";
    }
    return report;
}

bool decomposition_check(const std::vector<std::vector<Point2>>& parts, std::span<const Point2> a,
                         const ConvexRegion& x, int resolution) {
    if (parts.empty()) throw ValidationError("decomp: parts must be nonempty");
    std::vector<Point2> all;
    for (const auto& part : parts) {
        if (part.empty()) throw ValidationError("decomp: empty part");
        all.insert(all.end(), part.begin(), part.end());
    }

    const GridMask whole = dom_grid_oracle(all, a, x, resolution);
    GridMask merged = dom_grid_oracle(parts[0], a, x, resolution);
    for (std::size_t i = 1; i < parts.size(); ++i) {
        const GridMask part_mask = dom_grid_oracle(parts[i], a, x, resolution);
        for (std::size_t b = 0; b < merged.bits.size(); ++b) {
            merged.bits[b] = merged.bits[b] | part_mask.bits[b];
        }
    }
    return merged == whole;
}

}  // namespace zonekit
