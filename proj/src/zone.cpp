#include "zonekit/zone.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "zonekit/errors.hpp"

namespace zonekit {

IterationConfig IterationConfig::resolved(const ConvexRegion& x) const {
    IterationConfig out = *this;
    const double diam = x.diameter();
    if (out.bisect_tol == 0.0) out.bisect_tol = 1e-6 * diam;
    if (out.cloud_pitch == 0.0) out.cloud_pitch = diam / 1000.0;
    if (out.eps == 0.0) out.eps = 4.0 * out.cloud_pitch;
    if (out.directions < 4) throw ValidationError("iteration.directions: must be >= 4");
    if (!(out.bisect_tol > 0.0)) throw ValidationError("iteration.bisect_tol: must be positive");
    if (!(out.cloud_pitch > 0.0)) throw ValidationError("iteration.cloud_pitch: must be positive");
    if (!(out.eps > 0.0)) throw ValidationError("iteration.eps: must be positive");
    if (out.max_iter < 1) throw ValidationError("iteration.max_iter: must be >= 1");
    if (out.site_m < 1) throw ValidationError("iteration.site_m: must be >= 1");
    return out;
}

namespace {

std::vector<FanCloud> build_clouds(const ZoneState& s, const DirectionTable& dirs, double h,
                                   const LpNorm& n) {
    std::vector<FanCloud> out;
    out.reserve(s.cells.size());
    for (const CellFan& c : s.cells) out.emplace_back(c, dirs, h, n);
    return out;
}

// Min over rival clouds: each bounded query is seeded with the best distance
// so far, which prunes hard once one rival is close. Exact below upper, upper
// back when every cloud sits at least that far away.
double rival_cloud_distance(Point2 q, std::size_t k, const std::vector<FanCloud>& clouds,
                            double upper = std::numeric_limits<double>::infinity()) {
    double best = upper;
    for (std::size_t j = 0; j < clouds.size(); ++j) {
        if (j == k) continue;
        best = clouds[j].distance_to(q, best);
    }
    return best;
}

ZoneState dom_map_against(const ZoneState& state, const std::vector<FanCloud>& clouds,
                          const SiteSystem& sys, const ConvexRegion& x,
                          const IterationConfig& cfg, const DirectionTable& dirs) {
    if (state.cells.size() != sys.sites.size()) {
        throw InternalError("dom_map: state and site system disagree on cell count");
    }
    ZoneState next;
    next.cells.reserve(state.cells.size());
    for (std::size_t k = 0; k < sys.sites.size(); ++k) {
        BoundedField field = [&clouds, k](Point2 q, double upper) {
            return rival_cloud_distance(q, k, clouds, upper);
        };
        CellFan fan = dom_fan(sys.sites[k], field, x, dirs, cfg.bisect_tol);
        fan.sample_spacing = cfg.cloud_pitch;
        next.cells.push_back(std::move(fan));
    }
    return next;
}

double state_step(const ZoneState& a, const ZoneState& b, const std::vector<FanCloud>& a_clouds,
                  const std::vector<FanCloud>& b_clouds, const DirectionTable& dirs, double h) {
    double worst = 0.0;
    for (std::size_t k = 0; k < a.cells.size(); ++k) {
        worst = std::max(worst, fan_hausdorff(a.cells[k], b.cells[k], dirs, h, a_clouds[k],
                                              b_clouds[k]));
    }
    return worst;
}

}  // namespace

ZoneState voronoi(const SiteSystem& sys, const ConvexRegion& x, const IterationConfig& cfg,
                  const DirectionTable& dirs) {
    const IterationConfig rc = cfg.resolved(x);
    ZoneState s;
    s.cells.reserve(sys.sites.size());
    for (std::size_t k = 0; k < sys.sites.size(); ++k) {
        std::vector<Point2> rivals;
        for (std::size_t j = 0; j < sys.sites.size(); ++j) {
            if (j == k) continue;
            rivals.insert(rivals.end(), sys.sites[j].begin(), sys.sites[j].end());
        }
        const PointIndex rival_index(std::move(rivals));
        DistanceField field = [&rival_index, &x](Point2 q) {
            return rival_index.nearest(q, x.norm_ref());
        };
        CellFan fan = dom_fan(sys.sites[k], field, x, dirs, rc.bisect_tol);
        fan.sample_spacing = rc.cloud_pitch;
        s.cells.push_back(std::move(fan));
    }
    return s;
}

ZoneState dom_map(const ZoneState& state, const SiteSystem& sys, const ConvexRegion& x,
                  const IterationConfig& cfg, const DirectionTable& dirs) {
    const IterationConfig rc = cfg.resolved(x);
    const auto clouds = build_clouds(state, dirs, rc.cloud_pitch, x.norm_ref());
    return dom_map_against(state, clouds, sys, x, rc, dirs);
}

IterationTrace iterate(const SiteSystem& sys, const ConvexRegion& x, const IterationConfig& cfg,
                       const DirectionTable& dirs) {
    const IterationConfig rc = cfg.resolved(x);
    const LpNorm& n = x.norm_ref();
    const double h = rc.cloud_pitch;

    IterationTrace trace;
    trace.trajectory.push_back(voronoi(sys, x, rc, dirs));
    auto prev_clouds = build_clouds(trace.trajectory.back(), dirs, h, n);

    trace.verdict = "budget-exhausted";
    for (int epoch = 1; epoch <= rc.max_iter; ++epoch) {
        ZoneState next = dom_map_against(trace.trajectory.back(), prev_clouds, sys, x, rc, dirs);
        auto next_clouds = build_clouds(next, dirs, h, n);
        const double step =
            state_step(next, trace.trajectory.back(), next_clouds, prev_clouds, dirs, h);
        trace.steps.push_back(step);
        trace.trajectory.push_back(std::move(next));
        prev_clouds = std::move(next_clouds);
        if (step <= rc.eps) {
            trace.verdict = "converged";
            break;
        }
    }

    // One more Dom application measures how far the final state sits from a
    // true fixed point.
    ZoneState extra = dom_map_against(trace.trajectory.back(), prev_clouds, sys, x, rc, dirs);
    const auto extra_clouds = build_clouds(extra, dirs, h, n);
    trace.residual =
        state_step(extra, trace.trajectory.back(), extra_clouds, prev_clouds, dirs, h);
    return trace;
}

double fixed_point_residual(const ZoneState& state, const SiteSystem& sys, const ConvexRegion& x,
                            const IterationConfig& cfg, const DirectionTable& dirs) {
    const IterationConfig rc = cfg.resolved(x);
    const LpNorm& n = x.norm_ref();
    const auto clouds = build_clouds(state, dirs, rc.cloud_pitch, n);
    ZoneState mapped = dom_map_against(state, clouds, sys, x, rc, dirs);
    const auto mapped_clouds = build_clouds(mapped, dirs, rc.cloud_pitch, n);
    return state_step(mapped, state, mapped_clouds, clouds, dirs, rc.cloud_pitch);
}

bool BracketingReport::all_ok() const {
    return std::all_of(links.begin(), links.end(), [](const BracketingLink& l) { return l.ok; });
}

BracketingReport bracketing_check(const std::vector<ZoneState>& trajectory,
                                  const DirectionTable& dirs, double h, const LpNorm& n,
                                  double tol) {
    BracketingReport report;
    report.tolerance = tol;
    if (trajectory.size() < 2) return report;
    const int last = static_cast<int>(trajectory.size()) - 1;

    std::vector<int> odds, evens;
    for (int e = 1; e <= last; e += 2) odds.push_back(e);
    for (int e = 0; e <= last; e += 2) evens.push_back(e);

    std::vector<std::pair<int, int>> chain;
    for (std::size_t i = 0; i + 1 < odds.size(); ++i) chain.emplace_back(odds[i], odds[i + 1]);
    if (!odds.empty()) chain.emplace_back(odds.back(), evens.back());
    for (std::size_t i = evens.size(); i-- > 1;) chain.emplace_back(evens[i], evens[i - 1]);

    for (const auto& [from, to] : chain) {
        const ZoneState& small = trajectory[from];
        const ZoneState& big = trajectory[to];
        const auto big_clouds = build_clouds(big, dirs, h, n);
        double excess = 0.0;
        for (std::size_t k = 0; k < small.cells.size(); ++k) {
            excess = std::max(excess, fan_directed_excess(small.cells[k], big.cells[k], dirs, h,
                                                          big_clouds[k]));
        }
        report.links.push_back({from, to, excess, excess <= tol});
    }
    return report;
}

}  // namespace zonekit
