#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zonekit/analysis.hpp"
#include "zonekit/dominance.hpp"
#include "zonekit/errors.hpp"
#include "zonekit/render.hpp"
#include "zonekit/scene.hpp"
#include "zonekit/zone.hpp"

namespace {

using nlohmann::json;
using namespace zonekit;

json norm_json(const LpNorm& n) { return n.is_inf() ? json("inf") : json(n.p()); }

json config_json(const IterationConfig& c) {
    return {{"directions", c.directions}, {"bisect_tol", c.bisect_tol},
            {"cloud_pitch", c.cloud_pitch}, {"eps", c.eps},
            {"max_iter", c.max_iter},      {"site_m", c.site_m}};
}

std::string guarantees_banner(const LpNorm& n) {
    return n.uniformly_convex() ? "uniformly convex norm (1 < p < inf)"
                                : "none (norm not uniformly convex)";
}

json scene_meta(const Scene& scene) {
    return {{"name", scene.name},
            {"norm", {{"p", norm_json(scene.norm)}}},
            {"seed", scene.seed},
            {"description", scene.description}};
}

json cells_json(const ZoneState& s, int directions) {
    json cells = json::array();
    for (const CellFan& fan : s.cells) {
        json anchors = json::array();
        for (std::size_t a = 0; a < fan.anchors.size(); ++a) {
            anchors.push_back({{"anchor", {fan.anchors[a].x, fan.anchors[a].y}},
                               {"directions_ref", directions},
                               {"radii", fan.radii[a]}});
        }
        cells.push_back(std::move(anchors));
    }
    return cells;
}

json bracketing_json(const BracketingReport& b) {
    json links = json::array();
    for (const BracketingLink& l : b.links) {
        links.push_back(
            {{"from", l.from_epoch}, {"to", l.to_epoch}, {"excess", l.excess}, {"ok", l.ok}});
    }
    return {{"tolerance", b.tolerance}, {"links", links}};
}

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    [[nodiscard]] double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void write_report(const std::filesystem::path& path, const json& report) {
    write_file_atomic(path, report.dump(2) + "\n");
}

std::vector<Point2> rival_union(const SiteSystem& sys, std::size_t k) {
    std::vector<Point2> out;
    for (std::size_t j = 0; j < sys.sites.size(); ++j) {
        if (j == k) continue;
        out.insert(out.end(), sys.sites[j].begin(), sys.sites[j].end());
    }
    return out;
}

int cmd_voronoi(const std::string& scene_path, const std::string& out_svg,
                const std::string& report_path, int grid_n) {
    const Stopwatch watch;
    const Scene scene = load_scene(scene_path);
    const IterationConfig cfg = scene.resolved_config();
    const SiteSystem sys = scene.build_sites();
    const DirectionTable dirs = sample_directions(scene.norm, cfg.directions);

    const ZoneState state = voronoi(sys, scene.region, cfg, dirs);
    const double compute_seconds = watch.seconds();

    const Point2 lo = scene.region.bbox_min();
    const Point2 hi = scene.region.bbox_max();
    const double pixel_area =
        (hi.x - lo.x) / grid_n * ((hi.y - lo.y) / grid_n);
    json areas = json::array();
    for (const CellFan& fan : state.cells) {
        areas.push_back(static_cast<double>(
                            fan_mask(fan, dirs, scene.region, grid_n).count_true()) *
                        pixel_area);
    }

    write_file_atomic(out_svg, render_state(state, sys, scene.region, dirs, RenderSpec{}));

    json report{{"mode", "voronoi"},
                {"scene", scene_meta(scene)},
                {"config", config_json(cfg)},
                {"guarantees", guarantees_banner(scene.norm)},
                {"separation", sys.separation},
                {"discretization_error", sys.discretization_error},
                {"grid_resolution", grid_n},
                {"areas", areas},
                {"cells", cells_json(state, cfg.directions)},
                {"timings", {{"total_seconds", watch.seconds()},
                             {"compute_seconds", compute_seconds}}}};
    write_report(report_path, report);

    std::printf("voronoi: %zu cells, separation %.6g; wrote %s, %s\n", state.cells.size(),
                sys.separation, out_svg.c_str(), report_path.c_str());
    return 0;
}

int cmd_zone(const std::string& scene_path, const std::string& out_svg,
             const std::string& report_path, const std::string& frames_dir, double eps_override,
             int max_iter_override) {
    const Stopwatch watch;
    Scene scene = load_scene(scene_path);
    if (eps_override > 0.0) scene.iteration.eps = eps_override;
    if (max_iter_override > 0) scene.iteration.max_iter = max_iter_override;
    const IterationConfig cfg = scene.resolved_config();
    if (cfg.eps <= 2.0 * cfg.cloud_pitch) {
        std::fprintf(stderr,
                     "zone: warning: eps %.3g sits at or below the cloud resolution floor "
                     "2h = %.3g; convergence may stall on sampling noise\n",
                     cfg.eps, 2.0 * cfg.cloud_pitch);
    }
    const SiteSystem sys = scene.build_sites();
    const DirectionTable dirs = sample_directions(scene.norm, cfg.directions);

    const IterationTrace trace = iterate(sys, scene.region, cfg, dirs);
    const double compute_seconds = watch.seconds();

    if (!frames_dir.empty()) {
        std::filesystem::create_directories(frames_dir);
        for (std::size_t e = 0; e < trace.trajectory.size(); ++e) {
            RenderSpec spec;
            char label[64];
            std::snprintf(label, sizeof label, "epoch %zu", e);
            spec.epoch_label = label;
            char name[256];
            std::snprintf(name, sizeof name, "%s_zone_%03zu.svg", scene.name.c_str(), e);
            write_file_atomic(std::filesystem::path(frames_dir) / name,
                              render_state(trace.trajectory[e], sys, scene.region, dirs, spec));
        }
    }
    write_file_atomic(out_svg,
                      render_state(trace.trajectory.back(), sys, scene.region, dirs, RenderSpec{}));

    const BracketingReport bracketing = bracketing_check(
        trace.trajectory, dirs, cfg.cloud_pitch, scene.norm, 2.0 * cfg.cloud_pitch);

    json report{{"mode", "zone"},
                {"scene", scene_meta(scene)},
                {"config", config_json(cfg)},
                {"guarantees", guarantees_banner(scene.norm)},
                {"separation", sys.separation},
                {"verdict", trace.verdict},
                {"epochs", trace.steps.size()},
                {"steps", trace.steps},
                {"residual", trace.residual},
                {"bracketing", bracketing_json(bracketing)},
                {"cells", cells_json(trace.trajectory.back(), cfg.directions)},
                {"timings", {{"total_seconds", watch.seconds()},
                             {"compute_seconds", compute_seconds}}}};
    write_report(report_path, report);

    std::printf("zone: %s after %zu epochs, residual %.6g; wrote %s, %s\n",
                trace.verdict.c_str(), trace.steps.size(), trace.residual, out_svg.c_str(),
                report_path.c_str());
    if (trace.verdict != "converged") {
        std::fprintf(stderr, "zonekit: budget: no convergence within %d epochs (last step %.6g)\n",
                     cfg.max_iter, trace.steps.empty() ? 0.0 : trace.steps.back());
        return 3;
    }
    return 0;
}

std::string default_out(const std::string& scene_path, const std::string& mode,
                        const std::string& ext) {
    return std::filesystem::path(scene_path).stem().string() + "_" + mode + ext;
}

int cmd_probe(const std::string& scene_path, const std::string& mode,
              std::vector<double> deltas, int trials, int grid_n, int doublings,
              double scan_eps, std::string report_path, std::string csv_path) {
    const Scene scene = load_scene(scene_path);
    const IterationConfig cfg = scene.resolved_config();
    const SiteSystem sys = scene.build_sites();
    if (report_path.empty()) report_path = default_out(scene_path, mode, ".json");

    json report{{"mode", mode},
                {"scene", scene_meta(scene)},
                {"config", config_json(cfg)},
                {"guarantees", guarantees_banner(scene.norm)}};

    if (mode == "stability") {
        if (deltas.empty()) deltas = {0.1, 0.05, 0.025};
        const std::vector<Point2> rivals = rival_union(sys, 0);
        const StabilityTable table = stability_probe(sys.sites[0], rivals, scene.region, deltas,
                                                     trials, grid_n, scene.seed);
        json rows = json::array();
        std::string csv = "delta,measured,trials\n";
        char line[96];
        for (const StabilityRow& row : table.rows) {
            rows.push_back(
                {{"delta", row.delta}, {"measured", row.measured}, {"trials", row.trials}});
            std::snprintf(line, sizeof line, "%.17g,%.17g,%d\n", row.delta, row.measured,
                          row.trials);
            csv += line;
        }
        report["grid_resolution"] = table.grid_resolution;
        report["seed"] = table.seed;
        report["rows"] = rows;
        if (csv_path.empty()) csv_path = default_out(scene_path, mode, ".csv");
        write_file_atomic(csv_path, csv);
        write_report(report_path, report);
        std::printf("stability: %zu deltas, %d trials each, final measured %.6g; wrote %s, %s\n",
                    table.rows.size(), trials, table.rows.back().measured, report_path.c_str(),
                    csv_path.c_str());
        return 0;
    }

    if (mode == "tjump") {
        const Point2 p = sys.sites[0].front();
        const std::vector<Point2> rivals = rival_union(sys, 0);
        const PointIndex rival_index{std::vector<Point2>(rivals)};
        const LpNorm& n = scene.norm;
        DistanceField field = [&](Point2 q) { return rival_index.nearest(q, n); };
        const JumpReport jump = t_jump_scan(p, field, scene.region, cfg.directions, doublings,
                                            cfg.bisect_tol);
        json levels = json::array();
        for (const JumpLevel& l : jump.levels) {
            levels.push_back({{"directions", l.directions}, {"max_jump", l.max_jump}});
        }
        report["levels"] = levels;
        report["threshold"] = jump.threshold;
        report["stabilized_jump"] = jump.stabilized_jump;
        report["verdict"] = jump.verdict;
        write_report(report_path, report);
        std::printf("tjump: verdict %s, stabilized jump %.6g; wrote %s\n", jump.verdict.c_str(),
                    jump.stabilized_jump, report_path.c_str());
        if (jump.verdict == "jump" && scene.norm.uniformly_convex()) {
            std::fprintf(stderr, "zonekit: theory-violation: T-jump under a uniformly convex "
                                 "norm (p=%g)\n",
                         scene.norm.p());
            return 4;
        }
        return 0;
    }

    if (mode == "decomp") {
        std::vector<std::vector<Point2>> parts(sys.sites.begin(), sys.sites.end() - 1);
        const std::vector<Point2>& a = sys.sites.back();
        const bool equal = decomposition_check(parts, a, scene.region, grid_n);
        report["parts"] = parts.size();
        report["grid_resolution"] = grid_n;
        report["equal"] = equal;
        write_report(report_path, report);
        std::printf("decomp: equal: %s; wrote %s\n", equal ? "true" : "false",
                    report_path.c_str());
        if (!equal) {
            std::fprintf(stderr, "zonekit: theory-violation: union decomposition mismatch "
                                 "(exact lemma, any metric)\n");
            return 4;
        }
        return 0;
    }

    if (mode == "emanation") {
        const Point2 p = sys.sites[0].front();
        if (scan_eps <= 0.0) scan_eps = 0.02 * scene.region.diameter();
        const EmanationReport scan = emanation_scan(scene.region, p, cfg.directions, scan_eps);
        json violations = json::array();
        for (const EmanationViolation& v : scan.violations) {
            violations.push_back({{"index", v.index}, {"angle", v.angle}, {"drop", v.drop}});
        }
        report["eps"] = scan_eps;
        report["largest_drop"] = scan.largest_drop;
        report["violations"] = violations;
        report["clean"] = scan.clean();
        write_report(report_path, report);
        std::printf("emanation: %s (largest adjacent drop %.6g); wrote %s\n",
                    scan.clean() ? "clean" : "violations found", scan.largest_drop,
                    report_path.c_str());
        if (!scan.clean()) {
            std::fprintf(stderr, "zonekit: theory-violation: chord-length drop on a convex "
                                 "region\n");
            return 4;
        }
        return 0;
    }

    throw ValidationError("probe: unknown mode '" + mode +
                          "' (expected stability|tjump|decomp|emanation)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zonekit: Voronoi and zone diagrams in l_p-normed planar regions"};
    app.require_subcommand(1);

    std::string scene_path, out_svg, report_path, frames_dir, mode, csv_path;
    double eps_override = 0.0, scan_eps = 0.0;
    int max_iter_override = 0, grid_n = 400, trials = 20, doublings = 3;
    std::vector<double> deltas;

    auto* vor = app.add_subcommand("voronoi", "Compute a Voronoi diagram");
    vor->add_option("scene", scene_path, "Scene JSON file")->required();
    vor->add_option("-o,--out", out_svg, "Output SVG path")->required();
    vor->add_option("--report", report_path, "Report JSON path")->required();
    vor->add_option("--grid-n", grid_n, "Raster resolution for cell areas");

    auto* zone = app.add_subcommand("zone", "Iterate the Dom mapping to a zone diagram");
    zone->add_option("scene", scene_path, "Scene JSON file")->required();
    zone->add_option("-o,--out", out_svg, "Output SVG path")->required();
    zone->add_option("--report", report_path, "Report JSON path")->required();
    zone->add_option("--frames", frames_dir, "Directory for per-epoch SVG frames");
    zone->add_option("--eps", eps_override, "Override convergence tolerance");
    zone->add_option("--max-iter", max_iter_override, "Override epoch budget");

    auto* probe = app.add_subcommand("probe", "Run a theory probe");
    probe->add_option("scene", scene_path, "Scene JSON file")->required();
    probe->add_option("--mode", mode, "stability|tjump|decomp|emanation")->required();
    probe->add_option("--deltas", deltas, "Perturbation radii (stability)")->delimiter(',');
    probe->add_option("--trials", trials, "Trials per delta (stability)");
    probe->add_option("--grid-n", grid_n, "Oracle raster resolution");
    probe->add_option("--doublings", doublings, "Refinement levels (tjump)");
    probe->add_option("--eps", scan_eps, "Drop threshold (emanation)");
    probe->add_option("--report", report_path, "Report JSON path");
    probe->add_option("--csv", csv_path, "CSV path (stability)");

    try {
        app.parse(argc, argv);
        if (vor->parsed()) return cmd_voronoi(scene_path, out_svg, report_path, grid_n);
        if (zone->parsed()) {
            return cmd_zone(scene_path, out_svg, report_path, frames_dir, eps_override,
                            max_iter_override);
        }
        return cmd_probe(scene_path, mode, deltas, trials, grid_n, doublings, scan_eps,
                         report_path, csv_path);
    } catch (const CLI::ParseError& e) {
        // Fold CLI11's parse-error codes into the input class; --help stays 0.
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const ValidationError& e) {
        std::fprintf(stderr, "zonekit: input: %s\n", e.what());
        return 1;
    } catch (const BudgetError& e) {
        std::fprintf(stderr, "zonekit: budget: %s\n", e.what());
        return 3;
    } catch (const TheoryViolation& e) {
        std::fprintf(stderr, "zonekit: theory-violation: %s\n", e.what());
        return 4;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "zonekit: internal: %s\n", e.what());
        return 2;
    }
}
