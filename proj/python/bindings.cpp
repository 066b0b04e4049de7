// Python surface for the core pipeline: norms, regions, reach, Voronoi and
// zone iteration, Hausdorff distances. Points cross the boundary as (x, y)
// tuples; fans come back flattened to sample clouds.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zonekit/analysis.hpp"
#include "zonekit/dominance.hpp"
#include "zonekit/errors.hpp"
#include "zonekit/norms.hpp"
#include "zonekit/region.hpp"
#include "zonekit/scene.hpp"
#include "zonekit/sites.hpp"
#include "zonekit/zone.hpp"

namespace py = pybind11;
namespace zk = zonekit;

namespace {

using PyPt = std::pair<double, double>;

zk::Point2 to_pt(PyPt p) { return {p.first, p.second}; }

PyPt from_pt(zk::Point2 p) { return {p.x, p.y}; }

std::vector<zk::Point2> to_pts(const std::vector<PyPt>& v) {
    std::vector<zk::Point2> out;
    out.reserve(v.size());
    for (PyPt p : v) out.push_back(to_pt(p));
    return out;
}

std::vector<PyPt> from_pts(const std::vector<zk::Point2>& v) {
    std::vector<PyPt> out;
    out.reserve(v.size());
    for (zk::Point2 p : v) out.push_back(from_pt(p));
    return out;
}

zk::LpNorm parse_p(double p) {
    if (p <= 0.0) throw std::invalid_argument("p must be in [1, inf]");
    return zk::LpNorm(p);
}

zk::IterationConfig scene_config(const zk::Scene& sc, int directions, double eps, int max_iter) {
    zk::Scene tweaked = sc;
    if (directions > 0) tweaked.iteration.directions = directions;
    if (eps > 0.0) tweaked.iteration.eps = eps;
    if (max_iter > 0) tweaked.iteration.max_iter = max_iter;
    return tweaked.resolved_config();
}

std::vector<std::vector<PyPt>> flatten_state(const zk::ZoneState& state,
                                             const zk::DirectionTable& dirs, double h) {
    std::vector<std::vector<PyPt>> out;
    out.reserve(state.cells.size());
    for (const zk::CellFan& fan : state.cells)
        out.push_back(from_pts(zk::fan_point_cloud(fan, dirs, h)));
    return out;
}

}  // namespace

PYBIND11_MODULE(_zonekit, m) {
    m.doc() = "Voronoi and zone diagrams in the l_p plane";

    py::register_exception<zk::ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<zk::TheoryViolation>(m, "TheoryViolation", PyExc_RuntimeError);

    py::class_<zk::LpNorm>(m, "LpNorm")
        .def(py::init(&parse_p), py::arg("p"))
        .def_property_readonly("p", &zk::LpNorm::p)
        .def_property_readonly("uniformly_convex", &zk::LpNorm::uniformly_convex)
        .def("__call__", [](const zk::LpNorm& n, PyPt v) { return n(to_pt(v)); })
        .def("__repr__", [](const zk::LpNorm& n) {
            return "LpNorm(p=" + std::to_string(n.p()) + ")";
        });

    m.def(
        "distance",
        [](PyPt a, PyPt b, const zk::LpNorm& n) { return zk::distance(to_pt(a), to_pt(b), n); },
        py::arg("a"), py::arg("b"), py::arg("norm"));
    m.def(
        "set_distance",
        [](PyPt x, const std::vector<PyPt>& a, const zk::LpNorm& n) {
            return zk::set_distance(to_pt(x), to_pts(a), n);
        },
        py::arg("x"), py::arg("points"), py::arg("norm"));
    m.def("convexity_modulus_estimate", &zk::convexity_modulus_estimate, py::arg("norm"),
          py::arg("eps"), py::arg("samples") = 256);
    m.def(
        "sample_directions",
        [](const zk::LpNorm& n, int count) {
            std::vector<PyPt> out;
            for (const zk::Direction& d : zk::sample_directions(n, count))
                out.push_back(from_pt(d.vector));
            return out;
        },
        py::arg("norm"), py::arg("count"));

    py::class_<zk::ConvexRegion>(m, "ConvexRegion")
        .def_static(
            "polygon",
            [](const std::vector<PyPt>& vertices, const zk::LpNorm& n) {
                return zk::ConvexRegion::polygon(to_pts(vertices), n);
            },
            py::arg("vertices"), py::arg("norm"))
        .def_static(
            "ball",
            [](PyPt center, double radius, const zk::LpNorm& n) {
                return zk::ConvexRegion::ball(to_pt(center), radius, n);
            },
            py::arg("center"), py::arg("radius"), py::arg("norm"))
        .def("contains", [](const zk::ConvexRegion& x, PyPt p) { return x.contains(to_pt(p)); })
        .def(
            "ray_exit",
            [](const zk::ConvexRegion& x, PyPt p, double angle) {
                return x.ray_exit(to_pt(p), zk::make_direction(angle, x.norm_ref()));
            },
            py::arg("point"), py::arg("angle"))
        .def_property_readonly("diameter", &zk::ConvexRegion::diameter);

    m.def(
        "reach",
        [](PyPt p, double angle, const std::vector<PyPt>& rivals, const zk::ConvexRegion& x,
           double tol) {
            std::vector<zk::Point2> a = to_pts(rivals);
            const zk::LpNorm& n = x.norm_ref();
            return zk::reach(
                to_pt(p), zk::make_direction(angle, n),
                [&](zk::Point2 q) { return zk::set_distance(q, a, n); }, x, tol);
        },
        py::arg("point"), py::arg("angle"), py::arg("rivals"), py::arg("region"),
        py::arg("tol") = 1e-6);

    m.def(
        "hausdorff",
        [](const std::vector<PyPt>& a, const std::vector<PyPt>& b, const zk::LpNorm& n) {
            return zk::hausdorff(to_pts(a), to_pts(b), n);
        },
        py::arg("a"), py::arg("b"), py::arg("norm"));
    m.def(
        "directed_hausdorff",
        [](const std::vector<PyPt>& a, const std::vector<PyPt>& b, const zk::LpNorm& n) {
            return zk::directed_hausdorff(to_pts(a), to_pts(b), n);
        },
        py::arg("a"), py::arg("b"), py::arg("norm"));

    py::class_<zk::Scene>(m, "Scene")
        .def_property_readonly("name", [](const zk::Scene& sc) { return sc.name; })
        .def_property_readonly("description", [](const zk::Scene& sc) { return sc.description; })
        .def_property_readonly("p", [](const zk::Scene& sc) { return sc.norm.p(); })
        .def_property_readonly("seed", [](const zk::Scene& sc) { return sc.seed; })
        .def_property_readonly("region", [](const zk::Scene& sc) { return sc.region; });

    m.def("load_scene", [](const std::string& path) { return zk::load_scene(path); },
          py::arg("path"));
    m.def("parse_scene", &zk::parse_scene_text, py::arg("text"), py::arg("origin") = "scene");

    m.def(
        "voronoi_clouds",
        [](const zk::Scene& sc, int directions) {
            zk::IterationConfig rc = scene_config(sc, directions, 0.0, 0);
            zk::SiteSystem sys = sc.build_sites();
            zk::DirectionTable dirs = zk::sample_directions(sc.norm, rc.directions);
            return flatten_state(zk::voronoi(sys, sc.region, rc, dirs), dirs, rc.cloud_pitch);
        },
        py::arg("scene"), py::arg("directions") = 0,
        "Voronoi cells of the scene, flattened to sample clouds.");

    m.def(
        "zone_summary",
        [](const zk::Scene& sc, int directions, double eps, int max_iter) {
            zk::IterationConfig rc = scene_config(sc, directions, eps, max_iter);
            zk::SiteSystem sys = sc.build_sites();
            zk::DirectionTable dirs = zk::sample_directions(sc.norm, rc.directions);
            zk::IterationTrace trace = zk::iterate(sys, sc.region, rc, dirs);
            py::dict out;
            out["verdict"] = trace.verdict;
            out["epochs"] = trace.trajectory.size() - 1;
            out["residual"] = trace.residual;
            out["separation"] = sys.separation;
            out["eps"] = rc.eps;
            out["steps"] = trace.steps;
            out["cells"] = flatten_state(trace.trajectory.back(), dirs, rc.cloud_pitch);
            return out;
        },
        py::arg("scene"), py::arg("directions") = 0, py::arg("eps") = 0.0,
        py::arg("max_iter") = 0,
        "Runs the zone iteration and returns verdict, residual, and final cell clouds.");
}
