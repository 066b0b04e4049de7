#include <filesystem>
#include <fstream>
#include <string>

#include <doctest.h>

#include "zonekit/errors.hpp"
#include "zonekit/scene.hpp"

using namespace zonekit;
namespace fs = std::filesystem;

namespace {

const char* kMinimal = R"({
  "norm": {"p": 2},
  "region": {"type": "polygon", "vertices": [[-3, -3], [3, -3], [3, 3], [-3, 3]]},
  "sites": [
    {"type": "points", "points": [[-1, 0]]},
    {"type": "points", "points": [[1, 0]]}
  ]
})";

bool parse_fails_with(const std::string& text, const std::string& needle) {
    try {
        (void)parse_scene_text(text, "probe");
    } catch (const ValidationError& e) {
        return std::string(e.what()).find(needle) != std::string::npos;
    }
    return false;
}

}  // namespace

TEST_CASE("minimal scene parses with defaults") {
    const Scene s = parse_scene_text(kMinimal, "mini.json");
    CHECK(s.norm.p() == 2.0);
    CHECK(s.region.is_polygon());
    CHECK(s.sites.size() == 2);
    CHECK(s.seed == 0);
    CHECK(s.description.empty());
    CHECK(s.iteration.directions == 720);
    CHECK(s.iteration.max_iter == 64);
    CHECK(s.iteration.site_m == 50);
    CHECK(s.iteration.bisect_tol == 0.0);

    const IterationConfig rc = s.resolved_config();
    CHECK(rc.bisect_tol > 0.0);
    CHECK(rc.cloud_pitch > 0.0);
    CHECK(rc.eps == doctest::Approx(4.0 * rc.cloud_pitch));

    const SiteSystem sys = s.build_sites();
    CHECK(sys.sites.size() == 2);
    CHECK(sys.separation == doctest::Approx(2.0));
}

TEST_CASE("norm variants") {
    const Scene inf = parse_scene_text(R"({
      "norm": {"p": "inf"},
      "region": {"type": "ball", "center": [0, 0], "radius": 2},
      "sites": [
        {"type": "points", "points": [[-1, 0]]},
        {"type": "points", "points": [[1, 0]]}
      ]
    })",
                                       "inf.json");
    CHECK(inf.norm.is_inf());
    CHECK_FALSE(inf.region.is_polygon());
    CHECK(inf.region.ball_radius() == 2.0);

    CHECK(parse_fails_with(R"({"norm": {"p": 0.5}, "region": {}, "sites": []})",
                           "scene.norm.p"));
    CHECK(parse_fails_with(R"({"norm": {"p": "two"}, "region": {}, "sites": []})",
                           "scene.norm.p"));
    CHECK(parse_fails_with(R"({"norm": {"p": 2, "q": 1}, "region": {}, "sites": []})",
                           "unknown field 'q'"));
}

TEST_CASE("every site type parses") {
    const Scene s = parse_scene_text(R"({
      "norm": {"p": 2},
      "region": {"type": "polygon", "vertices": [[-5, -5], [5, -5], [5, 5], [-5, 5]]},
      "sites": [
        {"type": "points", "points": [[-4, 0]]},
        {"type": "segment", "a": [0, -4], "b": [1, -3]},
        {"type": "polyline", "points": [[2, 2], [3, 2], [3, 3]]},
        {"type": "ball_boundary", "center": [-3, 3], "radius": 0.5},
        {"type": "ball", "center": [3, -2], "radius": 0.4}
      ],
      "seed": 104729,
      "description": "mixed"
    })",
                                     "mixed.json");
    CHECK(s.sites.size() == 5);
    CHECK(s.seed == 104729);
    CHECK(s.description == "mixed");
    CHECK(std::holds_alternative<PointsSite>(s.sites[0]));
    CHECK(std::holds_alternative<SegmentSite>(s.sites[1]));
    CHECK(std::holds_alternative<PolylineSite>(s.sites[2]));
    CHECK(std::holds_alternative<BallBoundarySite>(s.sites[3]));
    CHECK(std::holds_alternative<BallSite>(s.sites[4]));
    CHECK(s.build_sites().sites.size() == 5);
}

TEST_CASE("iteration block overrides and validates") {
    const Scene s = parse_scene_text(R"({
      "norm": {"p": 2},
      "region": {"type": "ball", "center": [0, 0], "radius": 3},
      "sites": [
        {"type": "points", "points": [[-1, 0]]},
        {"type": "points", "points": [[1, 0]]}
      ],
      "iteration": {"directions": 360, "cloud_pitch": 0.02, "eps": 0.08, "max_iter": 16}
    })",
                                     "iter.json");
    CHECK(s.iteration.directions == 360);
    CHECK(s.iteration.cloud_pitch == 0.02);
    CHECK(s.iteration.eps == 0.08);
    CHECK(s.iteration.max_iter == 16);
    CHECK(s.iteration.site_m == 50);

    CHECK(parse_fails_with(
        R"({"norm": {"p": 2}, "region": {"type": "ball", "center": [0,0], "radius": 1},
            "sites": [{"type": "points", "points": [[0, 0]]}],
            "iteration": {"directions": 5.5}})",
        "scene.iteration.directions"));
    CHECK(parse_fails_with(
        R"({"norm": {"p": 2}, "region": {"type": "ball", "center": [0,0], "radius": 1},
            "sites": [{"type": "points", "points": [[0, 0]]}],
            "iteration": {"eps": -1}})",
        "must be positive"));
    CHECK(parse_fails_with(
        R"({"norm": {"p": 2}, "region": {"type": "ball", "center": [0,0], "radius": 1},
            "sites": [{"type": "points", "points": [[0, 0]]}],
            "iteration": {"pitch": 0.1}})",
        "unknown field 'pitch'"));
}

TEST_CASE("structural scene errors carry the origin and the path") {
    CHECK(parse_fails_with("not json at all", "JSON parse error"));
    CHECK(parse_fails_with(R"([1, 2])", "expected a JSON object"));
    CHECK(parse_fails_with(R"({"region": {}, "sites": []})", "scene.norm: required"));
    CHECK(parse_fails_with(R"({"norm": {"p": 2}, "sites": []})", "scene.region: required"));
    CHECK(parse_fails_with(R"({"norm": {"p": 2}, "region": {"type": "ball", "center": [0,0],
                               "radius": 1}})",
                           "scene.sites: required"));
    CHECK(parse_fails_with(R"({"norm": {"p": 2}, "region": {"type": "cube"}, "sites": [1]})",
                           "scene.region.type"));
    CHECK(parse_fails_with(
        R"({"norm": {"p": 2},
            "region": {"type": "polygon", "vertices": [[-1, -1], [-1, 1], [1, 1], [1, -1]]},
            "sites": [{"type": "points", "points": [[0, 0]]}]})",
        "strictly convex"));
    CHECK(parse_fails_with(
        R"({"norm": {"p": 2}, "region": {"type": "ball", "center": [0,0], "radius": 1},
            "sites": [{"type": "blob"}]})",
        "scene.sites[0].type"));
    CHECK(parse_fails_with(
        R"({"norm": {"p": 2}, "region": {"type": "ball", "center": [0,0], "radius": 1},
            "sites": [{"type": "points", "points": [[0, "x"]]}]})",
        "expected [x, y]"));
    CHECK(parse_fails_with(
        R"({"norm": {"p": 2}, "region": {"type": "ball", "center": [0,0], "radius": 1},
            "sites": [], "extra": 1})",
        "unknown field 'extra'"));
    // Origin string appears in the message.
    CHECK(parse_fails_with("{}", "probe"));
}

TEST_CASE("scene files load by stem and write atomically") {
    const fs::path dir = fs::temp_directory_path() / "zonekit_scene_test";
    fs::create_directories(dir);
    const fs::path path = dir / "sample_case.json";

    write_file_atomic(path, kMinimal);
    const Scene s = load_scene(path);
    CHECK(s.name == "sample_case");
    CHECK(s.sites.size() == 2);

    // Overwrite through the same path keeps a single visible file.
    write_file_atomic(path, kMinimal);
    std::size_t entries = 0;
    for (const auto& e : fs::directory_iterator(dir)) {
        (void)e;
        ++entries;
    }
    CHECK(entries == 1);

    std::ifstream in(path, std::ios::binary);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(content == kMinimal);

    CHECK_THROWS_AS((void)load_scene(dir / "missing.json"), ValidationError);
    fs::remove_all(dir);
}
