#include "zonekit/scene.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "zonekit/errors.hpp"

namespace zonekit {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& msg) {
    throw ValidationError(origin + ": " + msg);
}

void reject_unknown(const json& obj, const std::set<std::string>& known,
                    const std::string& origin, const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        if (!known.contains(key)) fail(origin, where + ": unknown field '" + key + "'");
    }
}

Point2 parse_point(const json& j, const std::string& origin, const std::string& path) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        fail(origin, path + ": expected [x, y]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<Point2> parse_point_list(const json& j, const std::string& origin,
                                     const std::string& path) {
    if (!j.is_array()) fail(origin, path + ": expected an array of [x, y] pairs");
    std::vector<Point2> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(parse_point(j[i], origin, path + "[" + std::to_string(i) + "]"));
    }
    return out;
}

double parse_positive(const json& j, const std::string& origin, const std::string& path) {
    if (!j.is_number()) fail(origin, path + ": expected a number");
    const double v = j.get<double>();
    if (!(v > 0.0)) fail(origin, path + ": must be positive");
    return v;
}

LpNorm parse_norm(const json& j, const std::string& origin) {
    if (!j.is_object() || !j.contains("p")) fail(origin, "scene.norm: expected {\"p\": ...}");
    reject_unknown(j, {"p"}, origin, "scene.norm");
    const json& p = j.at("p");
    if (p.is_string() && p.get<std::string>() == "inf") {
        return LpNorm(std::numeric_limits<double>::infinity());
    }
    if (!p.is_number() || p.get<double>() < 1.0) {
        fail(origin, "scene.norm.p: must be a number >= 1 or \"inf\"");
    }
    return LpNorm(p.get<double>());
}

ConvexRegion parse_region(const json& j, const LpNorm& n, const std::string& origin) {
    if (!j.is_object() || !j.contains("type")) fail(origin, "scene.region: expected {\"type\": ...}");
    const std::string type = j.at("type").is_string() ? j.at("type").get<std::string>() : "";
    try {
        if (type == "polygon") {
            reject_unknown(j, {"type", "vertices"}, origin, "scene.region");
            if (!j.contains("vertices")) fail(origin, "scene.region.vertices: required");
            return ConvexRegion::polygon(
                parse_point_list(j.at("vertices"), origin, "scene.region.vertices"), n);
        }
        if (type == "ball") {
            reject_unknown(j, {"type", "center", "radius"}, origin, "scene.region");
            if (!j.contains("center") || !j.contains("radius")) {
                fail(origin, "scene.region: ball needs center and radius");
            }
            return ConvexRegion::ball(parse_point(j.at("center"), origin, "scene.region.center"),
                                      parse_positive(j.at("radius"), origin, "scene.region.radius"),
                                      n);
        }
    } catch (const ValidationError& e) {
        const std::string what = e.what();
        if (what.rfind(origin, 0) == 0) throw;
        fail(origin, what);
    }
    fail(origin, "scene.region.type: must be \"polygon\" or \"ball\"");
}

SiteSpec parse_site(const json& j, const std::string& origin, const std::string& path) {
    if (!j.is_object() || !j.contains("type")) fail(origin, path + ": expected {\"type\": ...}");
    const std::string type = j.at("type").is_string() ? j.at("type").get<std::string>() : "";
    if (type == "points") {
        reject_unknown(j, {"type", "points"}, origin, path);
        if (!j.contains("points")) fail(origin, path + ".points: required");
        return PointsSite{parse_point_list(j.at("points"), origin, path + ".points")};
    }
    if (type == "segment") {
        reject_unknown(j, {"type", "a", "b"}, origin, path);
        if (!j.contains("a") || !j.contains("b")) fail(origin, path + ": segment needs a and b");
        return SegmentSite{parse_point(j.at("a"), origin, path + ".a"),
                           parse_point(j.at("b"), origin, path + ".b")};
    }
    if (type == "polyline") {
        reject_unknown(j, {"type", "points"}, origin, path);
        if (!j.contains("points")) fail(origin, path + ".points: required");
        return PolylineSite{parse_point_list(j.at("points"), origin, path + ".points")};
    }
    if (type == "ball_boundary") {
        reject_unknown(j, {"type", "center", "radius"}, origin, path);
        if (!j.contains("center") || !j.contains("radius")) {
            fail(origin, path + ": ball_boundary needs center and radius");
        }
        return BallBoundarySite{parse_point(j.at("center"), origin, path + ".center"),
                                parse_positive(j.at("radius"), origin, path + ".radius")};
    }
    if (type == "ball") {
        reject_unknown(j, {"type", "center", "radius"}, origin, path);
        if (!j.contains("center") || !j.contains("radius")) {
            fail(origin, path + ": ball needs center and radius");
        }
        return BallSite{parse_point(j.at("center"), origin, path + ".center"),
                        parse_positive(j.at("radius"), origin, path + ".radius")};
    }
    fail(origin, path + ".type: must be one of points, segment, polyline, ball_boundary, ball");
}

IterationConfig parse_iteration(const json& j, const std::string& origin) {
    IterationConfig cfg;
    if (j.is_null()) return cfg;
    if (!j.is_object()) fail(origin, "scene.iteration: expected an object");
    reject_unknown(j, {"directions", "bisect_tol", "cloud_pitch", "eps", "max_iter", "site_m"},
                   origin, "scene.iteration");
    auto int_field = [&](const char* name, int fallback) {
        if (!j.contains(name)) return fallback;
        if (!j.at(name).is_number_integer()) {
            fail(origin, std::string("scene.iteration.") + name + ": expected an integer");
        }
        return j.at(name).get<int>();
    };
    auto num_field = [&](const char* name, double fallback) {
        if (!j.contains(name)) return fallback;
        return parse_positive(j.at(name), origin, std::string("scene.iteration.") + name);
    };
    cfg.directions = int_field("directions", cfg.directions);
    cfg.bisect_tol = num_field("bisect_tol", cfg.bisect_tol);
    cfg.cloud_pitch = num_field("cloud_pitch", cfg.cloud_pitch);
    cfg.eps = num_field("eps", cfg.eps);
    cfg.max_iter = int_field("max_iter", cfg.max_iter);
    cfg.site_m = int_field("site_m", cfg.site_m);
    return cfg;
}

}  // namespace

SiteSystem Scene::build_sites() const {
    return validate_system(sites, region, resolved_config().site_m, norm);
}

Scene parse_scene_text(const std::string& text, const std::string& origin) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(origin, std::string("JSON parse error: ") + e.what());
    }
    if (!j.is_object()) fail(origin, "scene: expected a JSON object");
    reject_unknown(j, {"norm", "region", "sites", "iteration", "seed", "description"}, origin,
                   "scene");
    if (!j.contains("norm")) fail(origin, "scene.norm: required");
    if (!j.contains("region")) fail(origin, "scene.region: required");
    if (!j.contains("sites")) fail(origin, "scene.sites: required");

    Scene scene;
    scene.norm = parse_norm(j.at("norm"), origin);
    scene.region = parse_region(j.at("region"), scene.norm, origin);

    const json& sites = j.at("sites");
    if (!sites.is_array() || sites.empty()) fail(origin, "scene.sites: expected a nonempty array");
    for (std::size_t i = 0; i < sites.size(); ++i) {
        scene.sites.push_back(
            parse_site(sites[i], origin, "scene.sites[" + std::to_string(i) + "]"));
    }

    scene.iteration = parse_iteration(j.contains("iteration") ? j.at("iteration") : json(), origin);
    if (j.contains("seed")) {
        if (!j.at("seed").is_number_integer()) fail(origin, "scene.seed: expected an integer");
        scene.seed = j.at("seed").get<std::uint64_t>();
    }
    if (j.contains("description")) {
        if (!j.at("description").is_string()) fail(origin, "scene.description: expected a string");
        scene.description = j.at("description").get<std::string>();
    }
    return scene;
}

Scene load_scene(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError(path.string() + ": cannot read scene file");
    std::ostringstream buf;
    buf << in.rdbuf();
    Scene scene = parse_scene_text(buf.str(), path.filename().string());
    scene.name = path.stem().string();
    return scene;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp" + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ValidationError(tmp.string() + ": cannot open for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw ValidationError(tmp.string() + ": write failed");
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace zonekit
