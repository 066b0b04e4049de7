#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "zonekit/region.hpp"
#include "zonekit/sites.hpp"
#include "zonekit/zone.hpp"

namespace zonekit {

/// A parsed scene file: norm, region, site specs, iteration knobs, seed.
/// Parsing applies no iteration defaults beyond zero-fill; resolved_config()
/// scales them to the region.
struct Scene {
    LpNorm norm{2.0};
    ConvexRegion region = ConvexRegion::ball({0.0, 0.0}, 1.0, LpNorm(2.0));
    std::vector<SiteSpec> sites;
    IterationConfig iteration;
    std::uint64_t seed = 0;
    std::string description;
    std::string name;  // stem of the source file, used in output naming

    [[nodiscard]] IterationConfig resolved_config() const { return iteration.resolved(region); }
    [[nodiscard]] SiteSystem build_sites() const;
};

[[nodiscard]] Scene load_scene(const std::filesystem::path& path);

/// Parses scene JSON text; `origin` names the source in diagnostics.
[[nodiscard]] Scene parse_scene_text(const std::string& text, const std::string& origin);

/// Writes via a temp file in the target directory plus rename, so readers
/// never observe a half-written file.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace zonekit
