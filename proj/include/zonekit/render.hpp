#pragma once

#include <string>
#include <vector>

#include "zonekit/dominance.hpp"
#include "zonekit/sites.hpp"
#include "zonekit/zone.hpp"

namespace zonekit {

struct RenderSpec {
    int canvas = 800;                  // drawing width in px; height follows the aspect
    std::vector<std::string> palette;  // empty -> built-in cycle
    double marker_radius = 3.0;        // site dot radius, px
    std::string background = "#ffffff";
    double stroke_width = 1.5;
    std::string epoch_label;           // drawn bottom-left when nonempty
};

[[nodiscard]] const std::vector<std::string>& default_palette();

/// Boundary polyline of one anchor's fan, p + T_i * theta_i in direction
/// order. Blocked directions (T_i = 0) contribute the anchor itself.
[[nodiscard]] std::vector<Point2> fan_boundary_polygon(const CellFan& fan, std::size_t anchor,
                                                       const DirectionTable& dirs);

/// One SVG document: region outline, one closed filled path per anchor (same
/// fill for all anchors of a site), site dots, background as neutral zone.
/// Byte-deterministic: fixed traversal order, 6-decimal coordinates.
[[nodiscard]] std::string render_state(const ZoneState& s, const SiteSystem& sys,
                                       const ConvexRegion& x, const DirectionTable& dirs,
                                       const RenderSpec& spec);

/// Raster dump of a mask, one rect per true cell, optional region outline.
[[nodiscard]] std::string render_mask_svg(const GridMask& mask, const RenderSpec& spec,
                                          const ConvexRegion* outline = nullptr,
                                          const std::string& fill = "#2f9e44");

}  // namespace zonekit
