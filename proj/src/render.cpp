#include "zonekit/render.hpp"

#include <cmath>
#include <cstdio>

#include "zonekit/errors.hpp"

namespace zonekit {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (const char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

// World-to-pixel mapping with a 5% margin and a flipped y axis.
struct Mapper {
    Point2 lo;
    double margin = 0.0;
    double scale = 1.0;
    int width = 0;
    int height = 0;

    Mapper(Point2 box_min, Point2 box_max, int canvas) {
        lo = box_min;
        const double span_x = box_max.x - box_min.x;
        const double span_y = box_max.y - box_min.y;
        margin = 0.05 * std::max(span_x, span_y);
        scale = canvas / (span_x + 2.0 * margin);
        width = canvas;
        height = static_cast<int>(std::lround(scale * (span_y + 2.0 * margin)));
    }

    [[nodiscard]] Point2 to_px(Point2 w) const {
        return {(w.x - lo.x + margin) * scale, height - (w.y - lo.y + margin) * scale};
    }
};

std::string path_from(const std::vector<Point2>& world, const Mapper& map) {
    std::string d;
    d.reserve(world.size() * 22 + 4);
    for (std::size_t i = 0; i < world.size(); ++i) {
        const Point2 q = map.to_px(world[i]);
        d += (i == 0 ? "M" : " L");
        d += fmt(q.x);
        d += ",";
        d += fmt(q.y);
    }
    d += " Z";
    return d;
}

std::vector<Point2> region_outline(const ConvexRegion& x) {
    if (x.is_polygon()) return x.vertices();
    std::vector<Point2> pts;
    pts.reserve(256);
    const DirectionTable dirs = sample_directions(x.norm_ref(), 256);
    for (const Direction& d : dirs) {
        pts.push_back(x.ball_center() + x.ball_radius() * d.vector);
    }
    return pts;
}

std::string svg_open(const Mapper& map, const RenderSpec& spec) {
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"";
    out += std::to_string(map.width);
    out += "\" height=\"";
    out += std::to_string(map.height);
    out += "\" viewBox=\"0 0 " + std::to_string(map.width) + " " + std::to_string(map.height) +
           "\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(map.width) + "\" height=\"" +
           std::to_string(map.height) + "\" fill=\"" + spec.background + "\"/>\n";
    return out;
}

void check_spec(const RenderSpec& spec) {
    if (spec.canvas < 100) throw ValidationError("render: canvas must be at least 100 px");
}

std::string label_text(const Mapper& map, const RenderSpec& spec) {
    if (spec.epoch_label.empty()) return {};
    return "<text x=\"8\" y=\"" + std::to_string(map.height - 8) +
           "\" font-family=\"monospace\" font-size=\"14\" fill=\"#444444\">" +
           xml_escape(spec.epoch_label) + "</text>\n";
}

}  // namespace

const std::vector<std::string>& default_palette() {
    static const std::vector<std::string> colors = {
        "#66c2a5", "#fc8d62", "#8da0cb", "#e78ac3", "#a6d854",
        "#ffd92f", "#e5c494", "#b3b3cc", "#7fc97f", "#f4a6a6",
    };
    return colors;
}

std::vector<Point2> fan_boundary_polygon(const CellFan& fan, std::size_t anchor,
                                         const DirectionTable& dirs) {
    std::vector<Point2> out;
    out.reserve(dirs.size());
    const Point2 p = fan.anchors[anchor];
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        out.push_back(p + fan.radii[anchor][i] * dirs[i].vector);
    }
    return out;
}

std::string render_state(const ZoneState& s, const SiteSystem& sys, const ConvexRegion& x,
                         const DirectionTable& dirs, const RenderSpec& spec) {
    check_spec(spec);
    if (s.cells.size() != sys.sites.size()) {
        throw InternalError("render_state: state and site system disagree on cell count");
    }
    const Mapper map(x.bbox_min(), x.bbox_max(), spec.canvas);
    const auto& palette = spec.palette.empty() ? default_palette() : spec.palette;

    std::string out = svg_open(map, spec);
    for (std::size_t k = 0; k < s.cells.size(); ++k) {
        const std::string& color = palette[k % palette.size()];
        for (std::size_t a = 0; a < s.cells[k].anchors.size(); ++a) {
            out += "<path d=\"" + path_from(fan_boundary_polygon(s.cells[k], a, dirs), map) +
                   "\" fill=\"" + color + "\" stroke=\"none\"/>\n";
        }
    }
    out += "<path d=\"" + path_from(region_outline(x), map) +
           "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"" + fmt(spec.stroke_width) +
           "\"/>\n";
    for (const auto& site : sys.sites) {
        for (const Point2& q : site) {
            const Point2 c = map.to_px(q);
            out += "<circle cx=\"" + fmt(c.x) + "\" cy=\"" + fmt(c.y) + "\" r=\"" +
                   fmt(spec.marker_radius) + "\" fill=\"#111111\"/>\n";
        }
    }
    out += label_text(map, spec);
    out += "</svg>\n";
    return out;
}

std::string render_mask_svg(const GridMask& mask, const RenderSpec& spec,
                            const ConvexRegion* outline, const std::string& fill) {
    check_spec(spec);
    const Mapper map(mask.box_min, mask.box_max, spec.canvas);
    const double cell_w = (mask.box_max.x - mask.box_min.x) / mask.resolution * map.scale;
    const double cell_h = (mask.box_max.y - mask.box_min.y) / mask.resolution * map.scale;

    std::string out = svg_open(map, spec);
    for (int iy = 0; iy < mask.resolution; ++iy) {
        for (int ix = 0; ix < mask.resolution; ++ix) {
            if (!mask.at(ix, iy)) continue;
            const Point2 c = map.to_px(mask.cell_center(ix, iy));
            out += "<rect x=\"" + fmt(c.x - 0.5 * cell_w) + "\" y=\"" + fmt(c.y - 0.5 * cell_h) +
                   "\" width=\"" + fmt(cell_w) + "\" height=\"" + fmt(cell_h) + "\" fill=\"" +
                   fill + "\"/>\n";
        }
    }
    if (outline != nullptr) {
        out += "<path d=\"" + path_from(region_outline(*outline), map) +
               "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"" + fmt(spec.stroke_width) +
               "\"/>\n";
    }
    out += label_text(map, spec);
    out += "</svg>\n";
    return out;
}

}  // namespace zonekit
