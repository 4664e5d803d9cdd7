#pragma once

// SVG 1.1 rendering of a construction: both hexagons, the six corner
// triangles, the named points, and the final covering boundary with true
// elliptical-arc path commands.  Supports zooming on any named point so the
// microscopic removed regions are visible.

#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "covering/cover.hpp"
#include "covering/geom.hpp"

namespace covering::svg {

struct SvgOptions {
    double center_x = 0.0;
    double center_y = 0.0;
    double scale = 1.0; // 1 = whole construction; s > 1 zooms in by s
};

namespace detail {

inline std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// SVG's y axis points down; emit mathematical coordinates with y negated.
inline std::string xy(const Point& p) {
    return fmt(p.x.to_double()) + "," + fmt(-p.y.to_double());
}

inline std::string polygon(const std::vector<Point>& pts, const std::string& style) {
    std::string s = "  <polygon points=\"";
    for (size_t i = 0; i < pts.size(); ++i) {
        if (i) s += " ";
        s += xy(pts[i]);
    }
    s += "\" " + style + "/>\n";
    return s;
}

inline std::string boundary_path(const CoveringBoundary& boundary) {
    std::string d = "M " + xy(element_start(boundary.elements.front()));
    for (const auto& e : boundary.elements) {
        if (std::holds_alternative<LineSegment>(e)) {
            d += " L " + xy(std::get<LineSegment>(e).end);
        } else {
            const auto& a = std::get<ArcSegment>(e);
            const double r = a.radius.to_double();
            // With y negated a counterclockwise arc runs in SVG's sweep-0
            // direction; all construction arcs are minor (large-arc 0).
            const char* sweep = a.orientation == ArcOrientation::counterclockwise ? "0" : "1";
            d += " A " + fmt(r) + " " + fmt(r) + " 0 0 " + std::string(sweep) + " " + xy(a.end);
        }
    }
    d += " Z";
    return d;
}

} // namespace detail

inline std::string render(const cover::HexPair& hp, const cover::ConstructionReport& report,
                          const SvgOptions& opts) {
    const double half = 0.75 / opts.scale;
    const double x0 = opts.center_x - half;
    const double y0 = -opts.center_y - half;
    const double stroke = half / 250.0;
    const double dot = half / 80.0;
    const double font = half / 12.0;

    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" "
         "height=\"800\" viewBox=\"" +
         detail::fmt(x0) + " " + detail::fmt(y0) + " " + detail::fmt(2 * half) + " " +
         detail::fmt(2 * half) + "\">\n";

    const std::string hex_style =
        "fill=\"none\" stroke=\"#888888\" stroke-width=\"" + detail::fmt(stroke) + "\"";
    const std::string rot_style =
        "fill=\"none\" stroke=\"#bbaa66\" stroke-width=\"" + detail::fmt(stroke) + "\"";
    const std::string tri_style =
        "fill=\"#d0e4f7\" stroke=\"#5588bb\" stroke-width=\"" + detail::fmt(stroke / 2) + "\"";
    const std::string cover_style = "fill=\"none\" stroke=\"#cc3333\" stroke-width=\"" +
                                    detail::fmt(1.5 * stroke) + "\"";

    std::vector<Point> hexagon(hp.hexagon.begin(), hp.hexagon.end());
    std::vector<Point> rotated(hp.rotated.begin(), hp.rotated.end());
    s += detail::polygon(hexagon, hex_style);
    s += detail::polygon(rotated, rot_style);
    for (const auto& tri : report.points.triangles) {
        s += detail::polygon({tri[0], tri[1], tri[2]}, tri_style);
    }
    s += "  <path d=\"" + detail::boundary_path(report.boundary) + "\" " + cover_style + "/>\n";

    const std::pair<const char*, const Point*> named[] = {
        {"O", &report.points.O}, {"N", &report.points.N}, {"L", &report.points.L},
        {"M", &report.points.M}, {"W", &report.points.W}, {"X", &report.points.X},
        {"Y", &report.points.Y}};
    for (const auto& [name, p] : named) {
        s += "  <circle cx=\"" + detail::fmt(p->x.to_double()) + "\" cy=\"" +
             detail::fmt(-p->y.to_double()) + "\" r=\"" + detail::fmt(dot) +
             "\" fill=\"#222222\"/>\n";
        s += "  <text x=\"" + detail::fmt(p->x.to_double() + 1.5 * dot) + "\" y=\"" +
             detail::fmt(-p->y.to_double() - 1.5 * dot) + "\" font-size=\"" + detail::fmt(font) +
             "\" fill=\"#222222\">" + name + "</text>\n";
    }
    const char* corner_names[6] = {"A1", "B1", "C1", "D1", "E1", "F1"};
    for (int k = 0; k < 6; ++k) {
        const Point& p = hp.hexagon[static_cast<size_t>(k)];
        s += "  <circle cx=\"" + detail::fmt(p.x.to_double()) + "\" cy=\"" +
             detail::fmt(-p.y.to_double()) + "\" r=\"" + detail::fmt(dot) +
             "\" fill=\"#555555\"/>\n";
        s += "  <text x=\"" + detail::fmt(p.x.to_double() + 1.5 * dot) + "\" y=\"" +
             detail::fmt(-p.y.to_double() - 1.5 * dot) + "\" font-size=\"" + detail::fmt(font) +
             "\" fill=\"#555555\">" + corner_names[k] + "</text>\n";
    }
    s += "</svg>\n";
    return s;
}

} // namespace covering::svg
