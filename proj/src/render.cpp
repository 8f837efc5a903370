#include "rrtrw/render.hpp"

#include <sstream>

#include "rrtrw/format.hpp"

namespace rrtrw {

namespace {

std::string num(double v) {
    return decimal_text(v, 9);
}

// Minimal escaping for text nodes and attribute values.
std::string escape_xml(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

void emit_marker(std::ostringstream& svg, const Point2& p, const std::string& color,
                 const std::string& label, double radius) {
    svg << "  <circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\"" << num(radius)
        << "\" fill=\"" << escape_xml(color) << "\"/>\n";
    svg << "  <text x=\"" << num(p.x) << "\" y=\"" << num(p.y + radius * 0.45)
        << "\" text-anchor=\"middle\" font-size=\"" << num(radius * 1.3)
        << "\" font-family=\"sans-serif\" fill=\"#ffffff\">" << escape_xml(label) << "</text>\n";
}

}  // namespace

std::string render_scene(const WorldMap& map, const Tree* tree,
                         const std::vector<std::pair<Path, std::string>>& paths,
                         const RenderStyle& style) {
    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(map.width)
        << "\" height=\"" << num(map.height) << "\" viewBox=\"0 0 " << num(map.width) << " "
        << num(map.height) << "\">\n";
    svg << "  <rect x=\"0\" y=\"0\" width=\"" << num(map.width) << "\" height=\""
        << num(map.height) << "\" fill=\"" << escape_xml(style.background_color)
        << "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";

    for (const Polygon& poly : map.obstacles.polygons()) {
        svg << "  <polygon points=\"";
        for (std::size_t i = 0; i < poly.vertices.size(); ++i) {
            if (i != 0) svg << ' ';
            svg << num(poly.vertices[i].x) << ',' << num(poly.vertices[i].y);
        }
        svg << "\" fill=\"" << escape_xml(style.obstacle_fill) << "\" stroke=\""
            << escape_xml(style.obstacle_stroke) << "\" stroke-width=\""
            << num(style.obstacle_stroke_width) << "\"/>\n";
    }

    if (tree != nullptr) {
        for (std::size_t i = 1; i < tree->size(); ++i) {
            const Point2& child = tree->positions[i];
            const Point2& parent = tree->positions[tree->parents[i]];
            svg << "  <line x1=\"" << num(parent.x) << "\" y1=\"" << num(parent.y) << "\" x2=\""
                << num(child.x) << "\" y2=\"" << num(child.y) << "\" stroke=\""
                << escape_xml(style.tree_edge_color) << "\" stroke-width=\""
                << num(style.tree_stroke_width) << "\"/>\n";
        }
    }

    for (std::size_t k = 0; k < paths.size(); ++k) {
        const auto& [path, label] = paths[k];
        const std::string& color =
            style.path_colors.empty() ? std::string("#000000")
                                      : style.path_colors[k % style.path_colors.size()];
        svg << "  <polyline class=\"" << escape_xml(label) << "\" points=\"";
        for (std::size_t i = 0; i < path.waypoints.size(); ++i) {
            if (i != 0) svg << ' ';
            svg << num(path.waypoints[i].x) << ',' << num(path.waypoints[i].y);
        }
        svg << "\" fill=\"none\" stroke=\"" << escape_xml(color) << "\" stroke-width=\""
            << num(style.path_stroke_width) << "\"/>\n";
    }

    emit_marker(svg, map.start, style.start_color, "S", style.endpoint_radius);
    emit_marker(svg, map.goal, style.goal_color, "G", style.endpoint_radius);

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace rrtrw
