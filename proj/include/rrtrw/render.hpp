#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rrtrw/path.hpp"
#include "rrtrw/rrt.hpp"
#include "rrtrw/workspace.hpp"

namespace rrtrw {

/// Colors and stroke widths for render_scene. Colors are CSS color strings.
struct RenderStyle {
    std::string background_color = "#ffffff";
    std::string start_color = "#2ca02c";  // green start marker
    std::string goal_color = "#8a2be2";   // purple goal marker
    std::string obstacle_fill = "#1a1a1a";
    std::string obstacle_stroke = "#e6b800";
    std::string tree_edge_color = "#a8bccb";
    /// Path colors by overlay position: first path, second path, then
    /// cycling.
    std::vector<std::string> path_colors{"#d62728", "#1f77b4"};
    double obstacle_stroke_width = 1.0;
    double tree_stroke_width = 0.6;
    double path_stroke_width = 2.5;
    double endpoint_radius = 8.0;
};

/// Renders a standalone SVG 1.1 document of the map with optional tree edges
/// and labeled path overlays. Output is deterministic: identical inputs give
/// byte-identical text.
std::string render_scene(const WorldMap& map, const Tree* tree,
                         const std::vector<std::pair<Path, std::string>>& paths,
                         const RenderStyle& style = RenderStyle{});

}  // namespace rrtrw
