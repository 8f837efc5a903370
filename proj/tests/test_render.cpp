#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "rrtrw/builtin_maps.hpp"
#include "rrtrw/render.hpp"
#include "rrtrw/rewire.hpp"
#include "rrtrw/rrt.hpp"

using namespace rrtrw;

namespace {

int count_occurrences(const std::string& text, const std::string& needle) {
    int count = 0;
    std::size_t pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

int polyline_point_count(const std::string& svg, const std::string& class_name) {
    const std::string marker = "<polyline class=\"" + class_name + "\" points=\"";
    const std::size_t begin = svg.find(marker);
    REQUIRE(begin != std::string::npos);
    const std::size_t points_begin = begin + marker.size();
    const std::size_t points_end = svg.find('"', points_begin);
    const std::string points = svg.substr(points_begin, points_end - points_begin);
    return count_occurrences(points, ",");
}

WorldMap one_square_map() {
    WorldMap map;
    map.width = 600.0;
    map.height = 600.0;
    map.name = "one";
    map.start = Point2{20.0, 20.0};
    map.goal = Point2{580.0, 580.0};
    map.obstacles = ObstacleSet({Polygon{{{40, 40}, {60, 40}, {60, 60}, {40, 60}}}});
    validate_map(map);
    return map;
}

}  // namespace

TEST_CASE("scene with one obstacle renders one polygon and two circles") {
    const std::string svg = render_scene(one_square_map(), nullptr, {});
    CHECK(count_occurrences(svg, "<polygon") == 1);
    CHECK(count_occurrences(svg, "<circle") == 2);
    CHECK(count_occurrences(svg, "<line") == 0);
    CHECK(count_occurrences(svg, "<polyline") == 0);
    CHECK(svg.find("viewBox=\"0 0 600 600\"") != std::string::npos);
    CHECK(svg.find(">S</text>") != std::string::npos);
    CHECK(svg.find(">G</text>") != std::string::npos);
    CHECK(svg.rfind("<?xml", 0) == 0);
}

TEST_CASE("rendering is deterministic") {
    const WorldMap map = builtin_map(3);
    const std::string a = render_scene(map, nullptr, {});
    const std::string b = render_scene(map, nullptr, {});
    CHECK(a == b);
    CHECK(count_occurrences(a, "<polygon") == 50);
}

TEST_CASE("tree edges and overlaid paths appear once each") {
    const WorldMap map = builtin_map(2);
    PlannerConfig cfg;
    cfg.seed = 21;
    const PlanOutcome outcome = plan(map, cfg);
    REQUIRE(outcome.success);
    const auto [rewired, report] = post_triangular_rewire(*outcome.path, map);

    const std::string svg = render_scene(map, &outcome.tree,
                                         {{*outcome.path, "raw"}, {rewired, "rewired"}});
    CHECK(count_occurrences(svg, "<line") == static_cast<int>(outcome.tree.size()) - 1);
    CHECK(count_occurrences(svg, "<polyline") == 2);
    CHECK(count_occurrences(svg, "<polygon") ==
          static_cast<int>(map.obstacles.size()));

    const int raw_points = polyline_point_count(svg, "raw");
    const int rewired_points = polyline_point_count(svg, "rewired");
    CHECK(raw_points == static_cast<int>(outcome.path->waypoints.size()));
    CHECK(rewired_points == static_cast<int>(rewired.waypoints.size()));
    CHECK(rewired_points <= raw_points);
}

TEST_CASE("labels are escaped") {
    const WorldMap map = one_square_map();
    const Path path{{{20, 20}, {100, 100}}};
    const std::string svg = render_scene(map, nullptr, {{path, "a<b&c"}});
    CHECK(svg.find("class=\"a&lt;b&amp;c\"") != std::string::npos);
}
