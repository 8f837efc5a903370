#include "rrtrw/builtin_maps.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace rrtrw {

namespace {

constexpr double kPi = 3.14159265358979323846;

Polygon rect(double x0, double y0, double x1, double y1) {
    return Polygon{{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}};
}

Polygon square_centered(double cx, double cy, double side) {
    const double h = side / 2.0;
    return rect(cx - h, cy - h, cx + h, cy + h);
}

// Axis-aligned squares placed along a circular arc. Angles are degrees in
// the screen frame (y down), start..stop inclusive.
void arc_of_squares(std::vector<Polygon>& out, double cx, double cy, double radius,
                    double start_deg, double stop_deg, int count, double side) {
    for (int k = 0; k < count; ++k) {
        const double deg = start_deg + (stop_deg - start_deg) * k / (count - 1);
        const double rad = deg * kPi / 180.0;
        const double x = cx + radius * std::cos(rad);
        const double y = cy + radius * std::sin(rad);
        out.push_back(square_centered(std::round(x * 10.0) / 10.0, std::round(y * 10.0) / 10.0,
                                      side));
    }
}

WorldMap make_map(std::string name, Point2 start, Point2 goal, std::vector<Polygon> polygons,
                  double epsilon = 0.0) {
    WorldMap map;
    map.width = 600.0;
    map.height = 600.0;
    map.name = std::move(name);
    map.start = start;
    map.goal = goal;
    map.epsilon = epsilon;
    map.obstacles = ObstacleSet(std::move(polygons));
    validate_map(map);
    return map;
}

// Two full-width walls with offset gaps force a long zigzag; the gaps are
// narrow enough that uniform sampling rarely lands a useful extension.
WorldMap make_map1() {
    std::vector<Polygon> obstacles;
    obstacles.push_back(rect(0.0, 190.0, 550.0, 210.0));
    obstacles.push_back(rect(50.0, 390.0, 600.0, 410.0));
    return make_map("map1", Point2{50.0, 60.0}, Point2{550.0, 540.0}, std::move(obstacles));
}

// A moderate field of staggered blocks; the straight start-goal line is
// blocked but many routes of similar cost exist.
WorldMap make_map2() {
    std::vector<Polygon> obstacles;
    obstacles.push_back(rect(180.0, 60.0, 220.0, 380.0));
    obstacles.push_back(rect(330.0, 220.0, 370.0, 540.0));
    obstacles.push_back(rect(100.0, 450.0, 150.0, 500.0));
    obstacles.push_back(rect(420.0, 100.0, 470.0, 150.0));
    obstacles.push_back(rect(260.0, 60.0, 300.0, 100.0));
    obstacles.push_back(rect(460.0, 420.0, 510.0, 470.0));
    return make_map("map2", Point2{50.0, 300.0}, Point2{550.0, 300.0}, std::move(obstacles));
}

// Fifty squares laid out as two concentric arcs that read as curved walls:
// the outer arc opens to the north, the inner arc to the east, so the path
// has to wind into the center.
WorldMap make_map3() {
    std::vector<Polygon> obstacles;
    arc_of_squares(obstacles, 300.0, 300.0, 170.0, 300.0, 600.0, 30, 22.0);
    arc_of_squares(obstacles, 300.0, 300.0, 90.0, 30.0, 330.0, 20, 22.0);
    return make_map("map3", Point2{80.0, 300.0}, Point2{300.0, 300.0}, std::move(obstacles));
}

// A walled pocket around the goal; the single narrow entrance faces east,
// away from the start, so the tree has to wrap around the pocket and thread
// a tight corridor before it can turn back west.
WorldMap make_map4() {
    std::vector<Polygon> obstacles;
    obstacles.push_back(rect(300.0, 160.0, 320.0, 440.0));  // west wall
    obstacles.push_back(rect(300.0, 160.0, 550.0, 180.0));  // north wall
    obstacles.push_back(rect(300.0, 420.0, 550.0, 440.0));  // south wall
    obstacles.push_back(rect(530.0, 160.0, 550.0, 278.0));  // east wall, upper stub
    obstacles.push_back(rect(530.0, 322.0, 550.0, 440.0));  // east wall, lower stub
    return make_map("map4", Point2{80.0, 300.0}, Point2{340.0, 300.0}, std::move(obstacles));
}

}  // namespace

WorldMap builtin_map(int id) {
    switch (id) {
        case 1: return make_map1();
        case 2: return make_map2();
        case 3: return make_map3();
        case 4: return make_map4();
        default:
            throw std::out_of_range("builtin_map: unknown map id " + std::to_string(id) +
                                    " (expected 1..4)");
    }
}

}  // namespace rrtrw
