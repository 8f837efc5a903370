// Seeded random generators for property tests: convex obstacle fields,
// collision-free zigzag paths, and random points/segments.
#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "rrtrw/geometry.hpp"
#include "rrtrw/path.hpp"
#include "rrtrw/rng.hpp"
#include "rrtrw/workspace.hpp"

namespace generators {

using rrtrw::Path;
using rrtrw::Point2;
using rrtrw::Polygon;
using rrtrw::SplitMix64;
using rrtrw::WorldMap;

inline double uniform(SplitMix64& rng, double lo, double hi) {
    return lo + (hi - lo) * rng.next_double();
}

inline int uniform_int(SplitMix64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng.next_double() * (hi - lo + 1));
}

/// Convex polygon: vertices at sorted random angles around a center, so the
/// result is always simple.
inline Polygon convex_polygon(SplitMix64& rng, double cx, double cy, double radius_lo,
                              double radius_hi, int min_vertices = 3, int max_vertices = 8) {
    const int n = uniform_int(rng, min_vertices, max_vertices);
    std::vector<double> angles(n);
    for (double& a : angles) a = uniform(rng, 0.0, 2.0 * 3.14159265358979323846);
    std::sort(angles.begin(), angles.end());
    // Collapse near-duplicate angles by spreading them minimally apart.
    for (int i = 1; i < n; ++i) {
        if (angles[i] - angles[i - 1] < 0.05) angles[i] = angles[i - 1] + 0.05;
    }
    Polygon poly;
    for (double a : angles) {
        const double r = uniform(rng, radius_lo, radius_hi);
        poly.vertices.push_back(Point2{cx + r * std::cos(a), cy + r * std::sin(a)});
    }
    return poly;
}

/// A workspace with a handful of convex obstacles placed fully in bounds.
/// Start and goal stay defaulted; callers position them afterwards.
inline WorldMap random_obstacle_field(SplitMix64& rng, int min_obstacles = 2,
                                      int max_obstacles = 6) {
    WorldMap map;
    map.width = 600.0;
    map.height = 600.0;
    map.name = "random";
    const int count = uniform_int(rng, min_obstacles, max_obstacles);
    std::vector<Polygon> polygons;
    for (int i = 0; i < count; ++i) {
        const double radius = uniform(rng, 15.0, 60.0);
        const double cx = uniform(rng, radius + 1.0, 600.0 - radius - 1.0);
        const double cy = uniform(rng, radius + 1.0, 600.0 - radius - 1.0);
        polygons.push_back(convex_polygon(rng, cx, cy, radius * 0.4, radius));
    }
    map.obstacles = rrtrw::ObstacleSet(std::move(polygons));
    return map;
}

/// A collision-free zigzag path on the given map with 2..max_waypoints
/// waypoints, or nothing when the sampler cannot place one.
inline std::optional<Path> random_free_path(SplitMix64& rng, const WorldMap& map,
                                            int max_waypoints = 20) {
    const auto point_free = [&](const Point2& p) {
        if (p.x < 0.0 || p.x > map.width || p.y < 0.0 || p.y > map.height) return false;
        for (const Polygon& poly : map.obstacles.polygons()) {
            if (rrtrw::point_in_polygon(p, poly)) return false;
        }
        return true;
    };

    Point2 start;
    bool found = false;
    for (int attempt = 0; attempt < 200 && !found; ++attempt) {
        start = Point2{uniform(rng, 0.0, map.width), uniform(rng, 0.0, map.height)};
        found = point_free(start);
    }
    if (!found) return std::nullopt;

    Path path;
    path.waypoints.push_back(start);
    const int target = uniform_int(rng, 2, max_waypoints);
    while (static_cast<int>(path.waypoints.size()) < target) {
        const Point2& current = path.waypoints.back();
        bool extended = false;
        for (int attempt = 0; attempt < 50 && !extended; ++attempt) {
            const double step = uniform(rng, 20.0, 80.0);
            const double angle = uniform(rng, 0.0, 2.0 * 3.14159265358979323846);
            const Point2 next{current.x + step * std::cos(angle),
                              current.y + step * std::sin(angle)};
            if (!point_free(next)) continue;
            if (rrtrw::is_trapped(current, next, map)) continue;
            path.waypoints.push_back(next);
            extended = true;
        }
        if (!extended) break;
    }
    if (path.waypoints.size() < 2) return std::nullopt;
    return path;
}

/// Obstacle field plus a valid path on it, with start/goal bound to the path
/// endpoints so the map validates.
struct PathInstance {
    WorldMap map;
    Path path;
};

inline std::optional<PathInstance> random_path_instance(SplitMix64& rng, int max_waypoints = 20) {
    WorldMap map = random_obstacle_field(rng);
    auto path = random_free_path(rng, map, max_waypoints);
    if (!path) return std::nullopt;
    map.start = path->waypoints.front();
    map.goal = path->waypoints.back();
    return PathInstance{std::move(map), std::move(*path)};
}

}  // namespace generators
