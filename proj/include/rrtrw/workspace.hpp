#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "rrtrw/geometry.hpp"

namespace rrtrw {

/// Malformed map text (bad syntax, missing or mistyped fields).
class MapParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Structurally valid map text describing an invalid world (start inside an
/// obstacle, non-simple polygon, out-of-bounds vertex, ...). The message
/// names the offending element.
class MapValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The obstacle region: simple polygons, normalized to counter-clockwise
/// vertex order, with cached bounding boxes for collision queries.
class ObstacleSet {
public:
    ObstacleSet() = default;
    explicit ObstacleSet(std::vector<Polygon> polygons);

    const std::vector<Polygon>& polygons() const { return polygons_; }
    const std::vector<Aabb>& boxes() const { return boxes_; }
    std::size_t size() const { return polygons_.size(); }

    friend bool operator==(const ObstacleSet& a, const ObstacleSet& b) {
        return a.polygons_ == b.polygons_;
    }

private:
    std::vector<Polygon> polygons_;
    std::vector<Aabb> boxes_;
};

/// A planning workspace: bounds, start, goal, obstacles, and the minimum
/// clearance epsilon (px). Immutable after load; epsilon = 0 means plain
/// intersection collision checking.
struct WorldMap {
    double width = 0.0;
    double height = 0.0;
    Point2 start;
    Point2 goal;
    ObstacleSet obstacles;
    double epsilon = 0.0;
    std::string name;
};

/// True iff the straight segment q1-q2 violates clearance against any
/// obstacle: closer than map.epsilon when epsilon > 0, otherwise touching or
/// crossing an obstacle. False means the motion is collision-free.
bool is_trapped(const Point2& q1, const Point2& q2, const WorldMap& map);

/// Throws MapValidationError when any invariant is violated; the message
/// names the offending element ("start", "goal", "obstacle 3 vertex 1", ...).
void validate_map(const WorldMap& map);

/// Parses and validates a map document (see save_map for the format).
WorldMap load_map(const std::string& text);
WorldMap load_map_file(const std::filesystem::path& path);

/// Serializes a map as a JSON document. Coordinates are written as decimal
/// text with 9 significant digits; load_map(save_map(m)) == m for maps whose
/// coordinates carry at most that many digits.
std::string save_map(const WorldMap& map);

}  // namespace rrtrw
