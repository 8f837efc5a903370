#include "rrtrw/workspace.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rrtrw/format.hpp"

namespace rrtrw {

ObstacleSet::ObstacleSet(std::vector<Polygon> polygons) : polygons_(std::move(polygons)) {
    for (Polygon& poly : polygons_) {
        poly = normalized_ccw(std::move(poly));
    }
    boxes_.reserve(polygons_.size());
    for (const Polygon& poly : polygons_) {
        boxes_.push_back(bounding_box(poly));
    }
}

bool is_trapped(const Point2& q1, const Point2& q2, const WorldMap& map) {
    const Segment seg{q1, q2};
    const Aabb seg_box = bounding_box(seg);
    const auto& polygons = map.obstacles.polygons();
    const auto& boxes = map.obstacles.boxes();

    if (map.epsilon > 0.0) {
        for (std::size_t i = 0; i < polygons.size(); ++i) {
            if (box_distance(seg_box, boxes[i]) >= map.epsilon) continue;
            if (segment_polygon_distance(seg, polygons[i]) < map.epsilon) return true;
        }
    } else {
        for (std::size_t i = 0; i < polygons.size(); ++i) {
            if (!boxes_overlap(seg_box, boxes[i])) continue;
            if (segment_intersects_polygon(seg, polygons[i])) return true;
        }
    }
    return false;
}

namespace {

bool is_finite(const Point2& p) {
    return std::isfinite(p.x) && std::isfinite(p.y);
}

void check_endpoint(const char* label, const Point2& p, const WorldMap& map) {
    if (!is_finite(p)) {
        throw MapValidationError(std::string(label) + " has non-finite coordinates");
    }
    if (p.x < 0.0 || p.x > map.width || p.y < 0.0 || p.y > map.height) {
        throw MapValidationError(std::string(label) + " lies outside the workspace bounds");
    }
    const auto& polygons = map.obstacles.polygons();
    for (std::size_t i = 0; i < polygons.size(); ++i) {
        const bool blocked = map.epsilon > 0.0
                                 ? point_polygon_distance(p, polygons[i]) < map.epsilon
                                 : point_in_polygon(p, polygons[i]);
        if (blocked) {
            throw MapValidationError(std::string(label) + " violates clearance against obstacle " +
                                     std::to_string(i));
        }
    }
}

}  // namespace

void validate_map(const WorldMap& map) {
    if (!std::isfinite(map.width) || map.width <= 0.0 || !std::isfinite(map.height) ||
        map.height <= 0.0) {
        throw MapValidationError("width/height must be positive finite numbers");
    }
    if (!std::isfinite(map.epsilon) || map.epsilon < 0.0) {
        throw MapValidationError("epsilon must be a non-negative finite number");
    }

    const auto& polygons = map.obstacles.polygons();
    for (std::size_t i = 0; i < polygons.size(); ++i) {
        const std::string tag = "obstacle " + std::to_string(i);
        if (polygons[i].vertices.size() < 3) {
            throw MapValidationError(tag + " has fewer than 3 vertices");
        }
        for (std::size_t j = 0; j < polygons[i].vertices.size(); ++j) {
            const Point2& v = polygons[i].vertices[j];
            if (!is_finite(v)) {
                throw MapValidationError(tag + " vertex " + std::to_string(j) + " is non-finite");
            }
            if (v.x < 0.0 || v.x > map.width || v.y < 0.0 || v.y > map.height) {
                throw MapValidationError(tag + " vertex " + std::to_string(j) +
                                         " lies outside the workspace bounds");
            }
        }
        if (!is_simple(polygons[i])) {
            throw MapValidationError(tag + " is not a simple polygon");
        }
    }

    check_endpoint("start", map.start, map);
    check_endpoint("goal", map.goal, map);
}

namespace {

Point2 parse_point(const nlohmann::json& value, const std::string& what) {
    if (!value.is_array() || value.size() != 2 || !value[0].is_number() || !value[1].is_number()) {
        throw MapParseError(what + " must be a [x, y] number pair");
    }
    return Point2{value[0].get<double>(), value[1].get<double>()};
}

}  // namespace

WorldMap load_map(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw MapParseError(std::string("malformed map document: ") + e.what());
    }
    if (!doc.is_object()) throw MapParseError("map document must be a JSON object");

    const auto require = [&](const char* key) -> const nlohmann::json& {
        if (!doc.contains(key)) throw MapParseError(std::string("missing field '") + key + "'");
        return doc.at(key);
    };

    WorldMap map;
    if (!require("name").is_string()) throw MapParseError("'name' must be a string");
    map.name = doc["name"].get<std::string>();
    if (!require("width").is_number()) throw MapParseError("'width' must be a number");
    map.width = doc["width"].get<double>();
    if (!require("height").is_number()) throw MapParseError("'height' must be a number");
    map.height = doc["height"].get<double>();
    map.epsilon = 0.0;
    if (doc.contains("epsilon")) {
        if (!doc["epsilon"].is_number()) throw MapParseError("'epsilon' must be a number");
        map.epsilon = doc["epsilon"].get<double>();
    }
    map.start = parse_point(require("start"), "'start'");
    map.goal = parse_point(require("goal"), "'goal'");

    if (!require("obstacles").is_array()) throw MapParseError("'obstacles' must be an array");
    std::vector<Polygon> polygons;
    for (std::size_t i = 0; i < doc["obstacles"].size(); ++i) {
        const auto& entry = doc["obstacles"][i];
        if (!entry.is_array()) {
            throw MapParseError("obstacle " + std::to_string(i) + " must be an array of vertices");
        }
        Polygon poly;
        for (const auto& vertex : entry) {
            poly.vertices.push_back(
                parse_point(vertex, "obstacle " + std::to_string(i) + " vertex"));
        }
        polygons.push_back(std::move(poly));
    }
    map.obstacles = ObstacleSet(std::move(polygons));

    validate_map(map);
    return map;
}

WorldMap load_map_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw MapParseError("cannot open map file: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_map(buffer.str());
}

std::string save_map(const WorldMap& map) {
    const auto num = [](double v) { return decimal_text(v, 9); };

    std::ostringstream out;
    out << "{\n";
    out << "  \"name\": " << nlohmann::json(map.name).dump() << ",\n";
    out << "  \"width\": " << num(map.width) << ",\n";
    out << "  \"height\": " << num(map.height) << ",\n";
    out << "  \"epsilon\": " << num(map.epsilon) << ",\n";
    out << "  \"start\": [" << num(map.start.x) << ", " << num(map.start.y) << "],\n";
    out << "  \"goal\": [" << num(map.goal.x) << ", " << num(map.goal.y) << "],\n";
    out << "  \"obstacles\": [";
    const auto& polygons = map.obstacles.polygons();
    for (std::size_t i = 0; i < polygons.size(); ++i) {
        out << (i == 0 ? "\n" : ",\n") << "    [";
        const auto& vertices = polygons[i].vertices;
        for (std::size_t j = 0; j < vertices.size(); ++j) {
            if (j != 0) out << ", ";
            out << "[" << num(vertices[j].x) << ", " << num(vertices[j].y) << "]";
        }
        out << "]";
    }
    out << (polygons.empty() ? "]\n" : "\n  ]\n");
    out << "}\n";
    return out.str();
}

}  // namespace rrtrw
