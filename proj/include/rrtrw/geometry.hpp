#pragma once

#include <vector>

namespace rrtrw {

// Absolute tolerance for collinearity tests on cross products. Workspace
// coordinates are pixel-scale (<= ~600), so an absolute epsilon is adequate.
inline constexpr double kCollinearEps = 1e-9;

/// A point in the 2D workspace. Units are pixels, origin at the top-left
/// corner, x rightward, y downward.
struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

/// A closed line segment. Degenerate segments (a == b) are allowed.
struct Segment {
    Point2 a;
    Point2 b;
};

/// A simple polygon given by its vertex ring (implicitly closed).
struct Polygon {
    std::vector<Point2> vertices;

    friend bool operator==(const Polygon&, const Polygon&) = default;
};

/// Axis-aligned bounding box.
struct Aabb {
    double min_x = 0.0;
    double min_y = 0.0;
    double max_x = 0.0;
    double max_y = 0.0;
};

Aabb bounding_box(const Polygon& poly);
Aabb bounding_box(const Segment& s);
bool boxes_overlap(const Aabb& a, const Aabb& b);
double box_distance(const Aabb& a, const Aabb& b);

double distance(const Point2& p, const Point2& q);
double squared_distance(const Point2& p, const Point2& q);

/// Orientation of the ordered triple (a, b, c) by the sign of the cross
/// product (b - a) x (c - a): +1, -1, or 0 when |cross| < kCollinearEps.
int orientation(const Point2& a, const Point2& b, const Point2& c);

/// True iff the closed segments share at least one point. Touching at an
/// endpoint counts; collinear overlap counts. Degenerate segments behave as
/// points.
bool segments_intersect(const Segment& s1, const Segment& s2);

/// True iff p is strictly inside poly or on its boundary.
bool point_in_polygon(const Point2& p, const Polygon& poly);

double point_segment_distance(const Point2& p, const Segment& s);
double segment_segment_distance(const Segment& s1, const Segment& s2);

/// Distance from p to the filled polygon: 0 when p is inside or on the
/// boundary, otherwise the distance to the nearest boundary point.
double point_polygon_distance(const Point2& p, const Polygon& poly);

/// True iff s touches, crosses, or lies inside the filled polygon.
bool segment_intersects_polygon(const Segment& s, const Polygon& poly);

/// Minimum distance between any point of s and the filled polygon: 0 when s
/// touches, crosses, or lies inside poly.
double segment_polygon_distance(const Segment& s, const Polygon& poly);

/// Shoelace area: positive for counter-clockwise vertex order (in the
/// raw coordinate frame).
double signed_area(const Polygon& poly);

/// Returns poly with its vertex ring in counter-clockwise order
/// (positive signed area), reversing if needed.
Polygon normalized_ccw(Polygon poly);

/// True iff the ring has >= 3 vertices, no repeated consecutive vertices,
/// no fold-backs at a vertex, and no crossing between non-adjacent edges.
bool is_simple(const Polygon& poly);

}  // namespace rrtrw
