#include "rrtrw/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rrtrw {

Aabb bounding_box(const Polygon& poly) {
    Aabb box{std::numeric_limits<double>::max(), std::numeric_limits<double>::max(),
             std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest()};
    for (const Point2& v : poly.vertices) {
        box.min_x = std::min(box.min_x, v.x);
        box.min_y = std::min(box.min_y, v.y);
        box.max_x = std::max(box.max_x, v.x);
        box.max_y = std::max(box.max_y, v.y);
    }
    return box;
}

Aabb bounding_box(const Segment& s) {
    return Aabb{std::min(s.a.x, s.b.x), std::min(s.a.y, s.b.y),
                std::max(s.a.x, s.b.x), std::max(s.a.y, s.b.y)};
}

bool boxes_overlap(const Aabb& a, const Aabb& b) {
    return a.min_x <= b.max_x && b.min_x <= a.max_x && a.min_y <= b.max_y && b.min_y <= a.max_y;
}

double box_distance(const Aabb& a, const Aabb& b) {
    const double dx = std::max({0.0, a.min_x - b.max_x, b.min_x - a.max_x});
    const double dy = std::max({0.0, a.min_y - b.max_y, b.min_y - a.max_y});
    return std::sqrt(dx * dx + dy * dy);
}

double squared_distance(const Point2& p, const Point2& q) {
    const double dx = p.x - q.x;
    const double dy = p.y - q.y;
    return dx * dx + dy * dy;
}

double distance(const Point2& p, const Point2& q) {
    return std::sqrt(squared_distance(p, q));
}

int orientation(const Point2& a, const Point2& b, const Point2& c) {
    const double cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    if (std::abs(cross) < kCollinearEps) return 0;
    return cross > 0.0 ? 1 : -1;
}

namespace {

// Assumes p is collinear with s; checks containment in s's bounding box.
bool on_segment_collinear(const Point2& p, const Segment& s) {
    return p.x >= std::min(s.a.x, s.b.x) && p.x <= std::max(s.a.x, s.b.x) &&
           p.y >= std::min(s.a.y, s.b.y) && p.y <= std::max(s.a.y, s.b.y);
}

Segment polygon_edge(const Polygon& poly, std::size_t i) {
    const std::size_t n = poly.vertices.size();
    return Segment{poly.vertices[i], poly.vertices[(i + 1) % n]};
}

}  // namespace

bool segments_intersect(const Segment& s1, const Segment& s2) {
    const int o1 = orientation(s1.a, s1.b, s2.a);
    const int o2 = orientation(s1.a, s1.b, s2.b);
    const int o3 = orientation(s2.a, s2.b, s1.a);
    const int o4 = orientation(s2.a, s2.b, s1.b);

    if (o1 != o2 && o3 != o4) return true;

    if (o1 == 0 && on_segment_collinear(s2.a, s1)) return true;
    if (o2 == 0 && on_segment_collinear(s2.b, s1)) return true;
    if (o3 == 0 && on_segment_collinear(s1.a, s2)) return true;
    if (o4 == 0 && on_segment_collinear(s1.b, s2)) return true;

    return false;
}

bool point_in_polygon(const Point2& p, const Polygon& poly) {
    const std::size_t n = poly.vertices.size();

    // Boundary counts as inside.
    for (std::size_t i = 0; i < n; ++i) {
        const Segment e = polygon_edge(poly, i);
        if (orientation(e.a, e.b, p) == 0 && on_segment_collinear(p, e)) return true;
    }

    // Crossing-number test with the half-open vertex rule.
    bool inside = false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = poly.vertices[i];
        const Point2& b = poly.vertices[(i + 1) % n];
        if ((a.y > p.y) != (b.y > p.y)) {
            const double x_cross = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (p.x < x_cross) inside = !inside;
        }
    }
    return inside;
}

double point_segment_distance(const Point2& p, const Segment& s) {
    const double len_sq = squared_distance(s.a, s.b);
    if (len_sq == 0.0) return distance(p, s.a);

    double t = ((p.x - s.a.x) * (s.b.x - s.a.x) + (p.y - s.a.y) * (s.b.y - s.a.y)) / len_sq;
    t = std::clamp(t, 0.0, 1.0);
    const Point2 proj{s.a.x + t * (s.b.x - s.a.x), s.a.y + t * (s.b.y - s.a.y)};
    return distance(p, proj);
}

double segment_segment_distance(const Segment& s1, const Segment& s2) {
    if (segments_intersect(s1, s2)) return 0.0;
    return std::min(std::min(point_segment_distance(s1.a, s2), point_segment_distance(s1.b, s2)),
                    std::min(point_segment_distance(s2.a, s1), point_segment_distance(s2.b, s1)));
}

double point_polygon_distance(const Point2& p, const Polygon& poly) {
    if (point_in_polygon(p, poly)) return 0.0;
    double best = std::numeric_limits<double>::max();
    for (std::size_t i = 0; i < poly.vertices.size(); ++i) {
        best = std::min(best, point_segment_distance(p, polygon_edge(poly, i)));
    }
    return best;
}

bool segment_intersects_polygon(const Segment& s, const Polygon& poly) {
    // A segment overlapping the interior without an endpoint inside must
    // cross the boundary, so endpoint containment plus edge intersection
    // covers every case.
    if (point_in_polygon(s.a, poly) || point_in_polygon(s.b, poly)) return true;
    for (std::size_t i = 0; i < poly.vertices.size(); ++i) {
        if (segments_intersect(s, polygon_edge(poly, i))) return true;
    }
    return false;
}

double segment_polygon_distance(const Segment& s, const Polygon& poly) {
    if (point_in_polygon(s.a, poly) || point_in_polygon(s.b, poly)) return 0.0;
    double best = std::numeric_limits<double>::max();
    for (std::size_t i = 0; i < poly.vertices.size(); ++i) {
        const Segment edge = polygon_edge(poly, i);
        if (segments_intersect(s, edge)) return 0.0;
        best = std::min(best, segment_segment_distance(s, edge));
    }
    return best;
}

double signed_area(const Polygon& poly) {
    double twice_area = 0.0;
    const std::size_t n = poly.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = poly.vertices[i];
        const Point2& b = poly.vertices[(i + 1) % n];
        twice_area += a.x * b.y - b.x * a.y;
    }
    return 0.5 * twice_area;
}

Polygon normalized_ccw(Polygon poly) {
    if (signed_area(poly) < 0.0) {
        std::reverse(poly.vertices.begin(), poly.vertices.end());
    }
    return poly;
}

bool is_simple(const Polygon& poly) {
    const std::size_t n = poly.vertices.size();
    if (n < 3) return false;

    for (std::size_t i = 0; i < n; ++i) {
        if (poly.vertices[i] == poly.vertices[(i + 1) % n]) return false;
    }

    for (std::size_t i = 0; i < n; ++i) {
        const Segment ei = polygon_edge(poly, i);
        for (std::size_t j = i + 1; j < n; ++j) {
            const Segment ej = polygon_edge(poly, j);
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) {
                // Adjacent edges share one vertex; a fold-back would put a
                // free endpoint of one edge on the other.
                const Point2& shared = (j == i + 1) ? ei.b : ei.a;
                const Point2& tail_i = (j == i + 1) ? ei.a : ei.b;
                const Point2& tail_j = (j == i + 1) ? ej.b : ej.a;
                if (orientation(ej.a, ej.b, tail_i) == 0 && on_segment_collinear(tail_i, ej) &&
                    !(tail_i == shared)) {
                    return false;
                }
                if (orientation(ei.a, ei.b, tail_j) == 0 && on_segment_collinear(tail_j, ei) &&
                    !(tail_j == shared)) {
                    return false;
                }
            } else if (segments_intersect(ei, ej)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace rrtrw
