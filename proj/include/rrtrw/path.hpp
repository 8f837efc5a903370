#pragma once

#include <vector>

#include "rrtrw/geometry.hpp"

namespace rrtrw {

/// An ordered waypoint list from start to goal. Consecutive waypoints are
/// connected by straight segments.
struct Path {
    std::vector<Point2> waypoints;

    friend bool operator==(const Path&, const Path&) = default;
};

/// Sum of the Euclidean lengths of consecutive waypoint pairs, px.
double path_length(const Path& p);

}  // namespace rrtrw
