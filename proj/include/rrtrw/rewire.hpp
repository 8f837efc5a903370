#pragma once

#include <cstddef>
#include <utility>

#include "rrtrw/path.hpp"
#include "rrtrw/workspace.hpp"

namespace rrtrw {

/// Bookkeeping for one post_triangular_rewire run.
struct RewireReport {
    double input_length_px = 0.0;
    double output_length_px = 0.0;
    int waypoints_removed = 0;
    int passes = 0;
    double rewire_time_ms = 0.0;
};

/// One rewiring move at focus index t: the detour through waypoint t+1 is
/// replaced by the direct edge (t, t+2), i.e. waypoint t+1 is removed.
/// By the triangle inequality the path never gets longer.
/// Throws std::out_of_range unless waypoints t, t+1 and t+2 all exist.
Path rewire_step(Path p, std::size_t t);

/// Shortens a path to a fixpoint by repeatedly bypassing waypoints whose
/// neighbors can see each other.
///
/// Each pass walks a focus index t from the front: while the direct segment
/// from waypoint t to waypoint t+2 is collision-free, waypoint t+1 is
/// removed and the shortened triple at the same t is retried; otherwise t
/// advances. A pass ends when waypoint t+1 is the last one, and passes
/// repeat until one completes without any modification.
///
/// Endpoints are preserved, every output edge is collision-free, and the
/// output length never exceeds the input length. Throws
/// std::invalid_argument when some input edge already collides.
std::pair<Path, RewireReport> post_triangular_rewire(const Path& p, const WorldMap& map);

}  // namespace rrtrw
