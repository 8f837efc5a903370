#pragma once

#include "rrtrw/workspace.hpp"

namespace rrtrw {

inline constexpr int kBuiltinMapCount = 4;

/// One of the four bundled 600x600 px benchmark maps:
///   1 — zigzag walls with offset narrow gaps; long detours, sampling-hostile.
///   2 — moderate field of staggered blocks between start and goal.
///   3 — two near-curved arcs built from 50 axis-aligned squares.
///   4 — walled pocket around the goal whose only entrance faces away from
///       the start.
/// Throws std::out_of_range for ids outside 1..4.
WorldMap builtin_map(int id);

}  // namespace rrtrw
