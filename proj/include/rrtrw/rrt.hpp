#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rrtrw/path.hpp"
#include "rrtrw/rng.hpp"
#include "rrtrw/workspace.hpp"

namespace rrtrw {

/// A rooted tree stored as flat arrays: positions plus parent indices.
/// Node 0 is the root; parents always precede children, so the structure is
/// acyclic by construction.
struct Tree {
    static constexpr int kRootParent = -1;

    std::vector<Point2> positions;
    std::vector<int> parents;

    int add_node(const Point2& p, int parent) {
        positions.push_back(p);
        parents.push_back(parent);
        return static_cast<int>(positions.size()) - 1;
    }

    std::size_t size() const { return positions.size(); }

    friend bool operator==(const Tree&, const Tree&) = default;
};

struct PlannerConfig {
    double step_length = 30.0;
    int max_iterations = 200000;
    /// Direct goal connections are attempted from nodes within this radius;
    /// callers normally keep it equal to step_length.
    double goal_connect_radius = 30.0;
    /// Probability of sampling the goal instead of a uniform point. 0 keeps
    /// pure uniform sampling (and draws exactly two uniforms per iteration).
    double goal_bias = 0.0;
    std::uint64_t seed = 0;
};

struct PlanOutcome {
    std::optional<Path> path;
    Tree tree;
    int iterations = 0;
    double planning_time_ms = 0.0;
    bool success = false;
};

/// Uniform point over [0, width) x [0, height); draws x first, then y.
Point2 sample_uniform(SplitMix64& rng, const WorldMap& map);

/// Index of the tree node closest to q; exact ties go to the lowest index.
int nearest(const Tree& tree, const Point2& q);

/// Moves from q_near toward q_rand by at most step_length; returns q_rand
/// itself when it is closer than the step.
Point2 steer(const Point2& q_near, const Point2& q_rand, double step_length);

/// Grows a tree from map.start by repeated sample / nearest / steer / insert
/// rounds until a node connects to the goal or the iteration budget runs
/// out. Returns the first complete start-to-goal path found. Deterministic
/// for a fixed (map, cfg) apart from the measured time.
PlanOutcome plan(const WorldMap& map, const PlannerConfig& cfg);

}  // namespace rrtrw
