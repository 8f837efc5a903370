#include "rrtrw/rrt.hpp"

#include <algorithm>
#include <chrono>

namespace rrtrw {

Point2 sample_uniform(SplitMix64& rng, const WorldMap& map) {
    const double x = rng.next_double() * map.width;
    const double y = rng.next_double() * map.height;
    return Point2{x, y};
}

int nearest(const Tree& tree, const Point2& q) {
    int best = 0;
    double best_sq = squared_distance(tree.positions[0], q);
    for (int i = 1; i < static_cast<int>(tree.positions.size()); ++i) {
        const double sq = squared_distance(tree.positions[i], q);
        if (sq < best_sq) {
            best_sq = sq;
            best = i;
        }
    }
    return best;
}

Point2 steer(const Point2& q_near, const Point2& q_rand, double step_length) {
    const double d = distance(q_near, q_rand);
    if (d <= step_length) return q_rand;
    const double scale = step_length / d;
    return Point2{q_near.x + scale * (q_rand.x - q_near.x),
                  q_near.y + scale * (q_rand.y - q_near.y)};
}

namespace {

Path extract_path(const Tree& tree, int leaf) {
    Path path;
    for (int i = leaf; i != Tree::kRootParent; i = tree.parents[i]) {
        path.waypoints.push_back(tree.positions[i]);
    }
    std::reverse(path.waypoints.begin(), path.waypoints.end());
    return path;
}

// Direct goal connection, attempted after every node insertion (the root
// included).
bool try_goal_connect(Tree& tree, int node, const WorldMap& map, const PlannerConfig& cfg) {
    const Point2& pos = tree.positions[node];
    if (distance(pos, map.goal) > cfg.goal_connect_radius) return false;
    if (is_trapped(pos, map.goal, map)) return false;
    tree.add_node(map.goal, node);
    return true;
}

}  // namespace

PlanOutcome plan(const WorldMap& map, const PlannerConfig& cfg) {
    const auto t_start = std::chrono::steady_clock::now();

    PlanOutcome out;
    SplitMix64 rng(cfg.seed);
    const int root = out.tree.add_node(map.start, Tree::kRootParent);

    bool reached = try_goal_connect(out.tree, root, map, cfg);
    while (!reached && out.iterations < cfg.max_iterations) {
        ++out.iterations;

        Point2 q_rand;
        if (cfg.goal_bias > 0.0 && rng.next_double() < cfg.goal_bias) {
            q_rand = map.goal;
        } else {
            q_rand = sample_uniform(rng, map);
        }

        const int near_index = nearest(out.tree, q_rand);
        const Point2 q_new = steer(out.tree.positions[near_index], q_rand, cfg.step_length);
        if (is_trapped(out.tree.positions[near_index], q_new, map)) continue;

        const int new_index = out.tree.add_node(q_new, near_index);
        reached = try_goal_connect(out.tree, new_index, map, cfg);
    }

    if (reached) {
        out.path = extract_path(out.tree, static_cast<int>(out.tree.size()) - 1);
        out.success = true;
    }

    const auto t_end = std::chrono::steady_clock::now();
    out.planning_time_ms = std::chrono::duration<double, std::milli>(t_end - t_start).count();
    return out;
}

}  // namespace rrtrw
