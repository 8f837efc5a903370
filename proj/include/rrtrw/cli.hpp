#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace rrtrw {

/// Shared planner flags. The goal-connect radius follows step_length unless
/// set explicitly; epsilon overrides the map's clearance when set.
struct PlannerFlags {
    double step_length = 30.0;
    int max_iterations = 200000;
    std::optional<double> goal_connect_radius;
    double goal_bias = 0.0;
    std::optional<double> epsilon;
};

struct PlanCommandOptions {
    std::string map_spec = "builtin:1";  // "builtin:N" or a map file path
    std::uint64_t seed = 1;
    PlannerFlags planner;
    bool no_rewire = false;
    std::string output_dir = ".";
};

struct BenchCommandOptions {
    std::vector<int> map_ids{1, 2, 3, 4};
    int trials = 100;
    std::uint64_t base_seed = 1;
    PlannerFlags planner;
    bool no_rewire = false;
    std::string output_dir = "bench_out";
    std::string table_format = "markdown";  // printed form; files always get CSV
};

struct RenderMapsCommandOptions {
    std::vector<int> map_ids{1, 2, 3, 4};
    std::string output_dir = ".";
};

/// Runs one seeded trial, prints raw/rewired length and time, writes an SVG
/// of the overlaid result. Returns 0 on success, nonzero on planning failure
/// or bad input.
int cmd_plan(const PlanCommandOptions& options, std::ostream& out, std::ostream& err);

/// Runs the repeated-trial benchmark, writes per-trial records
/// (trials.jsonl) and the summary table (summary.csv) to the output
/// directory, prints the table.
int cmd_bench(const BenchCommandOptions& options, std::ostream& out, std::ostream& err);

/// Writes one SVG per selected built-in map (obstacles, start, goal).
int cmd_render_maps(const RenderMapsCommandOptions& options, std::ostream& out, std::ostream& err);

}  // namespace rrtrw
