#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rrtrw/path.hpp"
#include "rrtrw/rrt.hpp"
#include "rrtrw/workspace.hpp"

namespace rrtrw {

enum class Variant { kRrtRaw, kRrtPlusRewire };

std::string_view variant_name(Variant v);

enum class TableFormat { kCsv, kMarkdown };

struct ExperimentConfig {
    std::vector<int> map_ids{1, 2, 3, 4};
    int trials = 100;
    PlannerConfig planner;
    std::vector<Variant> variants{Variant::kRrtRaw, Variant::kRrtPlusRewire};
    std::uint64_t base_seed = 1;
    TableFormat output_format = TableFormat::kMarkdown;
    /// Replaces each map's clearance when set (maps are revalidated).
    std::optional<double> epsilon_override;
};

/// Metrics of one planning trial under one variant. The rewired variant of a
/// trial post-processes the exact path planned by the raw variant (same
/// seed, same tree), so its planning time is the raw time plus the rewiring
/// time.
struct TrialResult {
    int map_id = 0;
    int trial_index = 0;
    std::uint64_t seed = 0;
    Variant variant = Variant::kRrtRaw;
    bool success = false;
    std::optional<double> path_length_px;  // absent when the trial failed
    double planning_time_ms = 0.0;
    double rewire_time_ms = 0.0;
    int iterations = 0;
};

/// Aggregates per (map, variant); ratios are percentages relative to the raw
/// variant of the same map (100% baseline).
struct SummaryRow {
    int map_id = 0;
    Variant variant = Variant::kRrtRaw;
    double mean_path_length_px = 0.0;
    int path_length_ratio_pct = 100;
    double mean_planning_time_ms = 0.0;
    int planning_time_ratio_pct = 100;
    int success_count = 0;
};

struct ExperimentSummary {
    std::vector<SummaryRow> rows;
};

struct ExperimentResult {
    std::vector<TrialResult> trials;
    ExperimentSummary summary;
    /// Paths aligned index-for-index with `trials`; absent for failed trials.
    std::vector<std::optional<Path>> trial_paths;
};

/// Ratio as an integer percentage, truncated toward zero; differences of
/// less than one percentage point from the baseline collapse to 100.
int ratio_percent(double value, double baseline);

/// Runs one seeded planning trial and post-processes the resulting path,
/// producing the paired (raw, rewired) metrics. A failed plan marks both
/// results unsuccessful.
std::pair<TrialResult, TrialResult> run_trial(const WorldMap& map, const PlannerConfig& cfg,
                                              std::uint64_t seed);

/// Means over successful trials plus ratios; rows ordered by map then
/// variant (raw first).
ExperimentSummary summarize(const std::vector<TrialResult>& trials);

/// The full benchmark: for every selected built-in map, one discarded
/// warm-up trial followed by `trials` counted trials seeded base_seed + i,
/// strictly sequentially so timing stays meaningful.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

std::string emit_table(const ExperimentSummary& summary, TableFormat format);

/// One structured record per trial (JSON object, single line). Timing fields
/// can be omitted to compare records across runs.
std::string trial_record_json(const TrialResult& trial, bool include_timing = true);

}  // namespace rrtrw
