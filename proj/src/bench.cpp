#include "rrtrw/bench.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include <json.hpp>

#include "rrtrw/builtin_maps.hpp"
#include "rrtrw/format.hpp"
#include "rrtrw/rewire.hpp"

namespace rrtrw {

std::string_view variant_name(Variant v) {
    switch (v) {
        case Variant::kRrtRaw: return "rrt";
        case Variant::kRrtPlusRewire: return "rrt+rewire";
    }
    return "unknown";
}

int ratio_percent(double value, double baseline) {
    if (!(baseline > 0.0) || !std::isfinite(value)) return 100;
    const double ratio = 100.0 * value / baseline;
    if (std::abs(ratio - 100.0) < 1.0) return 100;
    return static_cast<int>(ratio);
}

namespace {

struct PairedTrial {
    TrialResult raw;
    TrialResult rewired;
    std::optional<Path> raw_path;
    std::optional<Path> rewired_path;
};

PairedTrial run_paired_trial(const WorldMap& map, const PlannerConfig& base_cfg,
                             std::uint64_t seed) {
    PlannerConfig cfg = base_cfg;
    cfg.seed = seed;

    PairedTrial out;
    out.raw.seed = seed;
    out.raw.variant = Variant::kRrtRaw;

    PlanOutcome plan_outcome = plan(map, cfg);
    out.raw.success = plan_outcome.success;
    out.raw.planning_time_ms = plan_outcome.planning_time_ms;
    out.raw.iterations = plan_outcome.iterations;

    out.rewired = out.raw;
    out.rewired.variant = Variant::kRrtPlusRewire;

    if (plan_outcome.success) {
        out.raw.path_length_px = path_length(*plan_outcome.path);
        auto [rewired_path, report] = post_triangular_rewire(*plan_outcome.path, map);
        out.rewired.path_length_px = report.output_length_px;
        out.rewired.rewire_time_ms = report.rewire_time_ms;
        out.rewired.planning_time_ms = out.raw.planning_time_ms + report.rewire_time_ms;
        out.rewired.success = true;
        out.raw_path = std::move(plan_outcome.path);
        out.rewired_path = std::move(rewired_path);
    }
    return out;
}

}  // namespace

std::pair<TrialResult, TrialResult> run_trial(const WorldMap& map, const PlannerConfig& cfg,
                                              std::uint64_t seed) {
    PairedTrial paired = run_paired_trial(map, cfg, seed);
    return {std::move(paired.raw), std::move(paired.rewired)};
}

ExperimentSummary summarize(const std::vector<TrialResult>& trials) {
    struct Accumulator {
        double length_sum = 0.0;
        double time_sum = 0.0;
        int successes = 0;
    };

    std::vector<int> map_order;
    std::map<std::pair<int, int>, Accumulator> acc;
    for (const TrialResult& t : trials) {
        const auto key = std::make_pair(t.map_id, static_cast<int>(t.variant));
        if (acc.find({t.map_id, 0}) == acc.end() && acc.find({t.map_id, 1}) == acc.end()) {
            map_order.push_back(t.map_id);
        }
        Accumulator& a = acc[key];
        if (t.success && t.path_length_px) {
            a.length_sum += *t.path_length_px;
            a.time_sum += t.planning_time_ms;
            ++a.successes;
        }
    }

    ExperimentSummary summary;
    for (int map_id : map_order) {
        SummaryRow baseline_row;
        bool have_baseline = false;
        for (int v = 0; v < 2; ++v) {
            const auto it = acc.find({map_id, v});
            if (it == acc.end()) continue;
            const Accumulator& a = it->second;
            SummaryRow row;
            row.map_id = map_id;
            row.variant = static_cast<Variant>(v);
            row.success_count = a.successes;
            if (a.successes > 0) {
                row.mean_path_length_px = a.length_sum / a.successes;
                row.mean_planning_time_ms = a.time_sum / a.successes;
            }
            if (!have_baseline) {
                // First variant of the map is the 100% baseline (the raw
                // variant, when present, sorts first).
                baseline_row = row;
                have_baseline = true;
            }
            row.path_length_ratio_pct =
                ratio_percent(row.mean_path_length_px, baseline_row.mean_path_length_px);
            row.planning_time_ratio_pct =
                ratio_percent(row.mean_planning_time_ms, baseline_row.mean_planning_time_ms);
            summary.rows.push_back(row);
        }
    }
    return summary;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    const bool want_raw =
        std::find(cfg.variants.begin(), cfg.variants.end(), Variant::kRrtRaw) != cfg.variants.end();
    const bool want_rewired =
        std::find(cfg.variants.begin(), cfg.variants.end(), Variant::kRrtPlusRewire) !=
        cfg.variants.end();

    ExperimentResult result;
    for (int map_id : cfg.map_ids) {
        WorldMap map = builtin_map(map_id);
        if (cfg.epsilon_override) {
            map.epsilon = *cfg.epsilon_override;
            validate_map(map);
        }

        // One discarded warm-up trial per map keeps allocator and cache
        // warm-up noise out of the counted timings.
        run_paired_trial(map, cfg.planner, cfg.base_seed);

        for (int i = 0; i < cfg.trials; ++i) {
            const std::uint64_t seed = cfg.base_seed + static_cast<std::uint64_t>(i);
            PairedTrial paired = run_paired_trial(map, cfg.planner, seed);
            paired.raw.map_id = map_id;
            paired.raw.trial_index = i;
            paired.rewired.map_id = map_id;
            paired.rewired.trial_index = i;
            if (want_raw) {
                result.trials.push_back(std::move(paired.raw));
                result.trial_paths.push_back(std::move(paired.raw_path));
            }
            if (want_rewired) {
                result.trials.push_back(std::move(paired.rewired));
                result.trial_paths.push_back(std::move(paired.rewired_path));
            }
        }
    }
    result.summary = summarize(result.trials);
    return result;
}

namespace {

std::string csv_row(const SummaryRow& row) {
    std::ostringstream out;
    out << row.map_id << ',' << variant_name(row.variant) << ','
        << decimal_text(row.mean_path_length_px) << ',' << row.path_length_ratio_pct << ','
        << decimal_text(row.mean_planning_time_ms) << ',' << row.planning_time_ratio_pct << ','
        << row.success_count;
    return out.str();
}

}  // namespace

std::string emit_table(const ExperimentSummary& summary, TableFormat format) {
    std::ostringstream out;
    if (format == TableFormat::kCsv) {
        out << "map,variant,mean_path_length_px,path_length_ratio_pct,mean_planning_time_ms,"
               "planning_time_ratio_pct,success_count\n";
        for (const SummaryRow& row : summary.rows) {
            out << csv_row(row) << '\n';
        }
    } else {
        out << "| map | variant | mean path length (px) | length ratio | mean planning time (ms) "
               "| time ratio | successes |\n";
        out << "|---|---|---|---|---|---|---|\n";
        for (const SummaryRow& row : summary.rows) {
            out << "| " << row.map_id << " | " << variant_name(row.variant) << " | "
                << decimal_text(std::round(row.mean_path_length_px * 100.0) / 100.0) << " | "
                << row.path_length_ratio_pct << "% | "
                << decimal_text(std::round(row.mean_planning_time_ms * 1000.0) / 1000.0) << " | "
                << row.planning_time_ratio_pct << "% | " << row.success_count << " |\n";
        }
    }
    return out.str();
}

std::string trial_record_json(const TrialResult& trial, bool include_timing) {
    nlohmann::ordered_json record;
    record["map_id"] = trial.map_id;
    record["trial_index"] = trial.trial_index;
    record["seed"] = trial.seed;
    record["variant"] = std::string(variant_name(trial.variant));
    record["success"] = trial.success;
    if (trial.path_length_px) {
        record["path_length_px"] = *trial.path_length_px;
    } else {
        record["path_length_px"] = nullptr;
    }
    if (include_timing) {
        record["planning_time_ms"] = trial.planning_time_ms;
        record["rewire_time_ms"] = trial.rewire_time_ms;
    }
    record["iterations"] = trial.iterations;
    return record.dump();
}

}  // namespace rrtrw
