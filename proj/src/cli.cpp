#include "rrtrw/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>

#include "rrtrw/bench.hpp"
#include "rrtrw/builtin_maps.hpp"
#include "rrtrw/render.hpp"
#include "rrtrw/rewire.hpp"
#include "rrtrw/rrt.hpp"
#include "rrtrw/workspace.hpp"

namespace rrtrw {

namespace {

namespace fs = std::filesystem;

WorldMap resolve_map(const std::string& spec, const std::optional<double>& epsilon_override) {
    WorldMap map;
    if (spec.rfind("builtin:", 0) == 0) {
        map = builtin_map(std::stoi(spec.substr(8)));
    } else {
        map = load_map_file(spec);
    }
    if (epsilon_override) {
        map.epsilon = *epsilon_override;
        validate_map(map);
    }
    return map;
}

PlannerConfig planner_config(const PlannerFlags& flags) {
    PlannerConfig cfg;
    cfg.step_length = flags.step_length;
    cfg.max_iterations = flags.max_iterations;
    cfg.goal_connect_radius = flags.goal_connect_radius.value_or(flags.step_length);
    cfg.goal_bias = flags.goal_bias;
    return cfg;
}

bool write_file(const fs::path& path, const std::string& content, std::ostream& err) {
    std::error_code ec;
    if (path.has_parent_path()) {
        fs::create_directories(path.parent_path(), ec);
        if (ec) {
            err << "error: cannot create directory " << path.parent_path() << ": " << ec.message()
                << "\n";
            return false;
        }
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        err << "error: cannot open " << path << " for writing\n";
        return false;
    }
    out << content;
    out.close();
    if (!out) {
        err << "error: failed writing " << path << "\n";
        return false;
    }
    return true;
}

}  // namespace

int cmd_plan(const PlanCommandOptions& options, std::ostream& out, std::ostream& err) {
    WorldMap map;
    try {
        map = resolve_map(options.map_spec, options.planner.epsilon);
    } catch (const std::exception& e) {
        err << "error: " << options.map_spec << ": " << e.what() << "\n";
        return 1;
    }

    PlannerConfig cfg = planner_config(options.planner);
    cfg.seed = options.seed;

    const PlanOutcome outcome = plan(map, cfg);
    if (!outcome.success) {
        err << "planning failed: iteration budget (" << cfg.max_iterations << ") exhausted on "
            << map.name << "\n";
        return 2;
    }

    out << std::fixed << std::setprecision(2);
    out << "map " << map.name << " seed " << options.seed << " iterations "
        << outcome.iterations << "\n";
    out << "raw      length " << path_length(*outcome.path) << " px, planning time "
        << outcome.planning_time_ms << " ms\n";

    std::vector<std::pair<Path, std::string>> overlays{{*outcome.path, "raw"}};
    if (!options.no_rewire) {
        const auto [rewired, report] = post_triangular_rewire(*outcome.path, map);
        out << "rewired  length " << report.output_length_px << " px, rewire time "
            << report.rewire_time_ms << " ms (" << report.waypoints_removed
            << " waypoints removed in " << report.passes << " passes)\n";
        overlays.emplace_back(rewired, "rewired");
    }

    const fs::path svg_path = fs::path(options.output_dir) /
                              ("plan_" + map.name + "_seed" + std::to_string(options.seed) +
                               ".svg");
    if (!write_file(svg_path, render_scene(map, &outcome.tree, overlays), err)) return 3;
    out << "wrote " << svg_path.string() << "\n";
    return 0;
}

int cmd_bench(const BenchCommandOptions& options, std::ostream& out, std::ostream& err) {
    ExperimentConfig cfg;
    cfg.map_ids = options.map_ids;
    cfg.trials = options.trials;
    cfg.base_seed = options.base_seed;
    cfg.planner = planner_config(options.planner);
    cfg.epsilon_override = options.planner.epsilon;
    if (options.no_rewire) {
        cfg.variants = {Variant::kRrtRaw};
    }

    ExperimentResult result;
    try {
        result = run_experiment(cfg);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    std::string records;
    for (const TrialResult& trial : result.trials) {
        records += trial_record_json(trial);
        records += '\n';
    }

    const fs::path out_dir(options.output_dir);
    if (!write_file(out_dir / "trials.jsonl", records, err)) return 3;
    if (!write_file(out_dir / "summary.csv", emit_table(result.summary, TableFormat::kCsv), err)) {
        return 3;
    }

    const TableFormat printed =
        options.table_format == "csv" ? TableFormat::kCsv : TableFormat::kMarkdown;
    out << emit_table(result.summary, printed);
    out << "wrote " << (out_dir / "trials.jsonl").string() << " and "
        << (out_dir / "summary.csv").string() << "\n";
    return 0;
}

int cmd_render_maps(const RenderMapsCommandOptions& options, std::ostream& out,
                    std::ostream& err) {
    for (int id : options.map_ids) {
        WorldMap map;
        try {
            map = builtin_map(id);
        } catch (const std::exception& e) {
            err << "error: " << e.what() << "\n";
            return 1;
        }
        const fs::path svg_path = fs::path(options.output_dir) / (map.name + ".svg");
        if (!write_file(svg_path, render_scene(map, nullptr, {}), err)) return 3;
        out << "wrote " << svg_path.string() << "\n";
    }
    return 0;
}

}  // namespace rrtrw
