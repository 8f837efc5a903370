#include <iostream>

#include <CLI11.hpp>

#include "rrtrw/cli.hpp"

namespace {

void add_planner_flags(CLI::App* cmd, rrtrw::PlannerFlags& flags) {
    cmd->add_option("--step", flags.step_length, "Extension step length, px")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--max-iterations", flags.max_iterations, "Sampling iteration budget")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--goal-radius", flags.goal_connect_radius,
                    "Goal connection radius, px (defaults to the step length)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--goal-bias", flags.goal_bias, "Probability of sampling the goal directly")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    cmd->add_option("--epsilon", flags.epsilon, "Minimum clearance override, px")
        ->check(CLI::NonNegativeNumber);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"2D RRT planner with triangular path rewiring: single runs, benchmarks, map "
                 "rendering"};
    app.require_subcommand(1);

    rrtrw::PlanCommandOptions plan_options;
    CLI::App* plan_cmd = app.add_subcommand("plan", "Run one seeded planning trial");
    plan_cmd->add_option("--map", plan_options.map_spec, "builtin:N (1..4) or a map file path")
        ->capture_default_str();
    plan_cmd->add_option("--seed", plan_options.seed, "Trial seed")->capture_default_str();
    plan_cmd->add_flag("--no-rewire", plan_options.no_rewire, "Skip the rewiring post-process");
    plan_cmd->add_option("--out", plan_options.output_dir, "Output directory for the SVG")
        ->capture_default_str();
    add_planner_flags(plan_cmd, plan_options.planner);

    rrtrw::BenchCommandOptions bench_options;
    CLI::App* bench_cmd = app.add_subcommand("bench", "Run the repeated-trial benchmark");
    bench_cmd->add_option("--maps", bench_options.map_ids, "Built-in map ids")
        ->delimiter(',')
        ->check(CLI::Range(1, 4))
        ->capture_default_str();
    bench_cmd->add_option("--trials", bench_options.trials, "Trials per map")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench_cmd->add_option("--seed", bench_options.base_seed, "Base seed (trial i uses seed+i)")
        ->capture_default_str();
    bench_cmd->add_flag("--no-rewire", bench_options.no_rewire, "Benchmark the raw planner only");
    bench_cmd->add_option("--out", bench_options.output_dir, "Output directory")
        ->capture_default_str();
    bench_cmd->add_option("--format", bench_options.table_format, "Printed table format")
        ->check(CLI::IsMember({"markdown", "csv"}))
        ->capture_default_str();
    add_planner_flags(bench_cmd, bench_options.planner);

    rrtrw::RenderMapsCommandOptions render_options;
    CLI::App* render_cmd = app.add_subcommand("render-maps", "Write SVGs of the built-in maps");
    render_cmd->add_option("--maps", render_options.map_ids, "Built-in map ids")
        ->delimiter(',')
        ->check(CLI::Range(1, 4))
        ->capture_default_str();
    render_cmd->add_option("--out", render_options.output_dir, "Output directory")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    if (plan_cmd->parsed()) return rrtrw::cmd_plan(plan_options, std::cout, std::cerr);
    if (bench_cmd->parsed()) return rrtrw::cmd_bench(bench_options, std::cout, std::cerr);
    if (render_cmd->parsed()) return rrtrw::cmd_render_maps(render_options, std::cout, std::cerr);
    return 1;
}
