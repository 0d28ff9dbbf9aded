#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "loccbound/commands.hpp"

int main(int argc, char** argv) {
    using namespace loccbound;

    CLI::App app{
        "loccbound: distance-like entanglement measures and certified\n"
        "discrimination bounds under the positive-partial-transpose relaxation"};
    app.require_subcommand(1);

    CliOptions opts;
    std::string cuts = "all";
    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--tol", opts.solver.tol, "solver certificate tolerance")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        cmd->add_option("--max-iter", opts.solver.max_iter, "solver iteration cap")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        cmd->add_option("--restarts", opts.product.restarts, "product-search restarts")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        cmd->add_option("--seed", opts.product.seed, "random seed")->capture_default_str();
        cmd->add_option("--cuts", cuts, "partial-transpose cuts to enforce: all | single")
            ->check(CLI::IsMember({"all", "single"}))
            ->capture_default_str();
        cmd->add_option("--out", opts.out_path, "write the report to this file");
        cmd->add_option("--plot", opts.plot_path, "write an SVG scatter plot to this file");
    };

    std::string input_path;
    CLI::App* measure = app.add_subcommand("measure", "per-state measure table for a state set");
    measure->add_option("input", input_path, "state-set JSON file")->required();
    add_common(measure);

    CLI::App* bound = app.add_subcommand(
        "bound", "measure table plus the ensemble discrimination verdict");
    bound->add_option("input", input_path, "state-set JSON file")->required();
    add_common(bound);

    std::string demo_name;
    int demo_m = 3;
    int demo_d = 2;
    CLI::App* demo = app.add_subcommand("demo", "self-checking demonstrations");
    demo->add_option("name", demo_name, "ghz | w | bell | ghz-sim | entangled-basis")
        ->required();
    demo->add_option("--m", demo_m, "party count for family demos")->capture_default_str();
    demo->add_option("--d", demo_d, "local dimension for the bell demo")->capture_default_str();
    add_common(demo);

    int sweep_count = 0;
    std::vector<int> sweep_dims{2, 2};
    CLI::App* sweep = app.add_subcommand("sweep", "measure seeded random states");
    sweep->add_option("--count", sweep_count, "number of random states")->required();
    sweep->add_option("--dims", sweep_dims, "local dimensions (e.g. --dims 2 2 2)")
        ->delimiter(',')
        ->capture_default_str();
    add_common(sweep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input_error;
    }
    opts.solver.cuts = (cuts == "single") ? CutMode::single_cut : CutMode::all_cuts;

    if (measure->parsed()) return cmd_measure(input_path, opts, std::cout, std::cerr);
    if (bound->parsed()) return cmd_bound(input_path, opts, std::cout, std::cerr);
    if (demo->parsed()) return cmd_demo(demo_name, demo_m, demo_d, opts, std::cout, std::cerr);
    if (sweep->parsed()) return cmd_sweep(sweep_count, sweep_dims, opts, std::cout, std::cerr);
    return exit_input_error;
}
