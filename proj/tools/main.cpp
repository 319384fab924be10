#include "cli/commands.hpp"

#include <conekit/conekit.h>

#include <CLI11.hpp>

#include <iostream>

using namespace conekit::cli;

int main(int argc, char** argv) {
    CLI::App app{"conekit: extremal and conical cscK momentum profiles"};
    app.set_version_flag("--version", std::string(conekit_version()));
    app.require_subcommand(1);

    std::string describe_path;
    auto* describe = app.add_subcommand("describe", "Print Q, RQ, the admissible range of b and moments");
    describe->add_option("config", describe_path, "JSON run configuration")->required();

    std::string sweep_path;
    SweepArgs sweep_args;
    auto* sweep = app.add_subcommand("sweep", "Write the CSV table of the configured b grid");
    sweep->add_option("config", sweep_path, "JSON run configuration")->required();
    sweep->add_flag("--svg", sweep_args.svg, "Also write an SVG plot of β against b");
    sweep->add_option("-o,--output", sweep_args.csv_override, "CSV path, overriding outputs.csv ('-' for stdout)");
    sweep->add_option("-j,--threads", sweep_args.threads, "Worker threads (default: all cores)");

    VerifyArgs verify_args;
    std::string verify_path;
    auto* verify = app.add_subcommand("verify", "Run the randomized invariant suite");
    auto* seed_opt = verify->add_option("--seed", verify_args.seed, "Random seed")->capture_default_str();
    verify->add_option("--cases", verify_args.cases, "Number of random setups")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    verify->add_option("config", verify_path, "Optional configuration whose grid is checked as well");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*describe) return cmd_describe(load_config(describe_path), std::cout, std::cerr);
        if (*sweep) {
            sweep_args.config_path = sweep_path;
            return cmd_sweep(load_config(sweep_path), sweep_args, std::cout, std::cerr);
        }
        verify_args.seed_given = seed_opt->count() > 0;
        if (!verify_path.empty()) verify_args.config = load_config(verify_path);
        return cmd_verify(verify_args, std::cout, std::cerr);
    } catch (const ConfigError& e) {
        std::cerr << "ParseError: " << e.what() << "\n";
        return kBadInput;
    }
}
