#include "replica/commands.hpp"
#include "replica/config.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

int main(int argc, char** argv) {
    using namespace replica;

    CLI::App app{"Price and verify the CDS replica built from a repo and an asset swap "
                 "with a default break clause"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    RenderOptions render;
    app.add_option("--config", config_path, "market config (JSON)")->required();
    app.add_flag("--pretty", render.pretty, "human-readable table instead of JSON");
    app.add_flag("--bp", render.basis_points, "display spreads in basis points");

    auto* price = app.add_subcommand("price", "bond, floater, annuity and par spread report");
    auto* replicate = app.add_subcommand("replicate", "scenario-by-scenario replication residuals");
    auto* implied = app.add_subcommand("implied-repo", "repo and reverse repo spreads from quotes");
    auto* calibrate = app.add_subcommand("calibrate", "flat hazard rate from the CDS quote");

    ReplicateOptions replicate_options;
    bool no_clause = false;
    std::size_t mc_paths = 0;
    replicate->add_flag("--no-clause", no_clause, "asset swap without the default break clause");
    auto* mc = replicate->add_option("--mc", mc_paths, "Monte Carlo paths for the sampled check")
                   ->check(CLI::PositiveNumber);
    replicate->add_option("--seed", replicate_options.seed, "Monte Carlo seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_code::validation;
    }

    try {
        const MarketConfig config = load_config(config_path);
        CommandResult result;
        if (price->parsed()) {
            result = cmd_price(config);
        } else if (replicate->parsed()) {
            replicate_options.clause_enabled = !no_clause;
            if (mc->count() > 0)
                replicate_options.mc_paths = mc_paths;
            result = cmd_replicate(config, replicate_options);
        } else if (implied->parsed()) {
            result = cmd_implied_repo(config);
        } else if (calibrate->parsed()) {
            result = cmd_calibrate(config);
        }
        std::cout << render_report(result.report, render);
        return result.exit_code;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
