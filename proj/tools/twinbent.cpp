#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "twinbent/cli.hpp"

using twinbent::cli::OutputFormat;
using twinbent::cli::RunConfig;

int main(int argc, char** argv)
{
    RunConfig config;
    if (const char* env = std::getenv("TWINBENT_BUDGET")) {
        try {
            config.budget = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "usage error: TWINBENT_BUDGET must be a non-negative integer\n";
            return twinbent::cli::kExitUsage;
        }
    }

    CLI::App app{"twinbent: Clifford-algebra bent functions, Cayley graphs and Hurwitz-Radon certificates"};
    app.require_subcommand(1, 1);
    app.set_help_all_flag("--help-all", "Expand all help");

    std::string format = "json";
    for (const auto& name : twinbent::cli::subcommands()) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--m", config.m, "half-rank m")->required();
        sub->add_option("--fn", config.fn, "bent function")->check(CLI::IsMember({"sigma", "tau"}));
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--seed", config.seed, "random seed");
        sub->add_option("--budget", config.budget, "node/step budget (overrides TWINBENT_BUDGET)");
        sub->add_option("--threads", config.threads, "worker threads for clique search")
            ->check(CLI::Range(1u, 256u));
        sub->add_flag("--exhaustive", config.exhaustive, "exhaustive mode where available");
        sub->add_option("--checkpoint", config.checkpoint, "checkpoint file for exhaustive runs");
        sub->add_option("--out", config.out, "write the report to this path");
        sub->add_option("--b", config.b, "order of B matrices (hadamard)")->check(CLI::Range(1u, 8u));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return twinbent::cli::kExitUsage;
    }

    config.subcommand = app.get_subcommands().front()->get_name();
    config.format = format == "csv" ? OutputFormat::csv : format == "text" ? OutputFormat::text : OutputFormat::json;
    return twinbent::cli::run(config, std::cout, std::cerr);
}
