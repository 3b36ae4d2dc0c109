// SPDX-License-Identifier: Apache-2.0
//
// stratito: experiment harness for stochastic transport simulations.
//
//   stratito <simulate|converge|crossvar|corrector|validate>
//            --config FILE [--seed N] [--workers N] [--out DIR]
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure,
// 4 i/o error.
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "stratito/experiments.hpp"
#include "stratito/io.hpp"

namespace {

struct CommonArgs {
    std::string config_path;
    std::string out_dir = "out";
    std::uint64_t seed = 0;
    bool seed_set = false;
    int workers = 1;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_workers = true) {
    cmd->add_option("--config", args.config_path, "experiment config file")->required();
    cmd->add_option("--out", args.out_dir, "output directory");
    cmd->add_option("--seed", args.seed, "override mc.seed")->each([&args](const std::string&) {
        args.seed_set = true;
    });
    if (with_workers) cmd->add_option("--workers", args.workers, "worker threads");
}

stratito::ExperimentConfig load(const CommonArgs& args) {
    auto cfg = stratito::ExperimentConfig::parse_file(args.config_path);
    if (args.seed_set) cfg.set("mc.seed", std::to_string(args.seed));
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stochastic transport experiment harness"};
    app.require_subcommand(1);

    CommonArgs args;
    auto* sim = app.add_subcommand("simulate", "sample paths with per-step diagnostics");
    auto* conv = app.add_subcommand("converge", "paired-scheme strong error table");
    auto* cross = app.add_subcommand("crossvar", "cross-variation vs corrector integral");
    auto* corr = app.add_subcommand("corrector", "assemble and dump the drift corrector");
    auto* val = app.add_subcommand("validate", "noise family and drift assumption checks");
    add_common(sim, args);
    add_common(conv, args);
    add_common(cross, args);
    add_common(corr, args, false);
    add_common(val, args, false);

    CLI11_PARSE(app, argc, argv);

    try {
        auto cfg = load(args);
        std::filesystem::path manifest;
        if (sim->parsed())
            manifest = stratito::run_simulate(cfg, args.out_dir, args.workers);
        else if (conv->parsed())
            manifest = stratito::run_converge(cfg, args.out_dir, args.workers);
        else if (cross->parsed())
            manifest = stratito::run_crossvar(cfg, args.out_dir, args.workers);
        else if (corr->parsed())
            manifest = stratito::run_corrector(cfg, args.out_dir);
        else
            manifest = stratito::run_validate(cfg, args.out_dir, std::cout);
        std::cout << "manifest: " << manifest.string() << "\n";
        return 0;
    } catch (const stratito::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const stratito::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
