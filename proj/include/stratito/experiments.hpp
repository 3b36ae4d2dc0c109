// SPDX-License-Identifier: Apache-2.0
#ifndef STRATITO_EXPERIMENTS_HPP
#define STRATITO_EXPERIMENTS_HPP

#include <filesystem>
#include <iosfwd>

#include "stratito/config.hpp"
#include "stratito/models.hpp"

namespace stratito {

/// Everything the harness needs, resolved from a config.
struct BuiltExperiment {
    ModelSpec model;
    TimeGrid grid;
    Scheme scheme = Scheme::ItoEm;
    bool use_corrector = true;
    int samples = 1;
    std::uint64_t seed = 42;
    double guard_threshold = 1e12;
    int stride = 1;
    int snapshot_stride = 0;  // 0: no field snapshots
    int converge_levels = 4;
    bool integrating_factor = false;
};

BuiltExperiment build_experiment(const ExperimentConfig& cfg);

// Each runner writes its artifacts plus a manifest.json (config capture +
// per-artifact SHA-256) into out_dir and returns the manifest path.
std::filesystem::path run_simulate(const ExperimentConfig& cfg,
                                   const std::filesystem::path& out_dir, int workers = 1);
std::filesystem::path run_converge(const ExperimentConfig& cfg,
                                   const std::filesystem::path& out_dir, int workers = 1);
std::filesystem::path run_crossvar(const ExperimentConfig& cfg,
                                   const std::filesystem::path& out_dir, int workers = 1);
std::filesystem::path run_corrector(const ExperimentConfig& cfg,
                                    const std::filesystem::path& out_dir);
/// Summability / growth-bound / linearity spot checks; report to `log`
/// and validate.csv.
std::filesystem::path run_validate(const ExperimentConfig& cfg,
                                   const std::filesystem::path& out_dir, std::ostream& log);

}  // namespace stratito

#endif
