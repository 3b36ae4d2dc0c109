// SPDX-License-Identifier: Apache-2.0
#ifndef STRATITO_IO_HPP
#define STRATITO_IO_HPP

#include <filesystem>
#include <fstream>
#include <string>

#include "stratito/integrate.hpp"
#include "stratito/paths.hpp"

namespace stratito {

/// Errors surfaced with the offending path; mapped to exit code 4 by the CLI.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Field container, little-endian binary ("SPDEFLD1") or CSV of
// (k-tuple, component, re, im) rows; the writer picks by extension
// (.field -> binary, .csv -> text).
void write_field(const SpectralField& f, const std::filesystem::path& path);
SpectralField read_field(const std::filesystem::path& path);

// In-memory renderers, so workers can produce artifact bytes while a
// single writer owns the filesystem.
std::string render_field_binary(const SpectralField& f);
std::string render_trajectory_csv(const TrajectoryRecord& traj);

// Increment container with a noise header (M, steps, dt, seed, stream).
void write_increments(const BrownianIncrements& inc, const std::filesystem::path& path);
BrownianIncrements read_increments(const std::filesystem::path& path);

/// Per-step trajectory diagnostics as CSV:
/// step,t,energy,enstrophy,corrector_norm,stopped.
void write_trajectory_csv(const TrajectoryRecord& traj, const std::filesystem::path& path);

/// Versioned CSV header shared by every table the harness emits.
std::ofstream open_csv(const std::filesystem::path& path, const std::string& kind,
                       const std::string& columns);

/// Hex SHA-256 of a file's contents.
std::string sha256_file(const std::filesystem::path& path);

}  // namespace stratito

#endif
