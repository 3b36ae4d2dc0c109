// SPDX-License-Identifier: Apache-2.0
#ifndef STRATITO_PATHS_HPP
#define STRATITO_PATHS_HPP

#include <cstdint>
#include <vector>

#include "stratito/field.hpp"

namespace stratito {

/// Uniform time grid on [0, T].
struct TimeGrid {
    double horizon = 1.0;
    int steps = 1;

    TimeGrid() = default;
    TimeGrid(double t, int n) : horizon(t), steps(n) {
        if (!(t > 0.0) || n < 1) throw std::invalid_argument("TimeGrid: need T > 0, steps >= 1");
    }
    double dt() const { return horizon / steps; }
    double time(int step) const { return dt() * step; }
    bool operator==(const TimeGrid& o) const {
        return horizon == o.horizon && steps == o.steps;
    }
};

/// Increments of the truncated cylindrical Brownian motion: dW^i_k for
/// mode i < M, step k < steps.  Bit-exact reproducible from
/// (seed, stream, M, grid); distinct streams are independent.
struct BrownianIncrements {
    int modes = 0;
    TimeGrid grid;
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
    int coarsen_factor = 1;  // product of coarsen() factors applied so far
    std::vector<double> values;  // modes * steps, mode-major

    double at(int mode, int step) const { return values[size_t(mode) * grid.steps + step]; }
};

/// Deterministic counter-free stream generator: a SplitMix64 sequence
/// keyed by (seed, stream, mode), with Box-Muller normals on top.
/// Fully specified here so outputs are identical across platforms.
namespace rng {
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
std::uint64_t stream_key(std::uint64_t seed, std::uint64_t stream, std::uint64_t mode);
/// Standard normal sequence of length n for the given key.
std::vector<double> standard_normals(std::uint64_t key, size_t n);
}  // namespace rng

BrownianIncrements sample_increments(int modes, const TimeGrid& grid, std::uint64_t seed,
                                     std::uint64_t stream);

/// Block-sum coarsening: output increment k sums input increments
/// [k*factor, (k+1)*factor), compensated.  factor must divide steps.
BrownianIncrements coarsen(const BrownianIncrements& inc, int factor);

}  // namespace stratito

#endif
