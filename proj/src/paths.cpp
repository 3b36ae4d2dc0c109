// SPDX-License-Identifier: Apache-2.0
#include "stratito/paths.hpp"

#include <cmath>

namespace stratito {

namespace rng {

std::uint64_t stream_key(std::uint64_t seed, std::uint64_t stream, std::uint64_t mode) {
    // Feed each identifier through the mixer output (not just the state
    // advance) so distinct (seed, stream, mode) triples get unrelated keys.
    std::uint64_t s = seed;
    s = splitmix64(s) ^ (stream + 0x9e3779b97f4a7c15ULL);
    s = splitmix64(s) ^ (mode + 0xbf58476d1ce4e5b9ULL);
    return splitmix64(s);
}

std::vector<double> standard_normals(std::uint64_t key, size_t n) {
    std::vector<double> out;
    out.reserve(n + 1);
    std::uint64_t state = key;
    constexpr double two_pi = 6.283185307179586476925286766559;
    while (out.size() < n) {
        // uniforms in (0,1), never exactly 0 or 1
        double u1 = (double(splitmix64(state) >> 11) + 0.5) * 0x1.0p-53;
        double u2 = (double(splitmix64(state) >> 11) + 0.5) * 0x1.0p-53;
        double r = std::sqrt(-2.0 * std::log(u1));
        out.push_back(r * std::cos(two_pi * u2));
        out.push_back(r * std::sin(two_pi * u2));
    }
    out.resize(n);
    return out;
}

}  // namespace rng

BrownianIncrements sample_increments(int modes, const TimeGrid& grid, std::uint64_t seed,
                                     std::uint64_t stream) {
    if (modes < 1) throw std::invalid_argument("sample_increments: modes must be >= 1");
    BrownianIncrements inc;
    inc.modes = modes;
    inc.grid = grid;
    inc.seed = seed;
    inc.stream = stream;
    inc.values.resize(size_t(modes) * grid.steps);
    double sd = std::sqrt(grid.dt());
    for (int i = 0; i < modes; ++i) {
        auto z = rng::standard_normals(rng::stream_key(seed, stream, std::uint64_t(i)),
                                       size_t(grid.steps));
        for (int k = 0; k < grid.steps; ++k) inc.values[size_t(i) * grid.steps + k] = sd * z[k];
    }
    return inc;
}

BrownianIncrements coarsen(const BrownianIncrements& inc, int factor) {
    if (factor < 1 || inc.grid.steps % factor != 0)
        throw std::invalid_argument("coarsen: factor must divide steps");
    BrownianIncrements out;
    out.modes = inc.modes;
    out.grid = TimeGrid(inc.grid.horizon, inc.grid.steps / factor);
    out.seed = inc.seed;
    out.stream = inc.stream;
    out.coarsen_factor = inc.coarsen_factor * factor;
    out.values.resize(size_t(inc.modes) * out.grid.steps);
    for (int i = 0; i < inc.modes; ++i) {
        for (int k = 0; k < out.grid.steps; ++k) {
            KahanScalar acc;
            for (int j = 0; j < factor; ++j) acc.add(inc.at(i, k * factor + j));
            out.values[size_t(i) * out.grid.steps + k] = acc.value();
        }
    }
    return out;
}

}  // namespace stratito
