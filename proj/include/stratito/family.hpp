// SPDX-License-Identifier: Apache-2.0
#ifndef STRATITO_FAMILY_HPP
#define STRATITO_FAMILY_HPP

#include <functional>
#include <vector>

#include "stratito/field.hpp"

namespace stratito {

/// Time-dependent spatial correlation functions xi_i with their
/// summability constants c_i, truncated to M modes.
struct NoiseFamily {
    int modes = 0;
    bool divergence_free = false;
    std::vector<std::function<SpectralField(double)>> xi;
    std::vector<std::function<SpectralField(double)>> xi_dt;  // empty: use finite differences
    std::vector<double> c;
    double tail_sq = 0.0;  // estimate of sum_{i >= M} c_i^2

    double sum_c_sq() const;
    SpectralField eval(int i, double t) const;
    SpectralField eval_dt(int i, double t) const;
};

/// Divergence-free Fourier shear modes on the 2-torus with amplitudes
/// c_i = amplitude * i^{-decay} (i 1-based) and smooth time modulation
/// a_i(t) = 1 + time_eps * sin(omega_i t); time_eps = 0 gives an
/// autonomous family.
NoiseFamily make_shear_family(int modes, double decay, int cutoff, double amplitude = 1.0,
                              double time_eps = 0.0);

/// Constant-in-space transport speeds on the 1-torus.
NoiseFamily make_constant_family_1d(const std::vector<double>& speeds, int cutoff);

/// Single-Fourier-mode correlation functions xi_i(x) = c_i cos(i x) on
/// the 1-torus, c_i = amplitude * i^{-decay}.
NoiseFamily make_cosine_family_1d(int modes, double decay, int cutoff, double amplitude = 1.0);

/// Integral tail bound sum_{i > modes} (amplitude * i^{-decay})^2 for decay > 1/2.
double power_law_tail_sq(int modes, double decay, double amplitude);

}  // namespace stratito

#endif
