// SPDX-License-Identifier: Apache-2.0
#ifndef STRATITO_CROSSVAR_HPP
#define STRATITO_CROSSVAR_HPP

#include <vector>

#include "stratito/integrate.hpp"

namespace stratito {

/// Running field-valued series on a time grid; values[0] is the zero field
/// and values[k] the cumulative estimate at t_k.
struct CrossVarSeries {
    TimeGrid grid;
    int mode = -1;
    std::vector<SpectralField> values;  // grid.steps + 1 entries
};

/// Discrete bracket [G_i(., Psi_.), W^j]: cumulative sum of
/// (G_i(t_{k+1}, Psi_{k+1}) - G_i(t_k, Psi_k)) dW^j_k.  Requires a
/// stride-1 trajectory.  w_mode defaults to mode (the diagonal bracket);
/// a different w_mode gives the cross-mode independence check.
CrossVarSeries empirical_crossvar(const TrajectoryRecord& traj, const OperatorBundle& g, int mode,
                                  const BrownianIncrements& inc, int w_mode = -1);

/// Left-endpoint quadrature of D_u G_i(t_k, Psi_k)[G_i(t_k, Psi_k)].
CrossVarSeries corrector_integral(const TrajectoryRecord& traj, const OperatorBundle& g, int mode);

struct StratPartialSums {
    std::vector<double> thresholds;
    std::vector<CrossVarSeries> series;  // one per threshold, summed over modes
    int stabilization_index = -1;        // first n whose series matches the next within tol
};

/// Localized Stratonovich partial sums: for each threshold n, the Ito sums
/// plus half the empirical brackets, both stopped at the n-localization
/// time computed from the stored trajectory (regularity index m).
StratPartialSums stratonovich_partial_sum(const TrajectoryRecord& traj, const OperatorBundle& g,
                                          const BrownianIncrements& inc,
                                          const std::vector<double>& thresholds, int m = 0,
                                          double stabilization_tol = 1e-12);

struct CompareReport {
    double sup_diff = 0.0;
    std::vector<double> per_time;
};

/// sup over time of |a - b| in the given Sobolev norm, plus the per-time series.
CompareReport compare(const CrossVarSeries& a, const CrossVarSeries& b, SobolevIndex norm);

}  // namespace stratito

#endif
