// SPDX-License-Identifier: Apache-2.0
#ifndef STRATITO_INTEGRATE_HPP
#define STRATITO_INTEGRATE_HPP

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "stratito/bundle.hpp"
#include "stratito/field.hpp"
#include "stratito/paths.hpp"

namespace stratito {

/// Drift A(t, psi).  `apply` carries everything except the optional
/// Laplacian viscosity nu, kept separate so it can go through an
/// exponential integrating factor.
struct DriftSpec {
    std::function<SpectralField(double, const SpectralField&)> apply;
    double nu = 0.0;
    // growth metadata for the validation layer: |A| <= c (1+|psi|_H^p)(1+|psi|_V^2)
    double growth_c = 1.0;
    double growth_p = 1.0;

    SpectralField total(double t, const SpectralField& psi) const;
    SpectralField laplacian_term(const SpectralField& psi) const;
};

/// Blow-up localization: stops when sup_s |psi|^2_{W^m} + int |psi|^2_{W^{m+1}} ds
/// reaches the threshold.  Once triggered it stays triggered.
struct LocalizationGuard {
    double threshold = 1e12;
    int m = 0;
    double sup_h_sq = 0.0;
    double int_v_sq = 0.0;
    bool triggered = false;

    // Left-endpoint observation of the state entering a step of length dt.
    // Returns true if the guard (now or previously) has triggered.
    bool observe(const SpectralField& psi, double dt);
};

struct StepDiagnostics {
    double t = 0.0;
    double energy = 0.0;
    double enstrophy = 0.0;
    double corrector_norm = 0.0;
    bool stopped = false;
};

struct TrajectoryRecord {
    TimeGrid grid;
    int stride = 1;
    std::vector<SpectralField> states;  // states[j] is the state at step j*stride
    int stop_step = -1;                 // step where the guard triggered, or grid.steps
    std::vector<StepDiagnostics> diagnostics;  // one row per step 0..steps
    bool integrating_factor = false;
    std::string scheme;

    const SpectralField& state_at_step(int step) const;
    const SpectralField& final_state() const { return states.back(); }
};

enum class Scheme { ItoEm, StratHeun };

Scheme scheme_from_name(const std::string& name);
std::string scheme_name(Scheme s);

/// One Euler-Maruyama step of the corrected Ito form:
/// psi' = psi + dt (A + corrector) + sum_i G_i(t, psi) dW^i.
SpectralField step_ito_em(const SpectralField& psi, double t, double dt, const DriftSpec& drift,
                          const OperatorBundle& g, std::span<const double> inc,
                          bool use_corrector = true, double* corrector_norm = nullptr);

/// One Heun step of the Stratonovich form: noise-only predictor, then
/// trapezoidal average of G at (t, psi) and (t+dt, predictor).
SpectralField step_strat_heun(const SpectralField& psi, double t, double dt,
                              const DriftSpec& drift, const OperatorBundle& g,
                              std::span<const double> inc);

struct SimulateOptions {
    int stride = 1;
    bool use_corrector = true;       // Ito scheme only
    bool integrating_factor = false; // handle nu exponentially per mode
};

/// Advance psi0 over the grid, freezing the state once the guard triggers
/// (t-and-tau semantics).  NaN in any state aborts with the step index.
TrajectoryRecord simulate(const SpectralField& psi0, const TimeGrid& grid, const DriftSpec& drift,
                          const OperatorBundle& g, Scheme scheme, const BrownianIncrements& inc,
                          LocalizationGuard guard, const SimulateOptions& options = {});

double energy_of(const SpectralField& psi);
double enstrophy_of(const SpectralField& psi);

}  // namespace stratito

#endif
