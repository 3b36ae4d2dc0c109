// SPDX-License-Identifier: Apache-2.0
#include "stratito/integrate.hpp"

#include <cmath>
#include <stdexcept>

#include "stratito/ops.hpp"

namespace stratito {

SpectralField DriftSpec::laplacian_term(const SpectralField& psi) const {
    SpectralField out = psi;
    for (int c = 0; c < psi.dim_range(); ++c) {
        for (int m = 0; m < psi.num_modes(); ++m) {
            auto k = psi.wavevector(m);
            double ksq = double(k[0]) * k[0] + double(k[1]) * k[1];
            out.coeff(c, m) = -nu * ksq * psi.coeff(c, m);
        }
    }
    return out;
}

SpectralField DriftSpec::total(double t, const SpectralField& psi) const {
    SpectralField out = apply ? apply(t, psi)
                              : SpectralField(psi.dim_domain(), psi.dim_range(), psi.cutoff());
    if (nu != 0.0) out += laplacian_term(psi);
    return out;
}

bool LocalizationGuard::observe(const SpectralField& psi, double dt) {
    if (triggered) return true;
    double h_sq = std::pow(sobolev_norm(psi, SobolevIndex(m)), 2);
    double v_sq = std::pow(sobolev_norm(psi, SobolevIndex(m + 1)), 2);
    sup_h_sq = std::max(sup_h_sq, h_sq);
    int_v_sq += dt * v_sq;
    if (sup_h_sq + int_v_sq >= threshold) triggered = true;
    return triggered;
}

const SpectralField& TrajectoryRecord::state_at_step(int step) const {
    if (step < 0 || step > grid.steps) throw std::out_of_range("state_at_step: out of range");
    if (step == grid.steps) return states.back();
    if (step % stride != 0)
        throw std::invalid_argument("state_at_step: step not on the storage stride");
    return states[size_t(step / stride)];
}

Scheme scheme_from_name(const std::string& name) {
    if (name == "ito_em") return Scheme::ItoEm;
    if (name == "strat_heun") return Scheme::StratHeun;
    throw std::invalid_argument("unknown scheme: " + name);
}

std::string scheme_name(Scheme s) { return s == Scheme::ItoEm ? "ito_em" : "strat_heun"; }

SpectralField step_ito_em(const SpectralField& psi, double t, double dt, const DriftSpec& drift,
                          const OperatorBundle& g, std::span<const double> inc,
                          bool use_corrector, double* corrector_norm) {
    if (!(dt > 0.0)) throw std::invalid_argument("step_ito_em: dt must be positive");
    SpectralField out = psi;
    out.axpy(dt, drift.total(t, psi));
    if (g.modes > 0) {
        if (int(inc.size()) < g.modes)
            throw std::invalid_argument("step_ito_em: increments not indexed to the bundle modes");
        if (use_corrector) {
            CorrectorReport rep = corrector(g, t, psi);
            if (corrector_norm) *corrector_norm = sobolev_norm(rep.field, SobolevIndex(0));
            out.axpy(dt, rep.field);
        } else if (corrector_norm) {
            *corrector_norm = 0.0;
        }
        for (int i = 0; i < g.modes; ++i) out.axpy(inc[i], g.eval(i, t, psi));
    }
    return out;
}

SpectralField step_strat_heun(const SpectralField& psi, double t, double dt,
                              const DriftSpec& drift, const OperatorBundle& g,
                              std::span<const double> inc) {
    if (!(dt > 0.0)) throw std::invalid_argument("step_strat_heun: dt must be positive");
    SpectralField out = psi;
    out.axpy(dt, drift.total(t, psi));
    if (g.modes > 0) {
        if (int(inc.size()) < g.modes)
            throw std::invalid_argument("step_strat_heun: increments not indexed to bundle modes");
        std::vector<SpectralField> g_at_t;
        g_at_t.reserve(g.modes);
        SpectralField predictor = psi;
        for (int i = 0; i < g.modes; ++i) {
            g_at_t.push_back(g.eval(i, t, psi));
            predictor.axpy(inc[i], g_at_t.back());
        }
        for (int i = 0; i < g.modes; ++i) {
            out.axpy(0.5 * inc[i], g_at_t[i]);
            out.axpy(0.5 * inc[i], g.eval(i, t + dt, predictor));
        }
    }
    return out;
}

double energy_of(const SpectralField& psi) {
    double n = sobolev_norm(psi, SobolevIndex(0));
    return 0.5 * n * n;
}

double enstrophy_of(const SpectralField& psi) {
    if (psi.dim_domain() == 2 && psi.dim_range() == 2) {
        double n = sobolev_norm(curl2d(psi), SobolevIndex(0));
        return n * n;
    }
    if (psi.dim_range() == 1) {
        double n = sobolev_norm(psi, SobolevIndex(0));
        return n * n;
    }
    return 0.0;
}

namespace {

void apply_exp_factor(SpectralField& psi, double nu, double dt) {
    for (int c = 0; c < psi.dim_range(); ++c) {
        for (int m = 0; m < psi.num_modes(); ++m) {
            auto k = psi.wavevector(m);
            double ksq = double(k[0]) * k[0] + double(k[1]) * k[1];
            psi.coeff(c, m) *= std::exp(-nu * ksq * dt);
        }
    }
}

}  // namespace

TrajectoryRecord simulate(const SpectralField& psi0, const TimeGrid& grid, const DriftSpec& drift,
                          const OperatorBundle& g, Scheme scheme, const BrownianIncrements& inc,
                          LocalizationGuard guard, const SimulateOptions& options) {
    if (g.modes > 0 && !(inc.grid == grid))
        throw std::invalid_argument("simulate: increments and trajectory must share a grid");
    bool use_if = options.integrating_factor && drift.nu != 0.0;
    DriftSpec stepped_drift = drift;
    if (use_if) stepped_drift.nu = 0.0;

    TrajectoryRecord traj;
    traj.grid = grid;
    traj.stride = options.stride;
    traj.stop_step = grid.steps;
    traj.integrating_factor = use_if;
    traj.scheme = scheme_name(scheme);

    double dt = grid.dt();
    SpectralField psi = psi0;
    auto record = [&](int step) {
        if (step % options.stride == 0 || step == grid.steps) traj.states.push_back(psi);
    };
    record(0);
    traj.diagnostics.push_back(
        {0.0, energy_of(psi), enstrophy_of(psi), 0.0, guard.triggered});

    std::vector<double> dw(size_t(std::max(g.modes, 0)));
    for (int k = 0; k < grid.steps; ++k) {
        double t = grid.time(k);
        bool stopped = guard.observe(psi, dt);
        if (k < traj.stop_step && stopped) traj.stop_step = k;
        double corr_norm = 0.0;
        if (!stopped) {
            for (int i = 0; i < g.modes; ++i) dw[size_t(i)] = inc.at(i, k);
            SpectralField next =
                (scheme == Scheme::ItoEm)
                    ? step_ito_em(psi, t, dt, stepped_drift, g, dw, options.use_corrector,
                                  &corr_norm)
                    : step_strat_heun(psi, t, dt, stepped_drift, g, dw);
            if (use_if) apply_exp_factor(next, drift.nu, dt);
            if (!next.all_finite())
                throw std::runtime_error("simulate: non-finite state at step " +
                                         std::to_string(k + 1));
            psi = std::move(next);
        }
        record(k + 1);
        traj.diagnostics.push_back(
            {grid.time(k + 1), energy_of(psi), enstrophy_of(psi), corr_norm, stopped});
    }
    return traj;
}

}  // namespace stratito
