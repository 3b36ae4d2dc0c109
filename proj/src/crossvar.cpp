// SPDX-License-Identifier: Apache-2.0
#include "stratito/crossvar.hpp"

#include <cmath>
#include <stdexcept>

#include "stratito/ops.hpp"

namespace stratito {

namespace {

void require_stride_one(const TrajectoryRecord& traj) {
    if (traj.stride != 1)
        throw std::invalid_argument("crossvar: trajectory must store every step (stride 1)");
}

}  // namespace

CrossVarSeries empirical_crossvar(const TrajectoryRecord& traj, const OperatorBundle& g, int mode,
                                  const BrownianIncrements& inc, int w_mode) {
    require_stride_one(traj);
    if (!(traj.grid == inc.grid))
        throw std::invalid_argument("empirical_crossvar: trajectory and increments grid mismatch");
    if (w_mode < 0) w_mode = mode;
    CrossVarSeries out;
    out.grid = traj.grid;
    out.mode = mode;
    const SpectralField& psi0 = traj.state_at_step(0);
    SpectralField shape(psi0.dim_domain(), psi0.dim_range(), psi0.cutoff());
    out.values.reserve(traj.grid.steps + 1);
    out.values.push_back(shape);
    bool active = mode >= 0 && mode < g.modes && w_mode < inc.modes;
    KahanFieldAccumulator acc(shape);
    SpectralField g_prev = active ? g.eval(mode, traj.grid.time(0), psi0) : shape;
    for (int k = 0; k < traj.grid.steps; ++k) {
        if (active) {
            SpectralField g_next =
                g.eval(mode, traj.grid.time(k + 1), traj.state_at_step(k + 1));
            SpectralField diff = g_next;
            diff -= g_prev;
            diff *= inc.at(w_mode, k);
            acc.add(diff);
            g_prev = std::move(g_next);
        }
        out.values.push_back(acc.sum());
    }
    return out;
}

CrossVarSeries corrector_integral(const TrajectoryRecord& traj, const OperatorBundle& g,
                                  int mode) {
    require_stride_one(traj);
    CrossVarSeries out;
    out.grid = traj.grid;
    out.mode = mode;
    const SpectralField& psi0 = traj.state_at_step(0);
    SpectralField shape(psi0.dim_domain(), psi0.dim_range(), psi0.cutoff());
    out.values.reserve(traj.grid.steps + 1);
    out.values.push_back(shape);
    bool active = mode >= 0 && mode < g.modes;
    double dt = traj.grid.dt();
    KahanFieldAccumulator acc(shape);
    for (int k = 0; k < traj.grid.steps; ++k) {
        if (active) {
            double t = traj.grid.time(k);
            const SpectralField& psi = traj.state_at_step(k);
            SpectralField gi = g.eval(mode, t, psi);
            SpectralField summand = g.has_frechet()
                                        ? g.frechet(mode, t, psi, gi)
                                        : fd_frechet(g, mode, t, psi, gi, default_fd_eps(psi));
            summand *= dt;
            acc.add(summand);
        }
        out.values.push_back(acc.sum());
    }
    return out;
}

StratPartialSums stratonovich_partial_sum(const TrajectoryRecord& traj, const OperatorBundle& g,
                                          const BrownianIncrements& inc,
                                          const std::vector<double>& thresholds, int m,
                                          double stabilization_tol) {
    require_stride_one(traj);
    for (size_t j = 1; j < thresholds.size(); ++j)
        if (thresholds[j] < thresholds[j - 1])
            throw std::invalid_argument("stratonovich_partial_sum: thresholds must be ascending");

    // localization steps per threshold, replayed from the stored states
    std::vector<int> stop_steps;
    for (double n : thresholds) {
        LocalizationGuard guard{n, m};
        int stop = traj.grid.steps;
        for (int k = 0; k <= traj.grid.steps; ++k) {
            if (guard.observe(traj.state_at_step(k), k < traj.grid.steps ? traj.grid.dt() : 0.0)) {
                stop = k;
                break;
            }
        }
        stop_steps.push_back(stop);
    }

    // per-mode Ito sums and brackets, shared across thresholds
    const SpectralField& psi0 = traj.state_at_step(0);
    SpectralField shape(psi0.dim_domain(), psi0.dim_range(), psi0.cutoff());
    std::vector<CrossVarSeries> ito(g.modes), bracket(g.modes);
    for (int i = 0; i < g.modes; ++i) {
        bracket[i] = empirical_crossvar(traj, g, i, inc);
        CrossVarSeries s;
        s.grid = traj.grid;
        s.mode = i;
        s.values.push_back(shape);
        KahanFieldAccumulator acc(shape);
        for (int k = 0; k < traj.grid.steps; ++k) {
            SpectralField term = g.eval(i, traj.grid.time(k), traj.state_at_step(k));
            term *= inc.at(i, k);
            acc.add(term);
            s.values.push_back(acc.sum());
        }
        ito[i] = std::move(s);
    }

    StratPartialSums out;
    out.thresholds = thresholds;
    for (size_t j = 0; j < thresholds.size(); ++j) {
        int stop = stop_steps[j];
        CrossVarSeries s;
        s.grid = traj.grid;
        s.mode = -1;
        for (int k = 0; k <= traj.grid.steps; ++k) {
            int kk = std::min(k, stop);
            KahanFieldAccumulator acc(shape);
            for (int i = 0; i < g.modes; ++i) {
                acc.add(ito[i].values[size_t(kk)]);
                SpectralField half = bracket[i].values[size_t(kk)];
                half *= 0.5;
                acc.add(half);
            }
            s.values.push_back(acc.take());
        }
        out.series.push_back(std::move(s));
    }
    for (size_t j = 0; j + 1 < out.series.size(); ++j) {
        if (compare(out.series[j], out.series[j + 1], SobolevIndex(0)).sup_diff <
            stabilization_tol) {
            out.stabilization_index = int(j);
            break;
        }
    }
    return out;
}

CompareReport compare(const CrossVarSeries& a, const CrossVarSeries& b, SobolevIndex norm) {
    if (!(a.grid == b.grid)) throw std::invalid_argument("compare: grid mismatch");
    CompareReport rep;
    rep.per_time.reserve(a.values.size());
    for (size_t k = 0; k < a.values.size(); ++k) {
        SpectralField diff = a.values[k];
        diff -= b.values[k];
        double d = sobolev_norm(diff, norm);
        rep.per_time.push_back(d);
        rep.sup_diff = std::max(rep.sup_diff, d);
    }
    return rep;
}

}  // namespace stratito
