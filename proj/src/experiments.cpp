// SPDX-License-Identifier: Apache-2.0
#include "stratito/experiments.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <functional>
#include <iomanip>
#include <mutex>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>
#include <vector>

#include <json.hpp>

#include "stratito/crossvar.hpp"
#include "stratito/io.hpp"
#include "stratito/ops.hpp"

namespace stratito {

namespace {

using nlohmann::json;

void parallel_for(int count, int workers, const std::function<void(int)>& body) {
    workers = std::max(1, workers);
    if (workers == 1 || count <= 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (int w = 0; w < std::min(workers, count); ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

/// Single-writer artifact sink with manifest bookkeeping.
class ArtifactSink {
  public:
    explicit ArtifactSink(const std::filesystem::path& dir, const ExperimentConfig& cfg)
        : dir_(dir), cfg_(cfg) {
        std::filesystem::create_directories(dir_);
    }

    void write(const std::string& name, const std::string& bytes) {
        auto path = dir_ / name;
        std::ofstream os(path, std::ios::binary);
        if (!os) throw IoError("cannot open for writing: " + path.string());
        os.write(bytes.data(), std::streamsize(bytes.size()));
        if (!os) throw IoError("write failed: " + path.string());
        names_.push_back(name);
    }

    std::filesystem::path finish() {
        json manifest;
        manifest["format"] = "stratito-manifest";
        manifest["version"] = 1;
        json cfgj = json::object();
        for (const auto& [k, v] : cfg_.values()) cfgj[k] = v;
        manifest["config"] = cfgj;
        std::sort(names_.begin(), names_.end());
        json arts = json::array();
        for (const auto& name : names_) {
            auto path = dir_ / name;
            arts.push_back({{"path", name},
                            {"bytes", std::filesystem::file_size(path)},
                            {"sha256", sha256_file(path)}});
        }
        manifest["artifacts"] = arts;
        auto mpath = dir_ / "manifest.json";
        std::ofstream os(mpath);
        if (!os) throw IoError("cannot open for writing: " + mpath.string());
        os << manifest.dump(2) << "\n";
        return mpath;
    }

  private:
    std::filesystem::path dir_;
    ExperimentConfig cfg_;
    std::vector<std::string> names_;
};

SpectralField build_initial(const ExperimentConfig& cfg, const std::string& model, int cutoff) {
    std::string profile = cfg.get("model.initial", "");
    std::string file = cfg.get("model.initial_file", "");
    if (!file.empty()) return read_field(file);
    std::uint64_t seed = cfg.get_u64("model.initial_seed", 7);
    double decay = cfg.get_double("model.initial_decay", 1.0);
    if (model == "nse2d") {
        if (profile.empty() || profile == "taylor_green") {
            double amp = cfg.get_double("model.initial_amplitude", 1.0);
            SpectralField u = taylor_green_velocity(cutoff);
            u *= amp;
            return u;
        }
        if (profile == "random") return smooth_random_field(2, 2, cutoff, decay, seed, true);
    } else if (model == "modulated") {
        if (profile.empty() || profile == "random") {
            SpectralField w = smooth_random_field(2, 1, cutoff, decay, seed);
            w.set_zero_mean_flag(true);
            w.enforce_reality();
            return w;
        }
    } else if (model == "advection") {
        if (profile.empty() || profile == "single_mode")
            return single_mode_1d(cutoff, cfg.get_int("model.initial_wavenumber", 1),
                                  cfg.get_double("model.initial_amplitude", 1.0));
        if (profile == "random") return smooth_random_field(1, 1, cutoff, decay, seed);
    }
    throw ConfigError("unknown initial profile '" + profile + "' for model " + model);
}

NoiseFamily build_family(const ExperimentConfig& cfg, const std::string& model, int cutoff) {
    int modes = cfg.get_int("noise.modes", 1);
    double decay = cfg.get_double("noise.decay", 1.5);
    double amplitude = cfg.get_double("noise.amplitude", 1.0);
    if (model == "advection") {
        std::string kind = cfg.get("noise.kind", "constant");
        if (kind == "constant")
            return make_constant_family_1d(
                std::vector<double>(1, cfg.get_double("noise.speed", 1.0)), cutoff);
        if (kind == "cosine") return make_cosine_family_1d(modes, decay, cutoff, amplitude);
        throw ConfigError("unknown noise.kind for advection: " + kind);
    }
    double time_eps = cfg.get_double("noise.time_eps", 0.0);
    return make_shear_family(modes, decay, cutoff, amplitude, time_eps);
}

}  // namespace

BuiltExperiment build_experiment(const ExperimentConfig& cfg) {
    BuiltExperiment exp;
    std::string model = cfg.get("experiment.model", "gbm");
    int cutoff = cfg.get_int("spectral.K", 32);
    if (model == "gbm") {
        exp.model = gbm_model(cfg.get_double("model.x0", 1.0), cfg.get_double("noise.sigma", 1.0));
    } else if (model == "advection") {
        exp.model = advection_model(build_family(cfg, model, cutoff),
                                    [cfg, model, cutoff]() { return build_initial(cfg, model, cutoff); },
                                    cfg.get_int("model.m", 1));
    } else if (model == "nse2d") {
        exp.model = nse2d_model(build_family(cfg, model, cutoff), cfg.get_double("model.nu", 0.1),
                                cfg.get_int("model.m", 1),
                                [cfg, model, cutoff]() { return build_initial(cfg, model, cutoff); });
    } else if (model == "modulated") {
        std::string fname = cfg.get("model.f", "identity");
        std::function<double(double)> f, fprime;
        if (fname == "identity") {
            f = [](double u) { return u; };
            fprime = [](double) { return 1.0; };
        } else if (fname == "quadratic") {
            f = [](double u) { return 0.5 * u * u; };
            fprime = [](double u) { return u; };
        } else {
            throw ConfigError("unknown model.f: " + fname);
        }
        exp.model = modulated_model(build_family(cfg, model, cutoff), f, fprime,
                                    [cfg, model, cutoff]() { return build_initial(cfg, model, cutoff); },
                                    cfg.get_int("model.m", 1));
    } else {
        throw ConfigError("unknown model: " + model);
    }
    try {
        exp.grid = TimeGrid(cfg.get_double("grid.T", 1.0), cfg.get_int("grid.steps", 1024));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("invalid grid: ") + e.what());
    }
    exp.scheme = scheme_from_name(cfg.get("experiment.scheme", "ito_em"));
    exp.use_corrector = cfg.get_bool("experiment.corrector", true);
    exp.samples = cfg.get_int("mc.samples", 1);
    if (exp.samples < 0) throw ConfigError("mc.samples must be >= 0");
    exp.seed = cfg.get_u64("mc.seed", 42);
    exp.guard_threshold = cfg.get_double("guard.threshold", exp.model.guard_threshold);
    exp.stride = std::max(1, cfg.get_int("output.stride", 1));
    exp.snapshot_stride = cfg.get_int("output.snapshots", 0);
    exp.converge_levels = cfg.get_int("converge.levels", 4);
    exp.integrating_factor = cfg.get_bool("experiment.integrating_factor", false);
    return exp;
}

std::filesystem::path run_simulate(const ExperimentConfig& cfg,
                                   const std::filesystem::path& out_dir, int workers) {
    BuiltExperiment exp = build_experiment(cfg);
    ArtifactSink sink(out_dir, cfg);

    struct SampleOut {
        std::string traj_csv;
        std::vector<std::pair<std::string, std::string>> snapshots;
    };
    std::vector<SampleOut> outs(size_t(exp.samples));
    parallel_for(exp.samples, workers, [&](int s) {
        BrownianIncrements inc = sample_increments(std::max(exp.model.noise.modes, 1), exp.grid,
                                                   exp.seed, std::uint64_t(s));
        SimulateOptions opt;
        opt.stride = exp.stride;
        opt.use_corrector = exp.use_corrector;
        opt.integrating_factor = exp.integrating_factor;
        TrajectoryRecord traj =
            simulate(exp.model.initial_data(), exp.grid, exp.model.drift, exp.model.noise,
                     exp.scheme, inc, LocalizationGuard{exp.guard_threshold, exp.model.regularity_m},
                     opt);
        outs[size_t(s)].traj_csv = render_trajectory_csv(traj);
        if (exp.snapshot_stride > 0) {
            for (int k = 0; k <= exp.grid.steps; k += exp.snapshot_stride) {
                if (k % exp.stride != 0 && k != exp.grid.steps) continue;
                outs[size_t(s)].snapshots.emplace_back(
                    "sample" + std::to_string(s) + "_step" + std::to_string(k) + ".field",
                    render_field_binary(traj.state_at_step(k)));
            }
        }
    });
    for (int s = 0; s < exp.samples; ++s) {
        sink.write("traj_" + std::to_string(s) + ".csv", outs[size_t(s)].traj_csv);
        for (auto& [name, bytes] : outs[size_t(s)].snapshots) sink.write(name, bytes);
    }
    return sink.finish();
}

std::filesystem::path run_converge(const ExperimentConfig& cfg,
                                   const std::filesystem::path& out_dir, int workers) {
    BuiltExperiment exp = build_experiment(cfg);
    int steps = exp.grid.steps;
    if (steps < 2 || (steps & (steps - 1)) != 0)
        throw ConfigError("converge: grid.steps must be a power of two");
    int levels = exp.converge_levels;
    if (levels < 3) throw ConfigError("converge: need at least 3 dyadic levels");
    if ((steps >> (levels - 1)) < 1) throw ConfigError("converge: too many levels for grid.steps");

    struct LevelStats {
        KahanScalar err;      // mean over samples of sup_t |ito - strat|_W0
        KahanScalar term_a;   // terminal W0 norm, corrected Ito scheme
        KahanScalar term_b;   // terminal W0 norm, Heun scheme
        KahanScalar diff;     // per-sample terminal difference a - b
        KahanScalar diff_sq;
    };
    // per sample: finest path once, coarsen downwards
    std::vector<std::vector<std::array<double, 4>>> rows(size_t(exp.samples));
    parallel_for(exp.samples, workers, [&](int s) {
        BrownianIncrements fine = sample_increments(std::max(exp.model.noise.modes, 1), exp.grid,
                                                    exp.seed, std::uint64_t(s));
        SpectralField psi0 = exp.model.initial_data();
        rows[size_t(s)].resize(size_t(levels));
        for (int l = 0; l < levels; ++l) {
            BrownianIncrements inc = coarsen(fine, 1 << (levels - 1 - l));
            SimulateOptions opt;
            opt.use_corrector = exp.use_corrector;
            opt.integrating_factor = exp.integrating_factor;
            LocalizationGuard guard{exp.guard_threshold, exp.model.regularity_m};
            TrajectoryRecord a = simulate(psi0, inc.grid, exp.model.drift, exp.model.noise,
                                          Scheme::ItoEm, inc, guard, opt);
            TrajectoryRecord b = simulate(psi0, inc.grid, exp.model.drift, exp.model.noise,
                                          Scheme::StratHeun, inc, guard, opt);
            double sup = 0.0;
            for (int k = 0; k <= inc.grid.steps; ++k) {
                SpectralField diff = a.state_at_step(k);
                diff -= b.state_at_step(k);
                sup = std::max(sup, sobolev_norm(diff, SobolevIndex(0)));
            }
            double na = sobolev_norm(a.final_state(), SobolevIndex(0));
            double nb = sobolev_norm(b.final_state(), SobolevIndex(0));
            rows[size_t(s)][size_t(l)] = {sup, na, nb, na - nb};
        }
    });

    std::vector<LevelStats> stats{size_t(levels)};
    for (int s = 0; s < exp.samples; ++s) {
        for (int l = 0; l < levels; ++l) {
            auto [sup, na, nb, d] = rows[size_t(s)][size_t(l)];
            stats[size_t(l)].err.add(sup);
            stats[size_t(l)].term_a.add(na);
            stats[size_t(l)].term_b.add(nb);
            stats[size_t(l)].diff.add(d);
            stats[size_t(l)].diff_sq.add(d * d);
        }
    }

    std::string pair = exp.use_corrector ? "ito_em+corrector|strat_heun" : "ito_em|strat_heun";
    std::ostringstream os;
    os << "# stratito-csv v1 kind=converge\n";
    os << "dt,steps,pair,strong_error,slope_so_far,mean_ito,mean_strat,diff_mean,diff_stderr\n";
    os << std::setprecision(17);
    std::vector<double> log_dt, log_err;
    int n = std::max(exp.samples, 1);
    for (int l = 0; l < levels; ++l) {
        int lsteps = steps >> (levels - 1 - l);
        double dt = exp.grid.horizon / lsteps;
        double err = stats[size_t(l)].err.value() / n;
        double mean_a = stats[size_t(l)].term_a.value() / n;
        double mean_b = stats[size_t(l)].term_b.value() / n;
        double dmean = stats[size_t(l)].diff.value() / n;
        double dvar =
            std::max(0.0, stats[size_t(l)].diff_sq.value() / n - dmean * dmean);
        double dstderr = exp.samples > 1 ? std::sqrt(dvar / (n - 1)) : 0.0;
        double slope = 0.0;
        if (err > 0.0) {
            log_dt.push_back(std::log(dt));
            log_err.push_back(std::log(err));
        }
        if (log_dt.size() >= 2) {
            // least squares slope of log err against log dt
            double mx = 0, my = 0;
            for (size_t i = 0; i < log_dt.size(); ++i) {
                mx += log_dt[i];
                my += log_err[i];
            }
            mx /= double(log_dt.size());
            my /= double(log_dt.size());
            double num = 0, den = 0;
            for (size_t i = 0; i < log_dt.size(); ++i) {
                num += (log_dt[i] - mx) * (log_err[i] - my);
                den += (log_dt[i] - mx) * (log_dt[i] - mx);
            }
            slope = den > 0 ? num / den : 0.0;
        }
        os << dt << ',' << lsteps << ',' << pair << ',' << err << ',' << slope << ',' << mean_a
           << ',' << mean_b << ',' << dmean << ',' << dstderr << '\n';
    }
    ArtifactSink sink(out_dir, cfg);
    sink.write("converge.csv", os.str());
    return sink.finish();
}

std::filesystem::path run_crossvar(const ExperimentConfig& cfg,
                                   const std::filesystem::path& out_dir, int workers) {
    BuiltExperiment exp = build_experiment(cfg);
    int modes = exp.model.noise.modes;
    if (exp.stride != 1) throw ConfigError("crossvar: output.stride must be 1");
    int steps = exp.grid.steps;

    SpectralField shape0 = exp.model.initial_data();
    SpectralField zero(shape0.dim_domain(), shape0.dim_range(), shape0.cutoff());
    // per (mode, step) accumulators for the three MC means
    auto make_acc = [&]() {
        std::vector<std::vector<KahanFieldAccumulator>> acc{size_t(modes)};
        for (auto& v : acc) v.assign(size_t(steps) + 1, KahanFieldAccumulator(zero));
        return acc;
    };
    auto emp_mean = make_acc();
    auto corr_mean = make_acc();
    auto mismatch_mean = make_acc();

    struct SampleSeries {
        std::vector<CrossVarSeries> emp, corr, mismatch;
    };
    int block = std::max(1, workers);
    for (int base = 0; base < exp.samples; base += block) {
        int count = std::min(block, exp.samples - base);
        std::vector<SampleSeries> buf{size_t(count)};
        parallel_for(count, workers, [&](int j) {
            int s = base + j;
            // one extra independent component for the cross-mode check
            BrownianIncrements inc =
                sample_increments(modes + 1, exp.grid, exp.seed, std::uint64_t(s));
            SimulateOptions opt;
            opt.use_corrector = exp.use_corrector;
            TrajectoryRecord traj = simulate(
                exp.model.initial_data(), exp.grid, exp.model.drift, exp.model.noise, exp.scheme,
                inc, LocalizationGuard{exp.guard_threshold, exp.model.regularity_m}, opt);
            for (int i = 0; i < modes; ++i) {
                buf[size_t(j)].emp.push_back(empirical_crossvar(traj, exp.model.noise, i, inc));
                buf[size_t(j)].corr.push_back(corrector_integral(traj, exp.model.noise, i));
                buf[size_t(j)].mismatch.push_back(
                    empirical_crossvar(traj, exp.model.noise, i, inc, modes));
            }
        });
        // sample-index-ordered reduction
        for (int j = 0; j < count; ++j) {
            for (int i = 0; i < modes; ++i) {
                for (int k = 0; k <= steps; ++k) {
                    emp_mean[size_t(i)][size_t(k)].add(buf[size_t(j)].emp[size_t(i)].values[size_t(k)]);
                    corr_mean[size_t(i)][size_t(k)].add(
                        buf[size_t(j)].corr[size_t(i)].values[size_t(k)]);
                    mismatch_mean[size_t(i)][size_t(k)].add(
                        buf[size_t(j)].mismatch[size_t(i)].values[size_t(k)]);
                }
            }
        }
    }

    double inv_n = exp.samples > 0 ? 1.0 / exp.samples : 0.0;
    std::ostringstream os;
    os << "# stratito-csv v1 kind=crossvar\n";
    os << "t,mode,norm_empirical,norm_corrector,norm_difference,norm_mismatch,n_paths\n";
    os << std::setprecision(17);
    for (int i = 0; i < modes; ++i) {
        for (int k = 0; k <= steps; ++k) {
            SpectralField e = emp_mean[size_t(i)][size_t(k)].sum();
            e *= inv_n;
            SpectralField c = corr_mean[size_t(i)][size_t(k)].sum();
            c *= inv_n;
            SpectralField mm = mismatch_mean[size_t(i)][size_t(k)].sum();
            mm *= inv_n;
            SpectralField d = e;
            d -= c;
            os << exp.grid.time(k) << ',' << i << ',' << sobolev_norm(e, SobolevIndex(0)) << ','
               << sobolev_norm(c, SobolevIndex(0)) << ',' << sobolev_norm(d, SobolevIndex(0))
               << ',' << sobolev_norm(mm, SobolevIndex(0)) << ',' << exp.samples << '\n';
        }
    }
    ArtifactSink sink(out_dir, cfg);
    sink.write("crossvar.csv", os.str());
    return sink.finish();
}

std::filesystem::path run_corrector(const ExperimentConfig& cfg,
                                    const std::filesystem::path& out_dir) {
    BuiltExperiment exp = build_experiment(cfg);
    double t = cfg.get_double("model.t", 0.0);
    SpectralField psi = exp.model.initial_data();
    CorrectorReport rep =
        corrector(exp.model.noise, t, psi, exp.model.regularity_m, exp.model.family.tail_sq);
    std::ostringstream os;
    os << "# stratito-csv v1 kind=corrector\n";
    os << "mode,summand_w0_norm\n";
    os << std::setprecision(17);
    for (size_t i = 0; i < rep.summand_norms.size(); ++i)
        os << i << ',' << rep.summand_norms[i] << '\n';
    ArtifactSink sink(out_dir, cfg);
    sink.write("corrector.csv", os.str());
    sink.write("corrector.field", render_field_binary(rep.field));
    return sink.finish();
}

std::filesystem::path run_validate(const ExperimentConfig& cfg,
                                   const std::filesystem::path& out_dir, std::ostream& log) {
    BuiltExperiment exp = build_experiment(cfg);
    const NoiseFamily& fam = exp.model.family;
    int m = exp.model.regularity_m;

    log << "model: " << exp.model.name << "\n";
    log << "noise modes: " << fam.modes << "\n";
    log << "sum c_i^2 (retained): " << fam.sum_c_sq() << "\n";
    log << "tail bound sum_{i>=M} c_i^2: " << fam.tail_sq << "\n";

    std::ostringstream os;
    os << "# stratito-csv v1 kind=validate\n";
    os << "mode,c,c_sq,sup_xi_norm_m_plus_2\n";
    os << std::setprecision(17);
    int tsamples = 9;
    for (int i = 0; i < fam.modes && !fam.xi.empty(); ++i) {
        double sup = 0.0;
        for (int j = 0; j <= tsamples; ++j) {
            double t = exp.grid.horizon * j / tsamples;
            sup = std::max(sup, sobolev_norm(fam.eval(i, t), SobolevIndex(m + 2)));
        }
        os << i << ',' << fam.c[size_t(i)] << ',' << fam.c[size_t(i)] * fam.c[size_t(i)] << ','
           << sup << '\n';
    }

    // drift growth-bound spot check on randomized smooth states
    if (exp.model.drift.apply) {
        double fitted_c = 0.0;
        for (int r = 0; r < 16; ++r) {
            SpectralField psi = smooth_random_field(exp.model.dim_domain, exp.model.dim_range,
                                                    std::max(exp.model.noise.modes, 4), 0.8,
                                                    exp.seed + r, exp.model.name == "nse2d");
            double t = exp.grid.horizon * r / 16.0;
            double num = sobolev_norm(exp.model.drift.total(t, psi), SobolevIndex(m - 1));
            double h = sobolev_norm(psi, SobolevIndex(m));
            double v = sobolev_norm(psi, SobolevIndex(m + 1));
            double den =
                (1.0 + std::pow(h, exp.model.drift.growth_p)) * (1.0 + v * v);
            fitted_c = std::max(fitted_c, num / den);
        }
        log << "drift growth constant (fitted over 16 random states): " << fitted_c << "\n";
    }

    // Frechet linearity spot check
    if (exp.model.noise.has_frechet()) {
        double worst = 0.0;
        for (int r = 0; r < 8; ++r) {
            SpectralField psi = exp.model.initial_data();
            int kk = psi.cutoff();
            SpectralField a = smooth_random_field(psi.dim_domain(), psi.dim_range(), kk, 1.0,
                                                  exp.seed + 100 + r);
            SpectralField b = smooth_random_field(psi.dim_domain(), psi.dim_range(), kk, 1.0,
                                                  exp.seed + 200 + r);
            double t = exp.grid.horizon * r / 8.0;
            for (int i = 0; i < exp.model.noise.modes; ++i) {
                SpectralField lhs = exp.model.noise.frechet(i, t, psi, a + b);
                SpectralField rhs = exp.model.noise.frechet(i, t, psi, a);
                rhs += exp.model.noise.frechet(i, t, psi, b);
                lhs -= rhs;
                double denom = 1.0 + sobolev_norm(rhs, SobolevIndex(0));
                worst = std::max(worst, sobolev_norm(lhs, SobolevIndex(0)) / denom);
            }
        }
        log << "Frechet additivity defect (relative, randomized): " << worst << "\n";
    }
    log.flush();

    ArtifactSink sink(out_dir, cfg);
    sink.write("validate.csv", os.str());
    return sink.finish();
}

}  // namespace stratito
