// SPDX-License-Identifier: Apache-2.0
//
// Python bindings for the core operations: fields and spectral operators,
// Brownian paths, noise families, corrector assembly, the paired
// integrators, the cross-variation verifier, and the config-driven runners.
#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "stratito/crossvar.hpp"
#include "stratito/experiments.hpp"
#include "stratito/io.hpp"
#include "stratito/models.hpp"
#include "stratito/ops.hpp"

namespace py = pybind11;
using namespace stratito;

namespace {

TransportVariant variant_from_name(const std::string& name) {
    if (name == "pure_advection") return TransportVariant::PureAdvection;
    if (name == "holm") return TransportVariant::Holm;
    if (name == "leray_holm") return TransportVariant::LerayHolm;
    if (name == "modulated") return TransportVariant::Modulated;
    throw std::invalid_argument("unknown transport variant: " + name);
}

py::array_t<Complex> field_coeffs(const SpectralField& f) {
    py::array_t<Complex> out({f.dim_range(), f.num_modes()});
    auto r = out.mutable_unchecked<2>();
    for (int c = 0; c < f.dim_range(); ++c)
        for (int m = 0; m < f.num_modes(); ++m) r(c, m) = f.coeff(c, m);
    return out;
}

}  // namespace

PYBIND11_MODULE(_stratito, mod) {
    mod.doc() = "Spectral SPDE toolbox: Ito-Stratonovich correctors, paired "
                "integrators, and cross-variation checks on the torus";

    py::register_exception<ConfigError>(mod, "ConfigError");
    py::register_exception<IoError>(mod, "IoError");

    py::class_<TimeGrid>(mod, "TimeGrid")
        .def(py::init<double, int>(), py::arg("horizon"), py::arg("steps"))
        .def_readonly("horizon", &TimeGrid::horizon)
        .def_readonly("steps", &TimeGrid::steps)
        .def("dt", &TimeGrid::dt)
        .def("time", &TimeGrid::time, py::arg("step"));

    py::class_<SobolevIndex>(mod, "SobolevIndex")
        .def(py::init<int>(), py::arg("order"))
        .def_readonly("m", &SobolevIndex::m);

    py::class_<SpectralField>(mod, "SpectralField")
        .def(py::init<int, int, int, bool, bool>(), py::arg("dim_domain"), py::arg("dim_range"),
             py::arg("cutoff"), py::arg("zero_mean") = false, py::arg("div_free") = false)
        .def_property_readonly("dim_domain", &SpectralField::dim_domain)
        .def_property_readonly("dim_range", &SpectralField::dim_range)
        .def_property_readonly("cutoff", &SpectralField::cutoff)
        .def_property_readonly("num_modes", &SpectralField::num_modes)
        .def("wavevector", &SpectralField::wavevector, py::arg("mode_idx"))
        .def("get",
             [](const SpectralField& f, int comp, std::array<int, 2> k) { return f.at(comp, k); },
             py::arg("comp"), py::arg("k"))
        .def("set",
             [](SpectralField& f, int comp, std::array<int, 2> k, Complex v) { f.at(comp, k) = v; },
             py::arg("comp"), py::arg("k"), py::arg("value"))
        .def("coeffs", &field_coeffs, "Coefficient matrix, shape (dim_range, num_modes)")
        .def("enforce_reality", &SpectralField::enforce_reality)
        .def("reality_defect", &SpectralField::reality_defect)
        .def("divergence_defect", &SpectralField::divergence_defect)
        .def("component", &SpectralField::component, py::arg("comp"))
        .def("__add__", [](const SpectralField& a, const SpectralField& b) { return a + b; })
        .def("__sub__", [](const SpectralField& a, const SpectralField& b) { return a - b; })
        .def("__mul__", [](const SpectralField& a, double s) { return a * s; })
        .def("__rmul__", [](const SpectralField& a, double s) { return a * s; });

    // spectral operators
    mod.def("partial_derivative", &partial_derivative, py::arg("f"), py::arg("axis"));
    mod.def("gradient", &gradient, py::arg("f"));
    mod.def("curl2d", &curl2d, py::arg("u"));
    mod.def("lie_derivative", &lie_derivative, py::arg("xi"), py::arg("f"));
    mod.def("holm_noise_op", &holm_noise_op, py::arg("xi"), py::arg("f"));
    mod.def("leray_project", &leray_project, py::arg("f"));
    mod.def("dealiased_product", &dealiased_product, py::arg("f"), py::arg("g"));
    mod.def("apply_pointwise", &apply_pointwise, py::arg("f"), py::arg("func"));
    mod.def("sobolev_norm",
            [](const SpectralField& f, int m) { return sobolev_norm(f, SobolevIndex(m)); },
            py::arg("f"), py::arg("m") = 0);
    mod.def("inner_w0", &inner_w0, py::arg("f"), py::arg("g"));
    mod.def("biot_savart", &biot_savart, py::arg("w"));
    mod.def("energy_of", &energy_of, py::arg("psi"));
    mod.def("enstrophy_of", &enstrophy_of, py::arg("psi"));

    // Brownian paths
    py::class_<BrownianIncrements>(mod, "BrownianIncrements")
        .def_readonly("modes", &BrownianIncrements::modes)
        .def_readonly("grid", &BrownianIncrements::grid)
        .def_readonly("seed", &BrownianIncrements::seed)
        .def_readonly("stream", &BrownianIncrements::stream)
        .def("at", &BrownianIncrements::at, py::arg("mode"), py::arg("step"))
        .def("values", [](const BrownianIncrements& inc) {
            py::array_t<double> out({inc.modes, inc.grid.steps});
            auto r = out.mutable_unchecked<2>();
            for (int i = 0; i < inc.modes; ++i)
                for (int k = 0; k < inc.grid.steps; ++k) r(i, k) = inc.at(i, k);
            return out;
        });
    mod.def("sample_increments", &sample_increments, py::arg("modes"), py::arg("grid"),
            py::arg("seed"), py::arg("stream"));
    mod.def("coarsen", &coarsen, py::arg("inc"), py::arg("factor"));

    // noise families
    py::class_<NoiseFamily>(mod, "NoiseFamily")
        .def_readonly("modes", &NoiseFamily::modes)
        .def_readonly("divergence_free", &NoiseFamily::divergence_free)
        .def_readonly("c", &NoiseFamily::c)
        .def_readonly("tail_sq", &NoiseFamily::tail_sq)
        .def("sum_c_sq", &NoiseFamily::sum_c_sq)
        .def("eval", &NoiseFamily::eval, py::arg("i"), py::arg("t"))
        .def("eval_dt", &NoiseFamily::eval_dt, py::arg("i"), py::arg("t"));
    mod.def("make_shear_family", &make_shear_family, py::arg("modes"), py::arg("decay"),
            py::arg("cutoff"), py::arg("amplitude") = 1.0, py::arg("time_eps") = 0.0);
    mod.def("make_constant_family_1d", &make_constant_family_1d, py::arg("speeds"),
            py::arg("cutoff"));
    mod.def("make_cosine_family_1d", &make_cosine_family_1d, py::arg("modes"), py::arg("decay"),
            py::arg("cutoff"), py::arg("amplitude") = 1.0);
    mod.def("power_law_tail_sq", &power_law_tail_sq, py::arg("modes"), py::arg("decay"),
            py::arg("amplitude"));

    // operator bundles and the corrector
    py::class_<OperatorBundle>(mod, "OperatorBundle")
        .def_readonly("modes", &OperatorBundle::modes)
        .def_readonly("linear", &OperatorBundle::linear)
        .def("eval",
             [](const OperatorBundle& g, int i, double t, const SpectralField& psi) {
                 return g.eval(i, t, psi);
             },
             py::arg("i"), py::arg("t"), py::arg("psi"))
        .def("frechet",
             [](const OperatorBundle& g, int i, double t, const SpectralField& psi,
                const SpectralField& phi) {
                 if (!g.has_frechet())
                     return fd_frechet(g, i, t, psi, phi, default_fd_eps(psi));
                 return g.frechet(i, t, psi, phi);
             },
             py::arg("i"), py::arg("t"), py::arg("psi"), py::arg("phi"));
    mod.def("make_transport_bundle",
            [](const NoiseFamily& fam, const std::string& variant,
               std::function<double(double)> f, std::function<double(double)> fprime) {
                return make_transport_bundle(fam, variant_from_name(variant), std::move(f),
                                             std::move(fprime));
            },
            py::arg("family"), py::arg("variant"), py::arg("f") = nullptr,
            py::arg("fprime") = nullptr);
    mod.def("make_scalar_multiplication_bundle", &make_scalar_multiplication_bundle,
            py::arg("sigmas"));

    py::class_<CorrectorReport>(mod, "CorrectorReport")
        .def_readonly("field", &CorrectorReport::field)
        .def_readonly("summand_norms", &CorrectorReport::summand_norms)
        .def_readonly("tail_sq", &CorrectorReport::tail_sq)
        .def_readonly("norm_m_minus_1", &CorrectorReport::norm_m_minus_1)
        .def_readonly("norm_m_minus_2", &CorrectorReport::norm_m_minus_2);
    mod.def("corrector", &corrector, py::arg("g"), py::arg("t"), py::arg("psi"), py::arg("m") = 1,
            py::arg("tail_sq") = 0.0);
    mod.def("corrector_linear", &corrector_linear, py::arg("g"), py::arg("t"), py::arg("psi"),
            py::arg("m") = 1, py::arg("tail_sq") = 0.0);
    mod.def("corrector_modulated", &corrector_modulated, py::arg("family"), py::arg("fprime"),
            py::arg("psi"), py::arg("t"), py::arg("m") = 1);

    // integrators
    py::class_<DriftSpec>(mod, "DriftSpec")
        .def(py::init([](double nu, std::function<SpectralField(double, const SpectralField&)> f) {
                 DriftSpec d;
                 d.nu = nu;
                 d.apply = std::move(f);
                 return d;
             }),
             py::arg("nu") = 0.0, py::arg("apply") = nullptr)
        .def_readonly("nu", &DriftSpec::nu);

    py::class_<LocalizationGuard>(mod, "LocalizationGuard")
        .def(py::init([](double threshold, int m) {
                 return LocalizationGuard{threshold, m};
             }),
             py::arg("threshold") = 1e12, py::arg("m") = 0)
        .def_readonly("threshold", &LocalizationGuard::threshold)
        .def_readonly("m", &LocalizationGuard::m)
        .def_readonly("triggered", &LocalizationGuard::triggered);

    py::class_<StepDiagnostics>(mod, "StepDiagnostics")
        .def_readonly("t", &StepDiagnostics::t)
        .def_readonly("energy", &StepDiagnostics::energy)
        .def_readonly("enstrophy", &StepDiagnostics::enstrophy)
        .def_readonly("corrector_norm", &StepDiagnostics::corrector_norm)
        .def_readonly("stopped", &StepDiagnostics::stopped);

    py::class_<TrajectoryRecord>(mod, "TrajectoryRecord")
        .def_readonly("grid", &TrajectoryRecord::grid)
        .def_readonly("stride", &TrajectoryRecord::stride)
        .def_readonly("stop_step", &TrajectoryRecord::stop_step)
        .def_readonly("diagnostics", &TrajectoryRecord::diagnostics)
        .def_readonly("scheme", &TrajectoryRecord::scheme)
        .def("state_at_step", &TrajectoryRecord::state_at_step, py::arg("step"),
             py::return_value_policy::copy)
        .def("final_state", &TrajectoryRecord::final_state, py::return_value_policy::copy);

    mod.def("simulate",
            [](const SpectralField& psi0, const TimeGrid& grid, const DriftSpec& drift,
               const OperatorBundle& g, const std::string& scheme, const BrownianIncrements& inc,
               const LocalizationGuard& guard, int stride, bool use_corrector,
               bool integrating_factor) {
                SimulateOptions opt;
                opt.stride = stride;
                opt.use_corrector = use_corrector;
                opt.integrating_factor = integrating_factor;
                return simulate(psi0, grid, drift, g, scheme_from_name(scheme), inc, guard, opt);
            },
            py::arg("psi0"), py::arg("grid"), py::arg("drift"), py::arg("g"), py::arg("scheme"),
            py::arg("inc"), py::arg("guard"), py::arg("stride") = 1,
            py::arg("use_corrector") = true, py::arg("integrating_factor") = false);

    // cross-variation verifier
    py::class_<CrossVarSeries>(mod, "CrossVarSeries")
        .def_readonly("grid", &CrossVarSeries::grid)
        .def_readonly("mode", &CrossVarSeries::mode)
        .def_readonly("values", &CrossVarSeries::values);
    mod.def("empirical_crossvar", &empirical_crossvar, py::arg("traj"), py::arg("g"),
            py::arg("mode"), py::arg("inc"), py::arg("w_mode") = -1);
    mod.def("corrector_integral", &corrector_integral, py::arg("traj"), py::arg("g"),
            py::arg("mode"));
    py::class_<StratPartialSums>(mod, "StratPartialSums")
        .def_readonly("thresholds", &StratPartialSums::thresholds)
        .def_readonly("series", &StratPartialSums::series)
        .def_readonly("stabilization_index", &StratPartialSums::stabilization_index);
    mod.def("stratonovich_partial_sum", &stratonovich_partial_sum, py::arg("traj"), py::arg("g"),
            py::arg("inc"), py::arg("thresholds"), py::arg("m") = 0,
            py::arg("stabilization_tol") = 1e-12);
    py::class_<CompareReport>(mod, "CompareReport")
        .def_readonly("sup_diff", &CompareReport::sup_diff)
        .def_readonly("per_time", &CompareReport::per_time);
    mod.def("compare",
            [](const CrossVarSeries& a, const CrossVarSeries& b, int m) {
                return compare(a, b, SobolevIndex(m));
            },
            py::arg("a"), py::arg("b"), py::arg("m") = 0);

    // models
    mod.def("gbm_exact", &gbm_exact, py::arg("x0"), py::arg("sigma"), py::arg("w_t"));
    mod.def("scalar_state", &scalar_state, py::arg("value"));
    mod.def("scalar_value", &scalar_value, py::arg("f"));
    mod.def("advection_exact", &advection_exact, py::arg("psi0"), py::arg("xi_const"),
            py::arg("w_t"));
    mod.def("taylor_green_velocity", &taylor_green_velocity, py::arg("cutoff"));
    mod.def("single_mode_1d", &single_mode_1d, py::arg("cutoff"), py::arg("wavenumber") = 1,
            py::arg("amplitude") = 1.0);
    mod.def("smooth_random_field", &smooth_random_field, py::arg("dim_domain"),
            py::arg("dim_range"), py::arg("cutoff"), py::arg("decay"), py::arg("seed"),
            py::arg("solenoidal") = false);

    // field io
    mod.def("write_field", &write_field, py::arg("f"), py::arg("path"));
    mod.def("read_field", &read_field, py::arg("path"));

    // config-driven runners
    py::class_<ExperimentConfig>(mod, "ExperimentConfig")
        .def_static("parse_string", &ExperimentConfig::parse_string, py::arg("text"))
        .def_static("parse_file", &ExperimentConfig::parse_file, py::arg("path"))
        .def("get", [](const ExperimentConfig& c, const std::string& k) { return c.get(k); },
             py::arg("key"))
        .def("set", &ExperimentConfig::set, py::arg("key"), py::arg("value"));
    mod.def("run_simulate", &run_simulate, py::arg("cfg"), py::arg("out_dir"),
            py::arg("workers") = 1);
    mod.def("run_converge", &run_converge, py::arg("cfg"), py::arg("out_dir"),
            py::arg("workers") = 1);
    mod.def("run_crossvar", &run_crossvar, py::arg("cfg"), py::arg("out_dir"),
            py::arg("workers") = 1);
    mod.def("run_corrector", &run_corrector, py::arg("cfg"), py::arg("out_dir"));
    mod.def("run_validate",
            [](const ExperimentConfig& cfg, const std::filesystem::path& out_dir) {
                std::ostringstream log;
                auto manifest = run_validate(cfg, out_dir, log);
                return py::make_tuple(manifest, log.str());
            },
            py::arg("cfg"), py::arg("out_dir"));
}
