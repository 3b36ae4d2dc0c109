// SPDX-License-Identifier: Apache-2.0
#include "stratito/models.hpp"

#include <cmath>
#include <stdexcept>

#include "stratito/ops.hpp"
#include "stratito/paths.hpp"

namespace stratito {

double gbm_exact(double x0, double sigma, double w_t) { return x0 * std::exp(sigma * w_t); }

SpectralField scalar_state(double value) {
    SpectralField f(1, 1, 0);
    f.at(0, {0, 0}) = Complex{value, 0.0};
    return f;
}

double scalar_value(const SpectralField& f) { return f.coeff(0, 0).real(); }

OperatorBundle make_scalar_multiplication_bundle(const std::vector<double>& sigmas) {
    OperatorBundle g;
    g.modes = int(sigmas.size());
    g.linear = true;
    g.eval = [sigmas](int i, double, const SpectralField& psi) {
        SpectralField out = psi;
        out *= sigmas[size_t(i)];
        return out;
    };
    g.frechet = [sigmas](int i, double, const SpectralField&, const SpectralField& phi) {
        SpectralField out = phi;
        out *= sigmas[size_t(i)];
        return out;
    };
    g.time_deriv = [](int, double, const SpectralField& psi) {
        return SpectralField(psi.dim_domain(), psi.dim_range(), psi.cutoff());
    };
    return g;
}

ModelSpec gbm_model(double x0, double sigma) {
    ModelSpec model;
    model.name = "gbm";
    model.dim_domain = 1;
    model.dim_range = 1;
    model.regularity_m = 0;
    model.noise = make_scalar_multiplication_bundle({sigma});
    model.family.modes = 1;
    model.family.c = {std::abs(sigma)};
    model.family.tail_sq = 0.0;
    model.family.xi.push_back([](double) { return scalar_state(1.0); });
    model.initial_data = [x0]() { return scalar_state(x0); };
    return model;
}

SpectralField advection_exact(const SpectralField& psi0, const std::vector<double>& xi_const,
                              double w_t) {
    if (int(xi_const.size()) != psi0.dim_domain())
        throw std::invalid_argument("advection_exact: xi dimension must match the domain");
    SpectralField out = psi0;
    for (int c = 0; c < psi0.dim_range(); ++c) {
        for (int m = 0; m < psi0.num_modes(); ++m) {
            auto k = psi0.wavevector(m);
            double phase = 0.0;
            for (int j = 0; j < psi0.dim_domain(); ++j) phase += k[j] * xi_const[size_t(j)] * w_t;
            out.coeff(c, m) = psi0.coeff(c, m) * std::polar(1.0, phase);
        }
    }
    return out;
}

SpectralField biot_savart(const SpectralField& w) {
    if (w.dim_domain() != 2 || w.dim_range() != 1)
        throw std::invalid_argument("biot_savart: needs a scalar field on the 2-torus");
    if (std::abs(w.coeff(0, w.mode_index({0, 0}))) > 1e-14)
        throw std::invalid_argument("biot_savart: vorticity must have zero mean");
    SpectralField u(2, 2, w.cutoff(), true, true);
    for (int m = 0; m < w.num_modes(); ++m) {
        auto k = w.wavevector(m);
        double ksq = double(k[0]) * k[0] + double(k[1]) * k[1];
        if (ksq == 0.0) continue;
        Complex wk = w.coeff(0, m);
        u.coeff(0, m) = Complex{0.0, double(k[1]) / ksq} * wk;
        u.coeff(1, m) = Complex{0.0, -double(k[0]) / ksq} * wk;
    }
    return u;
}

ModelSpec nse2d_model(const NoiseFamily& fam, double nu, int m,
                      std::function<SpectralField()> initial_data) {
    if (!fam.divergence_free)
        throw std::invalid_argument("nse2d_model: noise family must be divergence-free");
    ModelSpec model;
    model.name = "nse2d";
    model.dim_domain = 2;
    model.dim_range = 2;
    model.regularity_m = m;
    model.drift.nu = nu;
    model.drift.apply = [](double, const SpectralField& u) {
        SpectralField adv = leray_project(lie_derivative(u, u));
        adv *= -1.0;
        return adv;
    };
    model.drift.growth_c = 1.0;
    model.drift.growth_p = 1.0;
    model.noise = make_transport_bundle(fam, TransportVariant::LerayHolm);
    model.family = fam;
    model.initial_data = std::move(initial_data);
    model.guard_threshold = 1e6;
    return model;
}

ModelSpec modulated_model(const NoiseFamily& fam, std::function<double(double)> f,
                          std::function<double(double)> fprime,
                          std::function<SpectralField()> initial_data, int m) {
    ModelSpec model;
    model.name = "modulated";
    model.dim_domain = 2;
    model.dim_range = 1;
    model.regularity_m = m;
    model.noise = make_transport_bundle(fam, TransportVariant::Modulated, f, fprime);
    model.family = fam;
    model.initial_data = std::move(initial_data);
    model.guard_threshold = 1e6;
    return model;
}

ModelSpec advection_model(const NoiseFamily& fam, std::function<SpectralField()> initial_data,
                          int m) {
    ModelSpec model;
    model.name = "advection";
    model.dim_domain = 1;
    model.dim_range = 1;
    model.regularity_m = m;
    model.noise = make_transport_bundle(fam, TransportVariant::PureAdvection);
    model.family = fam;
    model.initial_data = std::move(initial_data);
    model.guard_threshold = 1e6;
    return model;
}

SpectralField taylor_green_velocity(int cutoff) {
    if (cutoff < 1) throw std::invalid_argument("taylor_green_velocity: cutoff must be >= 1");
    // u = (sin x1 cos x2, -cos x1 sin x2)
    SpectralField u(2, 2, cutoff, true, true);
    auto set4 = [&](int comp, int s1, int s2, Complex v) {
        u.at(comp, {s1, s2}) = v;
    };
    // sin a cos b = sum over signs: (e^{ia}-e^{-ia})(e^{ib}+e^{-ib})/(4i)
    Complex q{0.0, -0.25};  // 1/(4i)
    set4(0, 1, 1, q);
    set4(0, 1, -1, q);
    set4(0, -1, 1, -q);
    set4(0, -1, -1, -q);
    // -cos a sin b
    set4(1, 1, 1, -q);
    set4(1, -1, 1, -q);
    set4(1, 1, -1, q);
    set4(1, -1, -1, q);
    u.enforce_reality();
    return u;
}

SpectralField single_mode_1d(int cutoff, int wavenumber, double amplitude) {
    SpectralField f(1, 1, cutoff);
    // amplitude * sin(wavenumber x)
    f.at(0, {wavenumber, 0}) = Complex{0.0, -0.5 * amplitude};
    f.at(0, {-wavenumber, 0}) = Complex{0.0, 0.5 * amplitude};
    return f;
}

SpectralField smooth_random_field(int dim_domain, int dim_range, int cutoff, double decay,
                                  std::uint64_t seed, bool solenoidal) {
    SpectralField f(dim_domain, dim_range, cutoff);
    auto z = rng::standard_normals(rng::stream_key(seed, 0x5eedf1e1dULL, 0),
                                   size_t(2 * dim_range * f.num_modes()));
    size_t zi = 0;
    for (int c = 0; c < dim_range; ++c) {
        for (int m = 0; m < f.num_modes(); ++m) {
            auto k = f.wavevector(m);
            double ksq = double(k[0]) * k[0] + double(k[1]) * k[1];
            double amp = std::exp(-decay * std::sqrt(ksq));
            f.coeff(c, m) = amp * Complex{z[zi], z[zi + 1]};
            zi += 2;
        }
    }
    f.enforce_reality();
    if (solenoidal) f = leray_project(f);
    return f;
}

}  // namespace stratito
