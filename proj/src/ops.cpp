// SPDX-License-Identifier: Apache-2.0
#include "stratito/ops.hpp"

#include <cmath>

namespace stratito {

SpectralField partial_derivative(const SpectralField& f, int axis) {
    if (axis < 0 || axis >= f.dim_domain())
        throw std::out_of_range("partial_derivative: axis out of range");
    SpectralField out = f;
    out.set_zero_mean_flag(true);
    for (int c = 0; c < f.dim_range(); ++c) {
        for (int m = 0; m < f.num_modes(); ++m) {
            auto k = f.wavevector(m);
            out.coeff(c, m) = Complex{0.0, double(k[axis])} * f.coeff(c, m);
        }
    }
    return out;
}

SpectralField gradient(const SpectralField& f) {
    if (f.dim_range() != 1) throw std::invalid_argument("gradient: scalar fields only");
    SpectralField out(f.dim_domain(), f.dim_domain(), f.cutoff(), true, false);
    for (int j = 0; j < f.dim_domain(); ++j) {
        for (int m = 0; m < f.num_modes(); ++m) {
            auto k = f.wavevector(m);
            out.coeff(j, m) = Complex{0.0, double(k[j])} * f.coeff(0, m);
        }
    }
    return out;
}

SpectralField curl2d(const SpectralField& u) {
    if (u.dim_domain() != 2 || u.dim_range() != 2)
        throw std::invalid_argument("curl2d: needs a 2D vector field");
    SpectralField out(2, 1, u.cutoff(), true, false);
    for (int m = 0; m < u.num_modes(); ++m) {
        auto k = u.wavevector(m);
        out.coeff(0, m) = Complex{0.0, double(k[0])} * u.coeff(1, m) -
                          Complex{0.0, double(k[1])} * u.coeff(0, m);
    }
    return out;
}

SpectralField lie_derivative(const SpectralField& xi, const SpectralField& f) {
    if (xi.dim_range() != f.dim_domain())
        throw std::invalid_argument("lie_derivative: xi.dim_range must equal domain dimension");
    if (xi.dim_domain() != f.dim_domain() || xi.cutoff() != f.cutoff())
        throw std::invalid_argument("lie_derivative: domain/cutoff mismatch");
    SpectralField out(f.dim_domain(), f.dim_range(), f.cutoff());
    for (int j = 0; j < f.dim_domain(); ++j) {
        SpectralField dj = partial_derivative(f, j);
        out += dealiased_product(xi.component(j), dj);
    }
    out.enforce_reality();
    return out;
}

SpectralField holm_noise_op(const SpectralField& xi, const SpectralField& f) {
    int n = f.dim_domain();
    if (xi.dim_range() != n || f.dim_range() != n)
        throw std::invalid_argument("holm_noise_op: xi and f must both have d = N");
    if (xi.dim_domain() != n || xi.cutoff() != f.cutoff())
        throw std::invalid_argument("holm_noise_op: domain/cutoff mismatch");
    SpectralField out = lie_derivative(xi, f);
    for (int j = 0; j < n; ++j) {
        // stretching term f^j grad xi^j
        SpectralField grad_xij = gradient(xi.component(j));
        out += dealiased_product(f.component(j), grad_xij);
    }
    out.enforce_reality();
    return out;
}

SpectralField leray_project(const SpectralField& f) {
    int n = f.dim_domain();
    if (f.dim_range() != n) throw std::invalid_argument("leray_project: needs d = N");
    SpectralField out = f;
    for (int m = 0; m < f.num_modes(); ++m) {
        auto k = f.wavevector(m);
        double ksq = double(k[0]) * k[0] + double(k[1]) * k[1];
        if (ksq == 0.0) {
            for (int c = 0; c < n; ++c) out.coeff(c, m) = Complex{0.0, 0.0};
            continue;
        }
        Complex dot{0.0, 0.0};
        for (int c = 0; c < n; ++c) dot += double(k[c]) * f.coeff(c, m);
        for (int c = 0; c < n; ++c) out.coeff(c, m) -= double(k[c]) * dot / ksq;
    }
    out.set_zero_mean_flag(true);
    out.set_div_free_flag(true);
    return out;
}

double sobolev_norm(const SpectralField& f, SobolevIndex m) {
    KahanScalar acc;
    for (int mi = 0; mi < f.num_modes(); ++mi) {
        auto k = f.wavevector(mi);
        double ksq = double(k[0]) * k[0] + double(k[1]) * k[1];
        double w = std::pow(1.0 + ksq, double(m.m));
        for (int c = 0; c < f.dim_range(); ++c) acc.add(w * std::norm(f.coeff(c, mi)));
    }
    return std::sqrt(acc.value());
}

double inner_w0(const SpectralField& f, const SpectralField& g) {
    f.require_same_shape(g);
    KahanScalar acc;
    for (size_t i = 0; i < f.data().size(); ++i)
        acc.add((f.data()[i] * std::conj(g.data()[i])).real());
    return acc.value();
}

}  // namespace stratito
