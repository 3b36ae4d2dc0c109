// SPDX-License-Identifier: Apache-2.0
#include "stratito/family.hpp"

#include <cmath>
#include <stdexcept>

namespace stratito {

double NoiseFamily::sum_c_sq() const {
    KahanScalar acc;
    for (double ci : c) acc.add(ci * ci);
    return acc.value();
}

SpectralField NoiseFamily::eval(int i, double t) const {
    if (i < 0 || i >= modes) throw std::out_of_range("NoiseFamily: mode index out of range");
    return xi[i](t);
}

SpectralField NoiseFamily::eval_dt(int i, double t) const {
    if (i < 0 || i >= modes) throw std::out_of_range("NoiseFamily: mode index out of range");
    if (!xi_dt.empty() && xi_dt[i]) return xi_dt[i](t);
    const double h = 1e-6;
    SpectralField hi = xi[i](t + h);
    hi -= xi[i](t - h);
    hi *= 1.0 / (2.0 * h);
    return hi;
}

double power_law_tail_sq(int modes, double decay, double amplitude) {
    if (decay <= 0.5) return std::numeric_limits<double>::infinity();
    // sum_{i > M} i^{-2s} <= M^{1-2s} / (2s - 1)
    return amplitude * amplitude * std::pow(double(modes), 1.0 - 2.0 * decay) /
           (2.0 * decay - 1.0);
}

NoiseFamily make_shear_family(int modes, double decay, int cutoff, double amplitude,
                              double time_eps) {
    NoiseFamily fam;
    fam.modes = modes;
    fam.divergence_free = true;
    fam.tail_sq = power_law_tail_sq(modes, decay, amplitude);
    for (int i = 0; i < modes; ++i) {
        double ci = amplitude * std::pow(double(i + 1), -decay);
        fam.c.push_back(ci);
        int wav = i / 2 + 1;
        if (wav > cutoff) throw std::invalid_argument("make_shear_family: wavenumber beyond cutoff");
        int along = i % 2;       // varying coordinate
        int comp = 1 - along;    // nonzero velocity component, perpendicular to it
        double omega = 1.0 + 0.5 * i;
        auto base = [=](double scale) {
            SpectralField f(2, 2, cutoff, true, true);
            std::array<int, 2> k = {0, 0};
            k[along] = wav;
            // cos(wav * x_along) = (e^{i wav x} + e^{-i wav x}) / 2
            f.at(comp, k) = Complex{0.5 * scale, 0.0};
            k[along] = -wav;
            f.at(comp, k) = Complex{0.5 * scale, 0.0};
            return f;
        };
        fam.xi.push_back([=](double t) {
            return base(ci * (1.0 + time_eps * std::sin(omega * t)));
        });
        fam.xi_dt.push_back([=](double t) {
            return base(ci * time_eps * omega * std::cos(omega * t));
        });
    }
    return fam;
}

NoiseFamily make_constant_family_1d(const std::vector<double>& speeds, int cutoff) {
    NoiseFamily fam;
    fam.modes = int(speeds.size());
    fam.divergence_free = true;  // constants have zero divergence
    fam.tail_sq = 0.0;
    for (double v : speeds) {
        fam.c.push_back(std::abs(v));
        fam.xi.push_back([v, cutoff](double) {
            SpectralField f(1, 1, cutoff);
            f.at(0, {0, 0}) = Complex{v, 0.0};
            return f;
        });
        fam.xi_dt.push_back([cutoff](double) { return SpectralField(1, 1, cutoff); });
    }
    return fam;
}

NoiseFamily make_cosine_family_1d(int modes, double decay, int cutoff, double amplitude) {
    NoiseFamily fam;
    fam.modes = modes;
    fam.divergence_free = false;
    fam.tail_sq = power_law_tail_sq(modes, decay, amplitude);
    for (int i = 0; i < modes; ++i) {
        double ci = amplitude * std::pow(double(i + 1), -decay);
        int wav = i + 1;
        if (wav > cutoff)
            throw std::invalid_argument("make_cosine_family_1d: wavenumber beyond cutoff");
        fam.c.push_back(ci);
        fam.xi.push_back([=](double) {
            SpectralField f(1, 1, cutoff);
            f.at(0, {wav, 0}) = Complex{0.5 * ci, 0.0};
            f.at(0, {-wav, 0}) = Complex{0.5 * ci, 0.0};
            return f;
        });
        fam.xi_dt.push_back([cutoff](double) { return SpectralField(1, 1, cutoff); });
    }
    return fam;
}

}  // namespace stratito
