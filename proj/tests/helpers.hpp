// SPDX-License-Identifier: Apache-2.0
// Shared fixtures for the unit tests: deterministic random fields and a
// few physical-space oracles that deliberately avoid the library's own
// spectral code paths.
#ifndef STRATITO_TESTS_HELPERS_HPP
#define STRATITO_TESTS_HELPERS_HPP

#include <cmath>
#include <vector>

#include "stratito/field.hpp"
#include "stratito/paths.hpp"

namespace testhelp {

using stratito::Complex;
using stratito::SpectralField;

// Random real field with exponentially decaying mode amplitudes.
inline SpectralField random_field(int dim_domain, int dim_range, int cutoff, std::uint64_t seed,
                                  double decay = 0.5) {
    SpectralField f(dim_domain, dim_range, cutoff);
    auto z = stratito::rng::standard_normals(stratito::rng::stream_key(seed, 101, 0),
                                             size_t(2 * dim_range * f.num_modes()));
    size_t zi = 0;
    for (int c = 0; c < dim_range; ++c)
        for (int m = 0; m < f.num_modes(); ++m) {
            auto k = f.wavevector(m);
            double kk = std::sqrt(double(k[0]) * k[0] + double(k[1]) * k[1]);
            f.coeff(c, m) = std::exp(-decay * kk) * Complex{z[zi], z[zi + 1]};
            zi += 2;
        }
    f.enforce_reality();
    return f;
}

// Direct (brute-force) evaluation of a 1D field at x, from its coefficients.
inline double eval1d(const SpectralField& f, int comp, double x) {
    Complex acc{0.0, 0.0};
    for (int m = 0; m < f.num_modes(); ++m) {
        auto k = f.wavevector(m);
        acc += f.coeff(comp, m) * std::polar(1.0, k[0] * x);
    }
    return acc.real();
}

// Same on the 2-torus.
inline double eval2d(const SpectralField& f, int comp, double x1, double x2) {
    Complex acc{0.0, 0.0};
    for (int m = 0; m < f.num_modes(); ++m) {
        auto k = f.wavevector(m);
        acc += f.coeff(comp, m) * std::polar(1.0, k[0] * x1 + k[1] * x2);
    }
    return acc.real();
}

// Relative L2 distance of two coefficient arrays.
inline double rel_l2(const SpectralField& a, const SpectralField& b) {
    double num = 0.0, den = 0.0;
    for (size_t i = 0; i < a.data().size(); ++i) {
        num += std::norm(a.data()[i] - b.data()[i]);
        den += std::norm(b.data()[i]);
    }
    return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

inline double max_coeff_diff(const SpectralField& a, const SpectralField& b) {
    double d = 0.0;
    for (size_t i = 0; i < a.data().size(); ++i)
        d = std::max(d, std::abs(a.data()[i] - b.data()[i]));
    return d;
}

}  // namespace testhelp

#endif
