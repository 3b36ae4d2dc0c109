// SPDX-License-Identifier: Apache-2.0
#ifndef STRATITO_MODELS_HPP
#define STRATITO_MODELS_HPP

#include <functional>
#include <string>

#include "stratito/bundle.hpp"
#include "stratito/integrate.hpp"

namespace stratito {

/// A named, fully wired system: drift, noise bundle, family, initial data.
struct ModelSpec {
    std::string name;
    int dim_domain = 1;
    int dim_range = 1;
    int regularity_m = 1;
    DriftSpec drift;
    OperatorBundle noise;
    NoiseFamily family;
    std::function<SpectralField()> initial_data;
    double guard_threshold = 1e12;
};

/// Exact solution of dX = sigma X o dW (equivalently the corrected Ito
/// form): X_0 exp(sigma W_t).
double gbm_exact(double x0, double sigma, double w_t);

/// Scalar values as K = 0 fields on the 1-torus, so the integrators and
/// crossvar machinery run unchanged on classical SDEs.
SpectralField scalar_state(double value);
double scalar_value(const SpectralField& f);

/// Multiplication bundle G_i(psi) = sigma_i psi (classical diagonal noise).
OperatorBundle make_scalar_multiplication_bundle(const std::vector<double>& sigmas);
ModelSpec gbm_model(double x0, double sigma);

/// Translation solution of pure transport with one constant-speed mode:
/// coeff(k) -> coeff(k) exp(i k.xi w_t), i.e. psi0(x + xi w_t).
SpectralField advection_exact(const SpectralField& psi0, const std::vector<double>& xi_const,
                              double w_t);

/// 2D vorticity-to-velocity map u_k = i (k2, -k1) w_k / |k|^2; curl(u) = w.
SpectralField biot_savart(const SpectralField& w);

/// Velocity-form 2D Navier-Stokes with Leray-projected Holm transport noise:
/// drift nu Lap u - P L_u u, dealiased.
ModelSpec nse2d_model(const NoiseFamily& fam, double nu, int m,
                      std::function<SpectralField()> initial_data);

/// Scalar transport model with vorticity-modulated noise G_i = L_{xi_i} f(psi).
ModelSpec modulated_model(const NoiseFamily& fam, std::function<double(double)> f,
                          std::function<double(double)> fprime,
                          std::function<SpectralField()> initial_data, int m = 1);

/// Pure advection of a scalar by the family (A = 0).
ModelSpec advection_model(const NoiseFamily& fam, std::function<SpectralField()> initial_data,
                          int m = 1);

/// Built-in initial data profiles.
SpectralField taylor_green_velocity(int cutoff);
SpectralField single_mode_1d(int cutoff, int wavenumber = 1, double amplitude = 1.0);
SpectralField smooth_random_field(int dim_domain, int dim_range, int cutoff, double decay,
                                  std::uint64_t seed, bool solenoidal = false);

}  // namespace stratito

#endif
