// SPDX-License-Identifier: Apache-2.0
#ifndef STRATITO_BUNDLE_HPP
#define STRATITO_BUNDLE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "stratito/family.hpp"
#include "stratito/field.hpp"

namespace stratito {

/// A noise operator G given by its action on each Brownian component:
/// eval(i,t,psi) = G_i(t,psi), with optional analytic Frechet directional
/// derivative and time derivative.
struct OperatorBundle {
    int modes = 0;
    bool linear = false;
    std::function<SpectralField(int, double, const SpectralField&)> eval;
    // frechet(i, t, psi, phi) = D_u G_i(t, psi)[phi]; empty -> fall back to fd_frechet
    std::function<SpectralField(int, double, const SpectralField&, const SpectralField&)> frechet;
    std::function<SpectralField(int, double, const SpectralField&)> time_deriv;

    bool has_frechet() const { return bool(frechet); }
    bool has_time_deriv() const { return bool(time_deriv); }
};

/// Assembled corrector at (t, psi) plus per-mode diagnostics.
struct CorrectorReport {
    SpectralField field;
    std::vector<double> summand_norms;  // W^0 norm of each (1/2) D_u G_i [G_i]
    double tail_sq = 0.0;               // carried over from the family when known
    double norm_m_minus_1 = 0.0;        // corrector norm in W^{m-1,2}
    double norm_m_minus_2 = 0.0;        // corrector norm in W^{m-2,2}
};

/// Default finite-difference step for directional derivatives.
double default_fd_eps(const SpectralField& psi);

/// Central difference [G_i(t, psi + eps phi) - G_i(t, psi - eps phi)] / (2 eps).
SpectralField fd_frechet(const OperatorBundle& g, int i, double t, const SpectralField& psi,
                         const SpectralField& phi, double eps);

/// (1/2) sum_{i<M} D_u G_i(t,psi)[G_i(t,psi)], ascending i, compensated.
/// Uses the analytic frechet when present, fd_frechet otherwise.  m is the
/// model regularity index used only for the report's norms.
CorrectorReport corrector(const OperatorBundle& g, double t, const SpectralField& psi, int m = 1,
                          double tail_sq = 0.0);

/// Linear shortcut (1/2) sum_i G_i(t, G_i(t, psi)); requires the linear flag.
CorrectorReport corrector_linear(const OperatorBundle& g, double t, const SpectralField& psi,
                                 int m = 1, double tail_sq = 0.0);

/// Closed form for modulated transport noise G_i(psi) = L_{xi_i}(f(psi)):
/// (1/2) sum_i L_{xi_i}( f'(psi)^2 L_{xi_i} psi ), scalar states only.
CorrectorReport corrector_modulated(const NoiseFamily& fam, const std::function<double(double)>& fprime,
                                    const SpectralField& psi, double t, int m = 1);

enum class TransportVariant { PureAdvection, Holm, LerayHolm, Modulated };

/// Transport bundles over a noise family.  Linear variants carry frechet =
/// eval; the modulated variant carries the analytic phi -> L_xi(f'(psi) phi).
OperatorBundle make_transport_bundle(const NoiseFamily& fam, TransportVariant variant,
                                     std::function<double(double)> f = {},
                                     std::function<double(double)> fprime = {});

}  // namespace stratito

#endif
