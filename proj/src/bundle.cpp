// SPDX-License-Identifier: Apache-2.0
#include "stratito/bundle.hpp"

#include <cmath>
#include <stdexcept>

#include "stratito/ops.hpp"
#include "stratito/transform.hpp"

namespace stratito {

double default_fd_eps(const SpectralField& psi) {
    return 1e-5 * (1.0 + sobolev_norm(psi, SobolevIndex(0)));
}

SpectralField fd_frechet(const OperatorBundle& g, int i, double t, const SpectralField& psi,
                         const SpectralField& phi, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("fd_frechet: eps must be positive");
    SpectralField plus = psi;
    plus.axpy(eps, phi);
    SpectralField minus = psi;
    minus.axpy(-eps, phi);
    SpectralField out = g.eval(i, t, plus);
    out -= g.eval(i, t, minus);
    out *= 1.0 / (2.0 * eps);
    if (!out.all_finite())
        throw std::runtime_error("fd_frechet: non-finite evaluation at mode " + std::to_string(i));
    return out;
}

namespace {

CorrectorReport finish_report(KahanFieldAccumulator&& acc, std::vector<double>&& norms, int m,
                              double tail_sq) {
    CorrectorReport rep;
    rep.field = acc.take();
    rep.field *= 0.5;
    rep.field.enforce_reality();
    for (auto& n : norms) n *= 0.5;
    rep.summand_norms = std::move(norms);
    rep.tail_sq = tail_sq;
    rep.norm_m_minus_1 = sobolev_norm(rep.field, SobolevIndex(std::max(m - 1, -1)));
    rep.norm_m_minus_2 = sobolev_norm(rep.field, SobolevIndex(std::max(m - 2, -1)));
    return rep;
}

}  // namespace

CorrectorReport corrector(const OperatorBundle& g, double t, const SpectralField& psi, int m,
                          double tail_sq) {
    KahanFieldAccumulator acc(psi);
    std::vector<double> norms;
    norms.reserve(g.modes);
    double eps = default_fd_eps(psi);
    for (int i = 0; i < g.modes; ++i) {
        SpectralField gi = g.eval(i, t, psi);
        SpectralField summand =
            g.has_frechet() ? g.frechet(i, t, psi, gi) : fd_frechet(g, i, t, psi, gi, eps);
        if (!summand.all_finite())
            throw std::runtime_error("corrector: non-finite summand at mode " + std::to_string(i));
        norms.push_back(sobolev_norm(summand, SobolevIndex(0)));
        acc.add(summand);
    }
    return finish_report(std::move(acc), std::move(norms), m, tail_sq);
}

CorrectorReport corrector_linear(const OperatorBundle& g, double t, const SpectralField& psi,
                                 int m, double tail_sq) {
    if (!g.linear)
        throw std::invalid_argument("corrector_linear: bundle does not carry the linear flag");
    KahanFieldAccumulator acc(psi);
    std::vector<double> norms;
    norms.reserve(g.modes);
    for (int i = 0; i < g.modes; ++i) {
        SpectralField summand = g.eval(i, t, g.eval(i, t, psi));
        if (!summand.all_finite())
            throw std::runtime_error("corrector_linear: non-finite summand at mode " +
                                     std::to_string(i));
        norms.push_back(sobolev_norm(summand, SobolevIndex(0)));
        acc.add(summand);
    }
    return finish_report(std::move(acc), std::move(norms), m, tail_sq);
}

CorrectorReport corrector_modulated(const NoiseFamily& fam,
                                    const std::function<double(double)>& fprime,
                                    const SpectralField& psi, double t, int m) {
    if (psi.dim_range() != 1)
        throw std::invalid_argument("corrector_modulated: scalar states only (d = 1)");
    SpectralField fp = apply_pointwise(psi, fprime);
    SpectralField fp2 = dealiased_product(fp, fp);
    KahanFieldAccumulator acc(psi);
    std::vector<double> norms;
    norms.reserve(fam.modes);
    for (int i = 0; i < fam.modes; ++i) {
        SpectralField xi = fam.eval(i, t);
        SpectralField inner = dealiased_product(fp2, lie_derivative(xi, psi));
        SpectralField summand = lie_derivative(xi, inner);
        norms.push_back(sobolev_norm(summand, SobolevIndex(0)));
        acc.add(summand);
    }
    return finish_report(std::move(acc), std::move(norms), m, fam.tail_sq);
}

OperatorBundle make_transport_bundle(const NoiseFamily& fam, TransportVariant variant,
                                     std::function<double(double)> f,
                                     std::function<double(double)> fprime) {
    OperatorBundle g;
    g.modes = fam.modes;
    switch (variant) {
        case TransportVariant::PureAdvection:
            g.linear = true;
            g.eval = [fam](int i, double t, const SpectralField& psi) {
                return lie_derivative(fam.eval(i, t), psi);
            };
            g.time_deriv = [fam](int i, double t, const SpectralField& psi) {
                return lie_derivative(fam.eval_dt(i, t), psi);
            };
            break;
        case TransportVariant::Holm:
            g.linear = true;
            g.eval = [fam](int i, double t, const SpectralField& psi) {
                return holm_noise_op(fam.eval(i, t), psi);
            };
            g.time_deriv = [fam](int i, double t, const SpectralField& psi) {
                return holm_noise_op(fam.eval_dt(i, t), psi);
            };
            break;
        case TransportVariant::LerayHolm:
            g.linear = true;
            g.eval = [fam](int i, double t, const SpectralField& psi) {
                return leray_project(holm_noise_op(fam.eval(i, t), psi));
            };
            g.time_deriv = [fam](int i, double t, const SpectralField& psi) {
                return leray_project(holm_noise_op(fam.eval_dt(i, t), psi));
            };
            break;
        case TransportVariant::Modulated: {
            if (!f || !fprime)
                throw std::invalid_argument("make_transport_bundle: modulated variant needs f, f'");
            g.linear = false;
            g.eval = [fam, f](int i, double t, const SpectralField& psi) {
                return lie_derivative(fam.eval(i, t), apply_pointwise(psi, f));
            };
            g.frechet = [fam, fprime](int i, double t, const SpectralField& psi,
                                      const SpectralField& phi) {
                SpectralField fp = apply_pointwise(psi, fprime);
                return lie_derivative(fam.eval(i, t), dealiased_product(fp, phi));
            };
            g.time_deriv = [fam, f](int i, double t, const SpectralField& psi) {
                return lie_derivative(fam.eval_dt(i, t), apply_pointwise(psi, f));
            };
            return g;
        }
    }
    // linear variants: D_u G_i(t, psi)[phi] = G_i(t, phi)
    auto eval = g.eval;
    g.frechet = [eval](int i, double t, const SpectralField&, const SpectralField& phi) {
        return eval(i, t, phi);
    };
    return g;
}

}  // namespace stratito
