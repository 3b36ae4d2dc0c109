// SPDX-License-Identifier: Apache-2.0
#ifndef STRATITO_OPS_HPP
#define STRATITO_OPS_HPP

#include "stratito/field.hpp"
#include "stratito/transform.hpp"

namespace stratito {

/// Spectral d/dx_j: coefficient at k picks up a factor i k_j.
SpectralField partial_derivative(const SpectralField& f, int axis);

/// Gradient of a scalar field, as a vector field with d = N.
SpectralField gradient(const SpectralField& f);

/// Scalar curl on the 2-torus: d1 u^2 - d2 u^1.
SpectralField curl2d(const SpectralField& u);

/// Advection L_xi f = sum_j xi^j d_j f, dealiased.
SpectralField lie_derivative(const SpectralField& xi, const SpectralField& f);

/// Transport-plus-stretching operator B(xi, f) = sum_j (xi^j d_j f + f^j grad xi^j).
SpectralField holm_noise_op(const SpectralField& xi, const SpectralField& f);

/// Orthogonal projection onto zero-mean divergence-free fields:
/// coeff(k) -> coeff(k) - k (k.coeff(k)) / |k|^2, zero mode removed.
SpectralField leray_project(const SpectralField& f);

/// ( sum_k (1 + |k|^2)^m |f_k|^2 )^{1/2} summed over range components.
double sobolev_norm(const SpectralField& f, SobolevIndex m);

/// W^0 (= L^2 with normalized measure) inner product.
double inner_w0(const SpectralField& f, const SpectralField& g);

}  // namespace stratito

#endif
