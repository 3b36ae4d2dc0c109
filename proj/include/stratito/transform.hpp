// SPDX-License-Identifier: Apache-2.0
#ifndef STRATITO_TRANSFORM_HPP
#define STRATITO_TRANSFORM_HPP

#include <functional>
#include <vector>

#include "stratito/field.hpp"

namespace stratito {

// Grid size large enough to evaluate a cutoff-K field without wraparound.
int eval_grid_size(int cutoff);
// Grid size satisfying the 2/3 (3K+1) rule for quadratic products.
int dealias_grid_size(int cutoff);

/// Collocation values of one range component on the uniform grid
/// x_j = 2pi j / ng per dimension (row-major for N=2).  The imaginary
/// part is dropped; real fields lose nothing.
std::vector<double> to_grid(const SpectralField& f, int comp, int ng);

/// Forward transform of per-component grid data back to a cutoff-K field;
/// reality is re-symmetrized to kill rounding asymmetry.
SpectralField from_grid(const std::vector<std::vector<double>>& comps, int dim_domain, int cutoff,
                        int ng);

/// Dealiased pointwise product.  One factor must be scalar (d = 1); the
/// result has the range dimension of the other factor.
SpectralField dealiased_product(const SpectralField& f, const SpectralField& g);

/// Pointwise application of a scalar function to a scalar field, via the
/// padded grid.  Exact for polynomial func of degree <= 2 at the default
/// padding; otherwise the usual spectral-truncation caveat applies.
SpectralField apply_pointwise(const SpectralField& f, const std::function<double(double)>& func);

}  // namespace stratito

#endif
