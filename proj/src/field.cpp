// SPDX-License-Identifier: Apache-2.0
#include "stratito/field.hpp"

#include <cmath>
#include <cstdlib>

namespace stratito {

SpectralField::SpectralField(int dim_domain, int dim_range, int cutoff, bool zero_mean,
                             bool div_free)
    : n_(dim_domain), d_(dim_range), k_(cutoff), zero_mean_(zero_mean), div_free_(div_free) {
    if (n_ != 1 && n_ != 2) throw std::invalid_argument("SpectralField: dim_domain must be 1 or 2");
    if (d_ < 1) throw std::invalid_argument("SpectralField: dim_range must be >= 1");
    if (k_ < 0) throw std::invalid_argument("SpectralField: cutoff must be >= 0");
    int per_dim = 2 * k_ + 1;
    num_modes_ = (n_ == 1) ? per_dim : per_dim * per_dim;
    coeffs_.assign(static_cast<size_t>(d_) * num_modes_, Complex{0.0, 0.0});
}

int SpectralField::mode_index(const std::array<int, 2>& k) const {
    int per_dim = modes_per_dim();
    if (n_ == 1) {
        if (std::abs(k[0]) > k_) throw std::out_of_range("mode_index: wavenumber beyond cutoff");
        return k[0] + k_;
    }
    if (std::abs(k[0]) > k_ || std::abs(k[1]) > k_)
        throw std::out_of_range("mode_index: wavenumber beyond cutoff");
    return (k[0] + k_) * per_dim + (k[1] + k_);
}

std::array<int, 2> SpectralField::wavevector(int mode_idx) const {
    int per_dim = modes_per_dim();
    if (n_ == 1) return {mode_idx - k_, 0};
    return {mode_idx / per_dim - k_, mode_idx % per_dim - k_};
}

void SpectralField::require_same_shape(const SpectralField& other) const {
    if (!same_shape(other))
        throw std::invalid_argument("SpectralField: shape mismatch (N, d, K must agree)");
}

SpectralField SpectralField::component(int comp) const {
    if (comp < 0 || comp >= d_) throw std::out_of_range("component: index out of range");
    SpectralField out(n_, 1, k_, zero_mean_, false);
    for (int m = 0; m < num_modes_; ++m) out.coeff(0, m) = coeff(comp, m);
    return out;
}

void SpectralField::enforce_reality() {
    for (int c = 0; c < d_; ++c) {
        for (int m = 0; m < num_modes_; ++m) {
            auto k = wavevector(m);
            std::array<int, 2> neg = {-k[0], -k[1]};
            int mn = mode_index(neg);
            if (mn < m) continue;
            Complex a = coeff(c, m);
            Complex b = coeff(c, mn);
            Complex avg = 0.5 * (a + std::conj(b));
            coeff(c, m) = avg;
            coeff(c, mn) = std::conj(avg);
        }
        // diagonal k = -k term is the zero mode; force it real
        std::array<int, 2> zero = {0, 0};
        int m0 = mode_index(zero);
        coeff(c, m0) = Complex{coeff(c, m0).real(), 0.0};
        if (zero_mean_) coeff(c, m0) = Complex{0.0, 0.0};
    }
}

double SpectralField::reality_defect() const {
    double worst = 0.0;
    for (int c = 0; c < d_; ++c) {
        for (int m = 0; m < num_modes_; ++m) {
            auto k = wavevector(m);
            int mn = mode_index({-k[0], -k[1]});
            worst = std::max(worst, std::abs(coeff(c, m) - std::conj(coeff(c, mn))));
        }
    }
    return worst;
}

double SpectralField::divergence_defect() const {
    if (d_ != n_) return 0.0;
    double worst = 0.0;
    for (int m = 0; m < num_modes_; ++m) {
        auto k = wavevector(m);
        Complex dot{0.0, 0.0};
        for (int c = 0; c < n_; ++c) dot += double(k[c]) * coeff(c, m);
        worst = std::max(worst, std::abs(dot));
    }
    return worst;
}

bool SpectralField::all_finite() const {
    for (const auto& c : coeffs_)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    return true;
}

SpectralField& SpectralField::operator+=(const SpectralField& rhs) {
    require_same_shape(rhs);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    div_free_ = div_free_ && rhs.div_free_;
    zero_mean_ = zero_mean_ && rhs.zero_mean_;
    return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& rhs) {
    require_same_shape(rhs);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    div_free_ = div_free_ && rhs.div_free_;
    zero_mean_ = zero_mean_ && rhs.zero_mean_;
    return *this;
}

SpectralField& SpectralField::operator*=(double s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

void SpectralField::axpy(double s, const SpectralField& rhs) {
    require_same_shape(rhs);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += s * rhs.coeffs_[i];
    div_free_ = div_free_ && rhs.div_free_;
    zero_mean_ = zero_mean_ && rhs.zero_mean_;
}

KahanFieldAccumulator::KahanFieldAccumulator(const SpectralField& shape)
    : sum_(shape.dim_domain(), shape.dim_range(), shape.cutoff()),
      comp_(shape.data().size(), Complex{0.0, 0.0}) {}

void KahanFieldAccumulator::add(const SpectralField& term) {
    sum_.require_same_shape(term);
    auto& s = sum_.data();
    const auto& t = term.data();
    for (size_t i = 0; i < s.size(); ++i) {
        Complex y = t[i] - comp_[i];
        Complex u = s[i] + y;
        comp_[i] = (u - s[i]) - y;
        s[i] = u;
    }
}

}  // namespace stratito
