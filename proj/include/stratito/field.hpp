// SPDX-License-Identifier: Apache-2.0
#ifndef STRATITO_FIELD_HPP
#define STRATITO_FIELD_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace stratito {

using Complex = std::complex<double>;

/// Truncated Fourier representation of a real vector field on the torus
/// [0,2pi)^N with normalized measure (2pi)^{-N} dx.  Modes k with
/// |k_j| <= K are retained, so f(x) = sum_k coeff(k) e^{i k.x}.
/// Fields are immutable values in spirit: operations return new fields.
class SpectralField {
  public:
    SpectralField() = default;
    SpectralField(int dim_domain, int dim_range, int cutoff, bool zero_mean = false,
                  bool div_free = false);

    int dim_domain() const { return n_; }
    int dim_range() const { return d_; }
    int cutoff() const { return k_; }
    bool zero_mean_flag() const { return zero_mean_; }
    bool div_free_flag() const { return div_free_; }
    void set_zero_mean_flag(bool v) { zero_mean_ = v; }
    void set_div_free_flag(bool v) { div_free_ = v; }

    int modes_per_dim() const { return 2 * k_ + 1; }
    int num_modes() const { return num_modes_; }

    // Linear index of the lattice point k (each |k_j| <= K).
    int mode_index(const std::array<int, 2>& k) const;

    Complex& coeff(int comp, int mode_idx) { return coeffs_[comp * num_modes_ + mode_idx]; }
    const Complex& coeff(int comp, int mode_idx) const {
        return coeffs_[comp * num_modes_ + mode_idx];
    }
    Complex& at(int comp, const std::array<int, 2>& k) { return coeff(comp, mode_index(k)); }
    const Complex& at(int comp, const std::array<int, 2>& k) const {
        return coeff(comp, mode_index(k));
    }

    // Wavevector of a linear mode index.
    std::array<int, 2> wavevector(int mode_idx) const;

    std::vector<Complex>& data() { return coeffs_; }
    const std::vector<Complex>& data() const { return coeffs_; }

    bool same_shape(const SpectralField& other) const {
        return n_ == other.n_ && d_ == other.d_ && k_ == other.k_;
    }
    void require_same_shape(const SpectralField& other) const;

    // Extract one range component as a scalar field (shares flags only
    // where they make sense for scalars).
    SpectralField component(int comp) const;

    // Symmetrize coeff(-k) = conj(coeff(k)); applies the zero-mean flag.
    void enforce_reality();
    // Largest violation of the reality invariant.
    double reality_defect() const;
    // Largest |k . coeff(k)|.
    double divergence_defect() const;

    bool all_finite() const;

    SpectralField& operator+=(const SpectralField& rhs);
    SpectralField& operator-=(const SpectralField& rhs);
    SpectralField& operator*=(double s);
    friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
    friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
    friend SpectralField operator*(SpectralField a, double s) { return a *= s; }
    friend SpectralField operator*(double s, SpectralField a) { return a *= s; }

    // this += s * rhs
    void axpy(double s, const SpectralField& rhs);

  private:
    int n_ = 1;  // domain dimension (1 or 2)
    int d_ = 1;  // range dimension
    int k_ = 0;  // spectral cutoff
    int num_modes_ = 1;
    bool zero_mean_ = false;
    bool div_free_ = false;
    std::vector<Complex> coeffs_;
};

/// Kahan-compensated accumulation of fields, coefficient by coefficient.
/// Used wherever reproducible mode sums are required.
class KahanFieldAccumulator {
  public:
    explicit KahanFieldAccumulator(const SpectralField& shape);
    void add(const SpectralField& term);
    const SpectralField& sum() const { return sum_; }
    SpectralField take() { return std::move(sum_); }

  private:
    SpectralField sum_;
    std::vector<Complex> comp_;
};

/// Scalar Kahan accumulator for increment sums and quadratures.
class KahanScalar {
  public:
    void add(double x) {
        double y = x - comp_;
        double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Sobolev order m, -1 <= m.
struct SobolevIndex {
    int m = 0;
    explicit SobolevIndex(int order) : m(order) {
        if (order < -1) throw std::invalid_argument("SobolevIndex: order must be >= -1");
    }
};

}  // namespace stratito

#endif
