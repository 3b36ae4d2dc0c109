// SPDX-License-Identifier: Apache-2.0
#include "stratito/transform.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <map>
#include <mutex>
#include <tuple>

namespace stratito {

namespace {

// Cache of FFTW plans keyed by (N, ng, sign).  Plans are created with
// FFTW_UNALIGNED so they can execute on arbitrary heap buffers via the
// new-array interface, which is thread-safe; only creation is locked.
class PlanCache {
  public:
    static PlanCache& instance() {
        static PlanCache cache;
        return cache;
    }

    fftw_plan get(int dim, int ng, int sign) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto key = std::make_tuple(dim, ng, sign);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;
        size_t total = (dim == 1) ? size_t(ng) : size_t(ng) * ng;
        std::vector<fftw_complex> buf(total);
        fftw_plan p;
        if (dim == 1)
            p = fftw_plan_dft_1d(ng, buf.data(), buf.data(), sign,
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
        else
            p = fftw_plan_dft_2d(ng, ng, buf.data(), buf.data(), sign,
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
        plans_[key] = p;
        return p;
    }

  private:
    PlanCache() = default;
    std::mutex mutex_;
    std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

int fft_bin(int k, int ng) { return k >= 0 ? k : ng + k; }

}  // namespace

int eval_grid_size(int cutoff) {
    int ng = 2 * cutoff + 2;
    return ng < 4 ? 4 : ng;
}

int dealias_grid_size(int cutoff) {
    int ng = 3 * cutoff + 1;
    if (ng % 2) ++ng;
    return ng < 4 ? 4 : ng;
}

std::vector<double> to_grid(const SpectralField& f, int comp, int ng) {
    int n = f.dim_domain();
    int kmax = f.cutoff();
    if (ng <= 2 * kmax) throw std::invalid_argument("to_grid: grid too small for cutoff");
    size_t total = (n == 1) ? size_t(ng) : size_t(ng) * ng;
    std::vector<Complex> buf(total, Complex{0.0, 0.0});
    for (int m = 0; m < f.num_modes(); ++m) {
        auto k = f.wavevector(m);
        size_t idx = (n == 1) ? size_t(fft_bin(k[0], ng))
                              : size_t(fft_bin(k[0], ng)) * ng + fft_bin(k[1], ng);
        buf[idx] = f.coeff(comp, m);
    }
    fftw_plan p = PlanCache::instance().get(n, ng, FFTW_BACKWARD);
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(buf.data()),
                     reinterpret_cast<fftw_complex*>(buf.data()));
    std::vector<double> out(total);
    for (size_t i = 0; i < total; ++i) out[i] = buf[i].real();
    return out;
}

SpectralField from_grid(const std::vector<std::vector<double>>& comps, int dim_domain, int cutoff,
                        int ng) {
    int d = int(comps.size());
    if (d < 1) throw std::invalid_argument("from_grid: no components");
    if (ng <= 2 * cutoff) throw std::invalid_argument("from_grid: grid too small for cutoff");
    size_t total = (dim_domain == 1) ? size_t(ng) : size_t(ng) * ng;
    SpectralField out(dim_domain, d, cutoff);
    std::vector<Complex> buf(total);
    fftw_plan p = PlanCache::instance().get(dim_domain, ng, FFTW_FORWARD);
    double scale = 1.0 / double(total);
    for (int c = 0; c < d; ++c) {
        if (comps[c].size() != total) throw std::invalid_argument("from_grid: bad grid size");
        for (size_t i = 0; i < total; ++i) buf[i] = Complex{comps[c][i], 0.0};
        fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(buf.data()),
                         reinterpret_cast<fftw_complex*>(buf.data()));
        for (int m = 0; m < out.num_modes(); ++m) {
            auto k = out.wavevector(m);
            size_t idx = (dim_domain == 1)
                             ? size_t(fft_bin(k[0], ng))
                             : size_t(fft_bin(k[0], ng)) * ng + fft_bin(k[1], ng);
            out.coeff(c, m) = buf[idx] * scale;
        }
    }
    out.enforce_reality();
    return out;
}

SpectralField dealiased_product(const SpectralField& f, const SpectralField& g) {
    if (f.dim_domain() != g.dim_domain() || f.cutoff() != g.cutoff())
        throw std::invalid_argument("dealiased_product: domain/cutoff mismatch");
    if (f.dim_range() != 1 && g.dim_range() != 1)
        throw std::invalid_argument("dealiased_product: one factor must be scalar");
    const SpectralField& scalar = (f.dim_range() == 1) ? f : g;
    const SpectralField& other = (f.dim_range() == 1) ? g : f;
    int ng = dealias_grid_size(f.cutoff());
    std::vector<double> s = to_grid(scalar, 0, ng);
    std::vector<std::vector<double>> prods(other.dim_range());
    for (int c = 0; c < other.dim_range(); ++c) {
        prods[c] = to_grid(other, c, ng);
        for (size_t i = 0; i < prods[c].size(); ++i) prods[c][i] *= s[i];
    }
    return from_grid(prods, f.dim_domain(), f.cutoff(), ng);
}

SpectralField apply_pointwise(const SpectralField& f,
                              const std::function<double(double)>& func) {
    if (f.dim_range() != 1) throw std::invalid_argument("apply_pointwise: scalar fields only");
    int ng = dealias_grid_size(f.cutoff());
    std::vector<double> vals = to_grid(f, 0, ng);
    for (auto& v : vals) v = func(v);
    return from_grid({vals}, f.dim_domain(), f.cutoff(), ng);
}

}  // namespace stratito
