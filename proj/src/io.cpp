// SPDX-License-Identifier: Apache-2.0
#include "stratito/io.hpp"

#include <openssl/evp.h>

#include <bit>
#include <cstdint>
#include <cstring>
#include <iomanip>
#include <sstream>

static_assert(std::endian::native == std::endian::little,
              "binary containers are specified little-endian");

namespace stratito {

namespace {

constexpr char kFieldMagic[8] = {'S', 'P', 'D', 'E', 'F', 'L', 'D', '1'};
constexpr char kNoiseMagic[8] = {'S', 'P', 'D', 'E', 'N', 'S', 'E', '1'};

template <typename T>
void put(std::ostream& os, const T& v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::istream& is) {
    T v{};
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
    return v;
}

void render_field_binary_to(const SpectralField& f, std::ostream& os) {
    os.write(kFieldMagic, 8);
    put<std::uint32_t>(os, std::uint32_t(f.dim_domain()));
    put<std::uint32_t>(os, std::uint32_t(f.dim_range()));
    put<std::uint32_t>(os, std::uint32_t(f.cutoff()));
    std::uint32_t flags = (f.zero_mean_flag() ? 1u : 0u) | (f.div_free_flag() ? 2u : 0u);
    put<std::uint32_t>(os, flags);
    for (const auto& c : f.data()) {
        put<double>(os, c.real());
        put<double>(os, c.imag());
    }
}

void write_field_binary(const SpectralField& f, const std::filesystem::path& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open for writing: " + path.string());
    render_field_binary_to(f, os);
    if (!os) throw IoError("write failed: " + path.string());
}

void write_field_csv(const SpectralField& f, const std::filesystem::path& path) {
    std::ofstream os(path);
    if (!os) throw IoError("cannot open for writing: " + path.string());
    os << "# stratito-field v1\n";
    os << "# N=" << f.dim_domain() << " d=" << f.dim_range() << " K=" << f.cutoff()
       << " zero_mean=" << int(f.zero_mean_flag()) << " div_free=" << int(f.div_free_flag())
       << "\n";
    os << "k1,k2,comp,re,im\n";
    os << std::setprecision(17);
    for (int c = 0; c < f.dim_range(); ++c)
        for (int m = 0; m < f.num_modes(); ++m) {
            auto k = f.wavevector(m);
            os << k[0] << ',' << k[1] << ',' << c << ',' << f.coeff(c, m).real() << ','
               << f.coeff(c, m).imag() << '\n';
        }
    if (!os) throw IoError("write failed: " + path.string());
}

SpectralField read_field_binary(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot open for reading: " + path.string());
    char magic[8];
    is.read(magic, 8);
    if (!is || std::memcmp(magic, kFieldMagic, 8) != 0)
        throw IoError("not a field container: " + path.string());
    auto n = get<std::uint32_t>(is);
    auto d = get<std::uint32_t>(is);
    auto kk = get<std::uint32_t>(is);
    auto flags = get<std::uint32_t>(is);
    SpectralField f(int(n), int(d), int(kk), flags & 1u, flags & 2u);
    for (auto& c : f.data()) {
        double re = get<double>(is);
        double im = get<double>(is);
        c = Complex{re, im};
    }
    if (!is) throw IoError("truncated field container: " + path.string());
    return f;
}

SpectralField read_field_csv(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open for reading: " + path.string());
    std::string line;
    int n = 0, d = 0, kk = -1, zero_mean = 0, div_free = 0;
    if (!std::getline(is, line) || line.rfind("# stratito-field", 0) != 0)
        throw IoError("not a field csv: " + path.string());
    if (!std::getline(is, line) ||
        std::sscanf(line.c_str(), "# N=%d d=%d K=%d zero_mean=%d div_free=%d", &n, &d, &kk,
                    &zero_mean, &div_free) != 5)
        throw IoError("bad field csv header: " + path.string());
    std::getline(is, line);  // column header
    SpectralField f(n, d, kk, zero_mean, div_free);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        int k1, k2, c;
        double re, im;
        if (std::sscanf(line.c_str(), "%d,%d,%d,%lf,%lf", &k1, &k2, &c, &re, &im) != 5)
            throw IoError("bad field csv row in " + path.string());
        f.at(c, {k1, k2}) = Complex{re, im};
    }
    return f;
}

}  // namespace

void write_field(const SpectralField& f, const std::filesystem::path& path) {
    if (path.extension() == ".csv")
        write_field_csv(f, path);
    else
        write_field_binary(f, path);
}

SpectralField read_field(const std::filesystem::path& path) {
    if (path.extension() == ".csv") return read_field_csv(path);
    return read_field_binary(path);
}

void write_increments(const BrownianIncrements& inc, const std::filesystem::path& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open for writing: " + path.string());
    os.write(kNoiseMagic, 8);
    put<std::uint32_t>(os, std::uint32_t(inc.modes));
    put<std::uint32_t>(os, std::uint32_t(inc.grid.steps));
    put<double>(os, inc.grid.dt());
    put<std::uint64_t>(os, inc.seed);
    put<std::uint64_t>(os, inc.stream);
    put<std::uint32_t>(os, std::uint32_t(inc.coarsen_factor));
    for (double v : inc.values) put<double>(os, v);
    if (!os) throw IoError("write failed: " + path.string());
}

BrownianIncrements read_increments(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot open for reading: " + path.string());
    char magic[8];
    is.read(magic, 8);
    if (!is || std::memcmp(magic, kNoiseMagic, 8) != 0)
        throw IoError("not a noise container: " + path.string());
    BrownianIncrements inc;
    inc.modes = int(get<std::uint32_t>(is));
    auto steps = get<std::uint32_t>(is);
    double dt = get<double>(is);
    inc.grid = TimeGrid(dt * steps, int(steps));
    inc.seed = get<std::uint64_t>(is);
    inc.stream = get<std::uint64_t>(is);
    inc.coarsen_factor = int(get<std::uint32_t>(is));
    inc.values.resize(size_t(inc.modes) * steps);
    for (auto& v : inc.values) v = get<double>(is);
    if (!is) throw IoError("truncated noise container: " + path.string());
    return inc;
}

std::ofstream open_csv(const std::filesystem::path& path, const std::string& kind,
                       const std::string& columns) {
    std::ofstream os(path);
    if (!os) throw IoError("cannot open for writing: " + path.string());
    os << "# stratito-csv v1 kind=" << kind << "\n";
    os << columns << "\n";
    os << std::setprecision(17);
    return os;
}

std::string render_field_binary(const SpectralField& f) {
    std::ostringstream os(std::ios::binary);
    render_field_binary_to(f, os);
    return os.str();
}

std::string render_trajectory_csv(const TrajectoryRecord& traj) {
    std::ostringstream os;
    os << "# stratito-csv v1 kind=trajectory\n";
    os << "step,t,energy,enstrophy,corrector_norm,stopped\n";
    os << std::setprecision(17);
    for (size_t k = 0; k < traj.diagnostics.size(); ++k) {
        const auto& d = traj.diagnostics[k];
        os << k << ',' << d.t << ',' << d.energy << ',' << d.enstrophy << ',' << d.corrector_norm
           << ',' << int(d.stopped) << '\n';
    }
    return os.str();
}

void write_trajectory_csv(const TrajectoryRecord& traj, const std::filesystem::path& path) {
    std::ofstream os(path);
    if (!os) throw IoError("cannot open for writing: " + path.string());
    os << render_trajectory_csv(traj);
    if (!os) throw IoError("write failed: " + path.string());
}

std::string sha256_file(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot open for digest: " + path.string());
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
    char buf[1 << 16];
    while (is) {
        is.read(buf, sizeof(buf));
        EVP_DigestUpdate(ctx, buf, size_t(is.gcount()));
    }
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx, md, &len);
    EVP_MD_CTX_free(ctx);
    std::ostringstream os;
    os << std::hex << std::setfill('0');
    for (unsigned int i = 0; i < len; ++i) os << std::setw(2) << int(md[i]);
    return os.str();
}

}  // namespace stratito
