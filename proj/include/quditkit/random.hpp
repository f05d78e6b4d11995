#pragma once

// Seeded, cross-platform reproducible randomness. splitmix64 feeds a 53-bit
// uniform; everything else (Gaussians, random states, unitaries, directions)
// is built on top of it so identical seeds give identical streams on every
// platform.

#include <array>
#include <cstdint>
#include <vector>

#include "matrix.hpp"
#include "states.hpp"

namespace quditkit {

class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 bits of mantissa.
    double uniform53() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform53(); }

    // Standard normal via Box-Muller.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform53();
        while (u1 <= 0.0) u1 = uniform53();
        const double u2 = uniform53();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    cx complex_gaussian() { return cx{gaussian(), gaussian()}; }

  private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

inline Matrix random_gaussian_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.complex_gaussian();
    return m;
}

inline Ket random_ket(SplitMix64& rng, const DimSpec& dims) {
    std::vector<cx> amps(dims.total());
    for (cx& a : amps) a = rng.complex_gaussian();
    return Ket::normalized(std::move(amps), dims);
}

// G G^dagger / tr(G G^dagger) with G complex Gaussian: PSD with full
// support almost surely.
inline DensityOp random_density(SplitMix64& rng, const DimSpec& dims) {
    const std::size_t d = dims.total();
    const Matrix g = random_gaussian_matrix(rng, d, d);
    Matrix m = g * dagger(g);
    const double t = trace(m).real();
    m *= cx{1.0 / t, 0.0};
    return DensityOp::unchecked(std::move(m), dims);
}

inline Ket random_product_ket(SplitMix64& rng, const DimSpec& dims) {
    std::vector<cx> amps{1.0};
    for (std::size_t s = 0; s < dims.count(); ++s) {
        std::vector<cx> factor(dims[s]);
        double n2 = 0.0;
        for (cx& a : factor) {
            a = rng.complex_gaussian();
            n2 += std::norm(a);
        }
        const double inv = 1.0 / std::sqrt(n2);
        std::vector<cx> next(amps.size() * factor.size());
        for (std::size_t i = 0; i < amps.size(); ++i)
            for (std::size_t j = 0; j < factor.size(); ++j)
                next[i * factor.size() + j] = amps[i] * factor[j] * inv;
        amps = std::move(next);
    }
    return Ket::normalized(std::move(amps), dims);
}

// Gram-Schmidt on a Gaussian matrix; columns are orthonormal.
inline Matrix random_unitary(SplitMix64& rng, std::size_t d) {
    Matrix g = random_gaussian_matrix(rng, d, d);
    for (std::size_t c = 0; c < d; ++c) {
        for (std::size_t prev = 0; prev < c; ++prev) {
            cx overlap{0.0, 0.0};
            for (std::size_t r = 0; r < d; ++r) overlap += std::conj(g(r, prev)) * g(r, c);
            for (std::size_t r = 0; r < d; ++r) g(r, c) -= overlap * g(r, prev);
        }
        double n2 = 0.0;
        for (std::size_t r = 0; r < d; ++r) n2 += std::norm(g(r, c));
        const double inv = 1.0 / std::sqrt(n2);
        for (std::size_t r = 0; r < d; ++r) g(r, c) *= inv;
    }
    return g;
}

inline std::array<double, 3> random_unit_vector3(SplitMix64& rng) {
    while (true) {
        const double x = rng.gaussian();
        const double y = rng.gaussian();
        const double z = rng.gaussian();
        const double n = std::sqrt(x * x + y * y + z * z);
        if (n > 1e-6) return {x / n, y / n, z / n};
    }
}

}  // namespace quditkit
