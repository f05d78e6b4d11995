#pragma once

// Entanglement and coherence quantifiers: purity, von Neumann entropy,
// entanglement entropy, two-qubit concurrence, p-norm distance and p-norm
// coherence, plus a property-check suite for the coherence axioms.

#include <algorithm>
#include <cmath>
#include <vector>

#include "eig.hpp"
#include "matrix.hpp"
#include "multipartite.hpp"
#include "random.hpp"
#include "states.hpp"

namespace quditkit {

inline double purity(const DensityOp& rho) { return rho.purity(); }

enum class EntropyBase { two, natural };

// -sum lambda log(lambda) with 0 log 0 := 0; eigenvalues in [-1e-10, 0)
// are clamped to 0.
inline double von_neumann_entropy(const DensityOp& rho, EntropyBase base = EntropyBase::two) {
    const std::vector<double> eigs = hermitian_eigenvalues(rho.matrix(), 1e-8);
    double s = 0.0;
    for (double lambda : eigs) {
        if (lambda < 0.0) lambda = 0.0;
        if (lambda > 0.0) s -= lambda * std::log(lambda);
    }
    return base == EntropyBase::two ? s / std::log(2.0) : s;
}

inline double entanglement_entropy(const DensityOp& rho, std::size_t subsystem,
                                   EntropyBase base = EntropyBase::two) {
    return von_neumann_entropy(partial_trace(rho, {subsystem}), base);
}

namespace detail {

inline Matrix spin_flipped(const Matrix& rho4) {
    static const Matrix yy = kron(pauli_y(), pauli_y());
    return yy * conjugate(rho4) * yy;
}

inline double concurrence_from_spectrum(std::vector<double> eigs) {
    std::sort(eigs.begin(), eigs.end(), std::greater<double>());
    double c = 0.0;
    for (std::size_t i = 0; i < eigs.size(); ++i) {
        double lambda = eigs[i];
        if (lambda < -1e-10) throw numerical_error("concurrence: spectrum not positive");
        // the sqrt would amplify eigenvalue rounding noise to ~1e-8
        if (lambda <= 1e-12) lambda = 0.0;
        c += (i == 0 ? 1.0 : -1.0) * std::sqrt(lambda);
    }
    return std::max(0.0, c);
}

// Spectrum of rho (sy x sy) rho^* (sy x sy) through the Hermitian route
// sqrt(rho) rho~ sqrt(rho), which shares its eigenvalues.
inline std::vector<double> concurrence_spectrum(const Matrix& rho4) {
    const Matrix root =
        mat_func(rho4, [](double x) { return std::sqrt(std::max(x, 0.0)); }, 1e-8);
    return hermitian_eigenvalues(root * spin_flipped(rho4) * root, 1e-8);
}

// Direct route for matrices whose Lambda happens to be Hermitian (the
// real Bell-diagonal family); valid even when rho itself is not positive.
inline std::vector<double> concurrence_spectrum_direct(const Matrix& rho4) {
    const Matrix lambda = rho4 * spin_flipped(rho4);
    if (hermiticity_defect(lambda) > 1e-9)
        throw numerical_error("concurrence: direct route needs a Hermitian Lambda");
    return hermitian_eigenvalues(lambda, 1e-9);
}

}  // namespace detail

// max{0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)} over the descending
// spectrum of rho (sy x sy) rho^* (sy x sy).
inline double concurrence(const DensityOp& rho) {
    if (rho.dims() != DimSpec{2, 2}) throw dimension_error("concurrence: dims must be [2,2]");
    return detail::concurrence_from_spectrum(detail::concurrence_spectrum(rho.matrix()));
}

// (sum_j |lambda_j(rho - eta)|^p)^{1/p}; p = 1 is the trace distance,
// p = 2 the Hilbert-Schmidt distance.
inline double p_norm_distance(const DensityOp& rho, const DensityOp& eta, double p) {
    if (!(p >= 1.0)) throw validation_error("p_norm_distance: p must be at least 1");
    if (rho.dims() != eta.dims()) throw shape_error("p_norm_distance: dimension mismatch");
    const std::vector<double> eigs = hermitian_eigenvalues(rho.matrix() - eta.matrix(), 1e-7);
    double acc = 0.0;
    for (double lambda : eigs) acc += std::pow(std::abs(lambda), p);
    return std::pow(acc, 1.0 / p);
}

// Distance from rho to its dephased counterpart.
inline double p_norm_coherence(const DensityOp& rho, double p) {
    return p_norm_distance(rho, dephase(rho), p);
}

struct CoherenceAxiomsReport {
    std::size_t samples = 0;
    bool positivity_ok = true;       // C >= 0, zero iff diagonal
    bool dephase_monotone_ok = true; // C(dephase(rho)) = 0 <= C(rho)
    bool convexity_ok = true;        // C(sum p rho) <= sum p C(rho)
    double max_convexity_excess = 0.0;
};

// Random-sample checks of the coherence axioms for the p-norm quantifier.
// Monotonicity is exercised under the dephasing channel only.
inline CoherenceAxiomsReport run_coherence_axioms(std::uint64_t seed, std::size_t samples,
                                                  double p, const DimSpec& dims = DimSpec{2}) {
    SplitMix64 rng(seed);
    CoherenceAxiomsReport report;
    report.samples = samples;
    for (std::size_t i = 0; i < samples; ++i) {
        const DensityOp a = random_density(rng, dims);
        const DensityOp b = random_density(rng, dims);

        const double ca = p_norm_coherence(a, p);
        if (ca < 0.0) report.positivity_ok = false;
        if (p_norm_coherence(dephase(a), p) > 1e-12) report.dephase_monotone_ok = false;

        const double w = rng.uniform53();
        Matrix mixm = a.matrix();
        mixm *= cx{w, 0.0};
        Matrix bm = b.matrix();
        bm *= cx{1.0 - w, 0.0};
        mixm += bm;
        const DensityOp mix = DensityOp::unchecked(std::move(mixm), dims);
        const double lhs = p_norm_coherence(mix, p);
        const double rhs = w * ca + (1.0 - w) * p_norm_coherence(b, p);
        report.max_convexity_excess = std::max(report.max_convexity_excess, lhs - rhs);
        if (lhs > rhs + 1e-9) report.convexity_ok = false;
    }
    return report;
}

}  // namespace quditkit
