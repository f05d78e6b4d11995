#pragma once

// Tensor composition, partial trace, partial transpose, Schmidt
// decomposition and the positive-partial-transpose separability test.

#include <algorithm>
#include <string>
#include <vector>

#include "eig.hpp"
#include "matrix.hpp"
#include "states.hpp"

namespace quditkit {

inline Ket compose(const std::vector<Ket>& states) {
    if (states.empty()) throw validation_error("compose: empty state list");
    std::vector<std::size_t> dims;
    std::vector<cx> amps{1.0};
    for (const Ket& psi : states) {
        for (std::size_t s = 0; s < psi.dims().count(); ++s) dims.push_back(psi.dims()[s]);
        std::vector<cx> next(amps.size() * psi.size());
        for (std::size_t i = 0; i < amps.size(); ++i)
            for (std::size_t j = 0; j < psi.size(); ++j)
                next[i * psi.size() + j] = amps[i] * psi[j];
        amps = std::move(next);
    }
    return Ket(std::move(amps), DimSpec(std::move(dims)));
}

inline DensityOp compose(const std::vector<DensityOp>& states) {
    if (states.empty()) throw validation_error("compose: empty state list");
    std::vector<std::size_t> dims;
    Matrix acc = Matrix::identity(1);
    for (const DensityOp& rho : states) {
        for (std::size_t s = 0; s < rho.dims().count(); ++s) dims.push_back(rho.dims()[s]);
        acc = kron(acc, rho.matrix());
    }
    return DensityOp::unchecked(std::move(acc), DimSpec(std::move(dims)));
}

namespace detail {

inline std::vector<std::size_t> subsystem_strides(const DimSpec& dims) {
    std::vector<std::size_t> strides(dims.count(), 1);
    for (std::size_t s = dims.count(); s-- > 1;) strides[s - 1] = strides[s] * dims[s];
    return strides;
}

}  // namespace detail

// Contraction over the traced subsystems' indices. Kept subsystems stay in
// their original order.
inline DensityOp partial_trace(const DensityOp& rho, const std::vector<std::size_t>& keep) {
    const DimSpec& dims = rho.dims();
    if (keep.empty()) throw validation_error("partial_trace: keep set is empty");
    std::vector<std::size_t> kept = keep;
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    if (kept.back() >= dims.count()) throw validation_error("partial_trace: subsystem index out of range");

    const std::vector<std::size_t> strides = detail::subsystem_strides(dims);
    std::vector<std::size_t> traced;
    for (std::size_t s = 0; s < dims.count(); ++s)
        if (!std::binary_search(kept.begin(), kept.end(), s)) traced.push_back(s);

    std::vector<std::size_t> kept_dims;
    for (std::size_t s : kept) kept_dims.push_back(dims[s]);
    std::size_t kept_total = 1;
    for (std::size_t d : kept_dims) kept_total *= d;
    std::size_t traced_total = 1;
    for (std::size_t s : traced) traced_total *= dims[s];

    const auto offset_of = [&](const std::vector<std::size_t>& subsystems, std::size_t flat) {
        std::size_t off = 0;
        for (std::size_t i = subsystems.size(); i-- > 0;) {
            const std::size_t s = subsystems[i];
            off += (flat % dims[s]) * strides[s];
            flat /= dims[s];
        }
        return off;
    };

    Matrix out(kept_total, kept_total);
    for (std::size_t kr = 0; kr < kept_total; ++kr) {
        const std::size_t row_base = offset_of(kept, kr);
        for (std::size_t kc = 0; kc < kept_total; ++kc) {
            const std::size_t col_base = offset_of(kept, kc);
            cx acc{0.0, 0.0};
            for (std::size_t t = 0; t < traced_total; ++t) {
                const std::size_t toff = offset_of(traced, t);
                acc += rho.matrix()(row_base + toff, col_base + toff);
            }
            out(kr, kc) = acc;
        }
    }
    return DensityOp::unchecked(std::move(out), DimSpec(std::move(kept_dims)));
}

// Transpose the row/column indices of one subsystem. The result is
// Hermitian and trace-1 but not necessarily positive, hence a raw Matrix.
inline Matrix partial_transpose(const DensityOp& rho, std::size_t sys) {
    const DimSpec& dims = rho.dims();
    if (sys >= dims.count()) throw validation_error("partial_transpose: subsystem index out of range");
    const std::vector<std::size_t> strides = detail::subsystem_strides(dims);
    const std::size_t d = dims.total();
    const std::size_t ds = dims[sys];
    const std::size_t stride = strides[sys];

    Matrix out(d, d);
    for (std::size_t r = 0; r < d; ++r) {
        const std::size_t rs = (r / stride) % ds;
        for (std::size_t c = 0; c < d; ++c) {
            const std::size_t cs = (c / stride) % ds;
            const std::size_t rr = r - rs * stride + cs * stride;
            const std::size_t cc = c - cs * stride + rs * stride;
            out(rr, cc) = rho.matrix()(r, c);
        }
    }
    return out;
}

struct SchmidtDecomp {
    std::vector<double> coefficients;  // descending, sum of squares = 1
    Matrix left_basis;                 // d_a x k, orthonormal columns
    Matrix right_basis;                // d_b x k, orthonormal columns
    std::size_t rank = 0;              // coefficients above threshold
};

// psi = sum_j c_j |left_j> (x) |right_j| via SVD of the coefficient matrix.
inline SchmidtDecomp schmidt(const Ket& psi, double rank_threshold = 1e-10) {
    const DimSpec& dims = psi.dims();
    if (dims.count() != 2) throw dimension_error("schmidt: state must be bipartite");
    const std::size_t da = dims[0];
    const std::size_t db = dims[1];
    Matrix coeff(da, db);
    for (std::size_t j = 0; j < da; ++j)
        for (std::size_t k = 0; k < db; ++k) coeff(j, k) = psi[j * db + k];

    const SvdResult s = svd(coeff);
    SchmidtDecomp out;
    out.coefficients = s.s;
    out.left_basis = s.u;
    out.right_basis = conjugate(s.v);
    out.rank = 0;
    for (double c : out.coefficients)
        if (c > rank_threshold) ++out.rank;
    return out;
}

inline bool is_maximally_entangled(const Ket& psi, double tol = 1e-9) {
    const SchmidtDecomp sd = schmidt(psi);
    const std::size_t dmin = std::min(psi.dims()[0], psi.dims()[1]);
    const double target = 1.0 / std::sqrt(static_cast<double>(dmin));
    for (double c : sd.coefficients)
        if (std::abs(c - target) > tol) return false;
    return true;
}

enum class PptVerdict { separable_by_ppt, entangled, ppt_inconclusive };

struct PptResult {
    double min_eig;
    PptVerdict verdict;
};

inline const char* to_string(PptVerdict v) {
    switch (v) {
        case PptVerdict::separable_by_ppt: return "separable-by-PPT";
        case PptVerdict::entangled: return "entangled";
        case PptVerdict::ppt_inconclusive: return "PPT (inconclusive)";
    }
    return "?";
}

// Peres-Horodecki test. A negative eigenvalue of the partial transpose
// certifies entanglement at any dimension; a positive partial transpose is
// conclusive for separability only at 2x2 and 2x3.
inline PptResult ppt_test(const DensityOp& rho) {
    if (rho.dims().count() != 2) throw dimension_error("ppt_test: state must be bipartite");
    const Matrix pt = partial_transpose(rho, 1);
    const double min_eig = hermitian_eigenvalues(pt, 1e-8).front();
    if (min_eig < -1e-10) return {min_eig, PptVerdict::entangled};
    if (rho.dim() <= 6) return {min_eig, PptVerdict::separable_by_ppt};
    return {min_eig, PptVerdict::ppt_inconclusive};
}

}  // namespace quditkit
