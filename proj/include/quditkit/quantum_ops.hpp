#pragma once

// Postulate machinery: unitary evolution, propagators, expectation values,
// variances, projective and general measurements, the Robertson bound and
// the nondemolition commutator check. hbar = 1 throughout.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "eig.hpp"
#include "matrix.hpp"
#include "states.hpp"

namespace quditkit {

inline Ket evolve_unitary(const Ket& psi, const Matrix& u, double tol = 1e-10) {
    if (!is_unitary(u, tol)) throw validation_error("evolve_unitary: operator is not unitary");
    if (u.cols() != psi.size()) throw shape_error("evolve_unitary: dimension mismatch");
    std::vector<cx> out(psi.size(), cx{0.0, 0.0});
    for (std::size_t r = 0; r < u.rows(); ++r)
        for (std::size_t c = 0; c < u.cols(); ++c) out[r] += u(r, c) * psi[c];
    return Ket(std::move(out), psi.dims());
}

inline DensityOp evolve_unitary(const DensityOp& rho, const Matrix& u, double tol = 1e-10) {
    if (!is_unitary(u, tol)) throw validation_error("evolve_unitary: operator is not unitary");
    if (u.cols() != rho.dim()) throw shape_error("evolve_unitary: dimension mismatch");
    return DensityOp::unchecked(u * rho.matrix() * dagger(u), rho.dims());
}

// U_t = e^{-i H t} for a time-independent Hermitian H.
inline Matrix propagator(const Matrix& h, double t) {
    if (!is_hermitian(h)) throw validation_error("propagator: Hamiltonian is not Hermitian");
    return mat_func_complex(h, [t](double lambda) { return std::polar(1.0, -lambda * t); });
}

inline double expectation(const DensityOp& rho, const Matrix& obs, double tol = 1e-10) {
    if (!is_hermitian(obs)) throw validation_error("expectation: observable is not Hermitian");
    if (obs.rows() != rho.dim()) throw shape_error("expectation: dimension mismatch");
    const cx t = trace(rho.matrix() * obs);
    if (std::abs(t.imag()) > tol)
        throw numerical_error("expectation: imaginary residue beyond tolerance");
    return t.real();
}

inline double expectation(const Ket& psi, const Matrix& obs, double tol = 1e-10) {
    return expectation(dm_from_ket(psi), obs, tol);
}

inline double variance(const DensityOp& rho, const Matrix& obs) {
    const double mean = expectation(rho, obs);
    const double second = expectation(rho, obs * obs);
    return second - mean * mean;
}

inline double variance(const Ket& psi, const Matrix& obs) {
    return variance(dm_from_ket(psi), obs);
}

struct RobertsonReport {
    double lhs;   // sigma_A * sigma_B
    double rhs;   // |<[A, B]>| / 2
    bool holds;
};

inline RobertsonReport robertson_check(const DensityOp& rho, const Matrix& a, const Matrix& b) {
    if (!is_hermitian(a) || !is_hermitian(b))
        throw validation_error("robertson_check: observables must be Hermitian");
    const double va = std::max(variance(rho, a), 0.0);
    const double vb = std::max(variance(rho, b), 0.0);
    const double lhs = std::sqrt(va) * std::sqrt(vb);
    const double rhs = 0.5 * std::abs(trace(rho.matrix() * commutator(a, b)));
    return {lhs, rhs, lhs >= rhs - 1e-10};
}

inline RobertsonReport robertson_check(const Ket& psi, const Matrix& a, const Matrix& b) {
    return robertson_check(dm_from_ket(psi), a, b);
}

// true iff the observable commutes with the Hamiltonian, so repeated
// measurements are nondemolition.
inline bool qnd_check(const Matrix& obs, const Matrix& hamiltonian, double tol = 1e-10) {
    if (!is_hermitian(obs) || !is_hermitian(hamiltonian))
        throw validation_error("qnd_check: inputs must be Hermitian");
    return max_abs(commutator(obs, hamiltonian)) <= tol;
}

// ---------------------------------------------------------------------------
// Measurements
// ---------------------------------------------------------------------------

struct MeasurementSet {
    std::vector<Matrix> operators;
    std::vector<std::string> labels;
};

inline double completeness_defect(const std::vector<Matrix>& operators) {
    if (operators.empty()) throw validation_error("measurement: empty operator collection");
    Matrix acc(operators.front().rows(), operators.front().cols());
    for (const Matrix& m : operators) acc += dagger(m) * m;
    return max_abs_diff(acc, Matrix::identity(acc.rows()));
}

template <typename StateT>
struct MeasuredBranch {
    std::string label;
    double probability = 0.0;
    std::optional<StateT> post_state;  // absent for zero-probability branches
};

namespace detail {
constexpr double kZeroBranch = 1e-14;

inline std::vector<Matrix> basis_projectors(const Matrix& basis_columns) {
    if (!basis_columns.square())
        throw shape_error("projective_measure: basis matrix must be square");
    const std::size_t d = basis_columns.rows();
    std::vector<Matrix> projectors;
    projectors.reserve(d);
    for (std::size_t j = 0; j < d; ++j) {
        Matrix p(d, d);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c)
                p(r, c) = basis_columns(r, j) * std::conj(basis_columns(c, j));
        projectors.push_back(std::move(p));
    }
    return projectors;
}
}  // namespace detail

inline std::vector<MeasuredBranch<Ket>> projective_measure(const Ket& psi,
                                                           const std::vector<Matrix>& projectors) {
    if (completeness_defect(projectors) > 1e-10)
        throw validation_error("projective_measure: projectors are not complete");
    std::vector<MeasuredBranch<Ket>> out;
    for (std::size_t j = 0; j < projectors.size(); ++j) {
        std::vector<cx> proj(psi.size(), cx{0.0, 0.0});
        for (std::size_t r = 0; r < psi.size(); ++r)
            for (std::size_t c = 0; c < psi.size(); ++c) proj[r] += projectors[j](r, c) * psi[c];
        double p = 0.0;
        for (const cx& a : proj) p += std::norm(a);
        MeasuredBranch<Ket> branch;
        branch.label = std::to_string(j);
        if (p < detail::kZeroBranch) {
            branch.probability = 0.0;
        } else {
            branch.probability = p;
            const double inv = 1.0 / std::sqrt(p);
            for (cx& a : proj) a *= inv;
            branch.post_state = Ket(std::move(proj), psi.dims());
        }
        out.push_back(std::move(branch));
    }
    return out;
}

inline std::vector<MeasuredBranch<Ket>> projective_measure(const Ket& psi,
                                                           const Matrix& basis_columns) {
    return projective_measure(psi, detail::basis_projectors(basis_columns));
}

inline std::vector<MeasuredBranch<DensityOp>> general_measure(const DensityOp& rho,
                                                              const MeasurementSet& ms) {
    if (completeness_defect(ms.operators) > 1e-10)
        throw validation_error("general_measure: operators do not satisfy completeness");
    std::vector<MeasuredBranch<DensityOp>> out;
    for (std::size_t m = 0; m < ms.operators.size(); ++m) {
        const Matrix& op = ms.operators[m];
        const Matrix post = op * rho.matrix() * dagger(op);
        const double p = trace(post).real();
        MeasuredBranch<DensityOp> branch;
        branch.label = m < ms.labels.size() ? ms.labels[m] : std::to_string(m);
        if (p < detail::kZeroBranch) {
            branch.probability = 0.0;
        } else {
            branch.probability = p;
            Matrix renorm = post;
            renorm *= cx{1.0 / p, 0.0};
            branch.post_state = DensityOp::unchecked(std::move(renorm), rho.dims());
        }
        out.push_back(std::move(branch));
    }
    return out;
}

inline std::vector<MeasuredBranch<DensityOp>> projective_measure(const DensityOp& rho,
                                                                 const Matrix& basis_columns) {
    MeasurementSet ms;
    ms.operators = detail::basis_projectors(basis_columns);
    for (std::size_t j = 0; j < ms.operators.size(); ++j) ms.labels.push_back(std::to_string(j));
    return general_measure(rho, ms);
}

}  // namespace quditkit
