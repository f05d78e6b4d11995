#pragma once

// Hermitian eigendecomposition via cyclic complex Jacobi rotations, plus the
// pieces built on top of it: thin SVD, functions of Hermitian matrices, and
// characteristic-polynomial coefficients.
//
// Jacobi is exact enough at the dimensions this library targets (d <= 64)
// and keeps the whole numerical stack dependency-free. Each rotation zeroes
// one off-diagonal pivot |A_pq| by conjugating with a phased plane rotation;
// sweeps repeat until every pivot is below the threshold.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

#include "matrix.hpp"

namespace quditkit {

struct EigDecomp {
    std::vector<double> eigenvalues;  // ascending
    Matrix eigenvectors;              // orthonormal columns, same order
};

namespace detail {

constexpr double kJacobiOffThreshold = 1e-13;
constexpr int kJacobiMaxSweeps = 100;

// One two-sided rotation on rows/columns (p, q) zeroing A(p, q).
// The rotation is U = diag(1, e^{-i phi}) * [[c, s], [-s, c]] embedded at
// (p, q), with phi the phase of A(p, q).
inline void jacobi_rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
    const cx beta = a(p, q);
    const double b = std::abs(beta);
    if (b == 0.0) return;
    const cx phase = beta / b;  // e^{i phi}

    const double alpha = a(p, p).real();
    const double gamma = a(q, q).real();
    const double theta = (gamma - alpha) / (2.0 * b);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    const cx sp = s * phase;             // s e^{i phi}
    const cx spc = s * std::conj(phase); // s e^{-i phi}
    const std::size_t n = a.rows();

    for (std::size_t j = 0; j < n; ++j) {  // rows: A <- U^dagger A
        const cx apj = a(p, j);
        const cx aqj = a(q, j);
        a(p, j) = c * apj - sp * aqj;
        a(q, j) = s * apj + c * phase * aqj;
    }
    for (std::size_t i = 0; i < n; ++i) {  // columns: A <- A U
        const cx aip = a(i, p);
        const cx aiq = a(i, q);
        a(i, p) = c * aip - spc * aiq;
        a(i, q) = s * aip + c * std::conj(phase) * aiq;
    }
    for (std::size_t i = 0; i < n; ++i) {  // accumulate V <- V U
        const cx vip = v(i, p);
        const cx viq = v(i, q);
        v(i, p) = c * vip - spc * viq;
        v(i, q) = s * vip + c * std::conj(phase) * viq;
    }
    // pivot is zero by construction; kill the rounding residue
    a(p, q) = 0.0;
    a(q, p) = 0.0;
}

}  // namespace detail

inline EigDecomp hermitian_eig(const Matrix& input, double asym_tol = 1e-10) {
    if (!input.square()) throw shape_error("hermitian_eig: matrix is not square");
    const std::size_t n = input.rows();
    if (hermiticity_defect(input) > asym_tol)
        throw validation_error("hermitian_eig: input is not Hermitian within tolerance");

    // Partial traces and Bloch roundtrips accrue rounding noise; symmetrize.
    Matrix a(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            a(r, c) = 0.5 * (input(r, c) + std::conj(input(c, r)));

    // Work on a unit-scale copy so the absolute threshold is meaningful.
    const double scale = std::max(max_abs(a), 1e-300);
    a *= cx{1.0 / scale, 0.0};

    Matrix v = Matrix::identity(n);
    bool converged = false;
    for (int sweep = 0; sweep < detail::kJacobiMaxSweeps && !converged; ++sweep) {
        converged = true;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                if (std::abs(a(p, q)) > detail::kJacobiOffThreshold) {
                    detail::jacobi_rotate(a, v, p, q);
                    converged = false;
                }
    }
    if (!converged) throw numerical_error("hermitian_eig: Jacobi sweeps did not converge");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    EigDecomp out;
    out.eigenvalues.resize(n);
    out.eigenvectors = Matrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real() * scale;
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
    }
    return out;
}

inline std::vector<double> hermitian_eigenvalues(const Matrix& a, double asym_tol = 1e-10) {
    return hermitian_eig(a, asym_tol).eigenvalues;
}

struct SvdResult {
    Matrix u;                // m x k, orthonormal columns
    std::vector<double> s;   // k singular values, descending
    Matrix v;                // n x k, orthonormal columns; a = u diag(s) v^dagger
};

inline SvdResult svd(const Matrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    const std::size_t k = std::min(m, n);

    const EigDecomp gram = hermitian_eig(dagger(a) * a, 1e-8);

    SvdResult out;
    out.s.resize(k);
    out.u = Matrix(m, k);
    out.v = Matrix(n, k);

    // Top-k eigenpairs of A^dagger A, largest first. Eigenvalues at the
    // solver noise floor are exact zeros; the sqrt would otherwise turn
    // 1e-16 noise into 1e-8 singular values.
    const double floor = 1e-13 * std::max(gram.eigenvalues.empty() ? 0.0 : gram.eigenvalues.back(), 1.0);
    for (std::size_t j = 0; j < k; ++j) {
        const std::size_t src = n - 1 - j;
        const double lambda = gram.eigenvalues[src];
        out.s[j] = lambda > floor ? std::sqrt(lambda) : 0.0;
        for (std::size_t i = 0; i < n; ++i) out.v(i, j) = gram.eigenvectors(i, src);
    }

    // Left vectors: u_j = A v_j / s_j where defined, orthonormal fill-in
    // for null directions.
    const double null_tol = 1e-12 * std::max(1.0, out.s.empty() ? 0.0 : out.s[0]);
    std::size_t fill_candidate = 0;
    for (std::size_t j = 0; j < k; ++j) {
        if (out.s[j] > null_tol) {
            for (std::size_t i = 0; i < m; ++i) {
                cx acc{0.0, 0.0};
                for (std::size_t l = 0; l < n; ++l) acc += a(i, l) * out.v(l, j);
                out.u(i, j) = acc / out.s[j];
            }
            continue;
        }
        // Gram-Schmidt a canonical basis vector against the accepted columns.
        for (; fill_candidate < m; ++fill_candidate) {
            std::vector<cx> cand(m, cx{0.0, 0.0});
            cand[fill_candidate] = 1.0;
            for (std::size_t prev = 0; prev < j; ++prev) {
                cx overlap{0.0, 0.0};
                for (std::size_t i = 0; i < m; ++i) overlap += std::conj(out.u(i, prev)) * cand[i];
                for (std::size_t i = 0; i < m; ++i) cand[i] -= overlap * out.u(i, prev);
            }
            double norm2 = 0.0;
            for (const cx& z : cand) norm2 += std::norm(z);
            if (norm2 > 0.5) {
                const double inv = 1.0 / std::sqrt(norm2);
                for (std::size_t i = 0; i < m; ++i) out.u(i, j) = cand[i] * inv;
                ++fill_candidate;
                break;
            }
        }
    }
    return out;
}

// f applied through the spectral decomposition of a Hermitian matrix.
inline Matrix mat_func(const Matrix& a, const std::function<double(double)>& f,
                       double asym_tol = 1e-10) {
    const EigDecomp eig = hermitian_eig(a, asym_tol);
    const std::size_t n = a.rows();
    std::vector<cx> fl(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double y = f(eig.eigenvalues[i]);
        if (!std::isfinite(y))
            throw validation_error("mat_func: function undefined at an eigenvalue");
        fl[i] = y;
    }
    return eig.eigenvectors * Matrix::diag(fl) * dagger(eig.eigenvectors);
}

inline Matrix mat_func_complex(const Matrix& a, const std::function<cx(double)>& f,
                               double asym_tol = 1e-10) {
    const EigDecomp eig = hermitian_eig(a, asym_tol);
    const std::size_t n = a.rows();
    std::vector<cx> fl(n);
    for (std::size_t i = 0; i < n; ++i) {
        fl[i] = f(eig.eigenvalues[i]);
        if (!is_finite(fl[i]))
            throw validation_error("mat_func_complex: function undefined at an eigenvalue");
    }
    return eig.eigenvectors * Matrix::diag(fl) * dagger(eig.eigenvectors);
}

// Coefficients a_0..a_d with a_j the elementary symmetric polynomial of
// degree j in the given values, so det(A - x) = sum_j (-1)^j a_j x^{d-j}.
inline std::vector<double> char_coeffs_from_eigs(const std::vector<double>& eigs) {
    std::vector<double> a(eigs.size() + 1, 0.0);
    a[0] = 1.0;
    std::size_t used = 0;
    for (const double lambda : eigs) {
        ++used;
        for (std::size_t j = used; j >= 1; --j) a[j] += lambda * a[j - 1];
    }
    return a;
}

}  // namespace quditkit
