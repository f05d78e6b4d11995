#pragma once

// Generalized Gell-Mann bases for SU(d): the diagonal, symmetric and
// antisymmetric traceless Hermitian generators, plus the structure
// constants of the algebra extracted from traces.
//
// The flat ordering is fixed and load-bearing for Bloch-coefficient
// indexing everywhere else in the library:
//
//   flat[0]            identity
//   flat[1..d-1]       diagonal, ascending j
//   flat[..]           symmetric, lexicographic (k, l), 1 <= k < l <= d
//   flat[..]           antisymmetric, same (k, l) order
//
// For d = 2 this reads [I, sigma_z, sigma_x, sigma_y]; for d = 3 the flat
// order is a permutation of the textbook lambda numbering (lambda_3 and
// lambda_8 come first).

#include <cstddef>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace quditkit {

// sqrt(2/(j(j+1))) * (|0><0| + ... + |j-1><j-1| - j |j><j|), 1 <= j <= d-1.
inline Matrix ggm_diagonal(std::size_t d, std::size_t j) {
    if (d < 2) throw dimension_error("ggm_diagonal: dimension must be at least 2");
    if (j < 1 || j > d - 1) throw validation_error("ggm_diagonal: index out of range");
    Matrix m(d, d);
    const double norm = std::sqrt(2.0 / static_cast<double>(j * (j + 1)));
    for (std::size_t k = 0; k < j; ++k) m(k, k) = norm;
    m(j, j) = -norm * static_cast<double>(j);
    return m;
}

// |k><l| + |l><k| with 1-based 1 <= k < l <= d.
inline Matrix ggm_symmetric(std::size_t d, std::size_t k, std::size_t l) {
    if (d < 2) throw dimension_error("ggm_symmetric: dimension must be at least 2");
    if (k < 1 || l <= k || l > d) throw validation_error("ggm_symmetric: index order violation");
    Matrix m(d, d);
    m(k - 1, l - 1) = 1.0;
    m(l - 1, k - 1) = 1.0;
    return m;
}

// -i(|k><l| - |l><k|) with 1-based 1 <= k < l <= d.
inline Matrix ggm_antisymmetric(std::size_t d, std::size_t k, std::size_t l) {
    if (d < 2) throw dimension_error("ggm_antisymmetric: dimension must be at least 2");
    if (k < 1 || l <= k || l > d) throw validation_error("ggm_antisymmetric: index order violation");
    Matrix m(d, d);
    m(k - 1, l - 1) = cx{0.0, -1.0};
    m(l - 1, k - 1) = cx{0.0, 1.0};
    return m;
}

struct GeneratorBasis {
    std::size_t dim = 0;
    Matrix identity;
    std::vector<Matrix> diagonal;       // d-1 entries
    std::vector<Matrix> symmetric;      // d(d-1)/2 entries
    std::vector<Matrix> antisymmetric;  // d(d-1)/2 entries
    std::vector<Matrix> flat;           // d*d entries in the documented order
    std::vector<std::string> flat_labels;
};

inline GeneratorBasis full_basis(std::size_t d) {
    if (d < 2 || d > 16) throw dimension_error("full_basis: dimension must be in [2, 16]");
    GeneratorBasis basis;
    basis.dim = d;
    basis.identity = Matrix::identity(d);
    basis.flat.push_back(basis.identity);
    basis.flat_labels.push_back("identity");
    for (std::size_t j = 1; j <= d - 1; ++j) {
        basis.diagonal.push_back(ggm_diagonal(d, j));
        basis.flat.push_back(basis.diagonal.back());
        basis.flat_labels.push_back("D(" + std::to_string(j) + ")");
    }
    for (std::size_t k = 1; k <= d; ++k)
        for (std::size_t l = k + 1; l <= d; ++l) {
            basis.symmetric.push_back(ggm_symmetric(d, k, l));
            basis.flat.push_back(basis.symmetric.back());
            basis.flat_labels.push_back("S(" + std::to_string(k) + "," + std::to_string(l) + ")");
        }
    for (std::size_t k = 1; k <= d; ++k)
        for (std::size_t l = k + 1; l <= d; ++l) {
            basis.antisymmetric.push_back(ggm_antisymmetric(d, k, l));
            basis.flat.push_back(basis.antisymmetric.back());
            basis.flat_labels.push_back("A(" + std::to_string(k) + "," + std::to_string(l) + ")");
        }
    return basis;
}

// The textbook Gell-Mann numbering for d = 3 (lambda_0 .. lambda_8), kept
// as an explicit permutation of the flat order for callers that state
// results in lambda indices.
inline std::vector<std::size_t> gell_mann_flat_index() {
    // lambda:      1  2  3  4  5  6  7  8
    // flat index:  3  6  1  4  7  5  8  2
    return {0, 3, 6, 1, 4, 7, 5, 8, 2};
}

struct StructureConstants {
    std::size_t count = 0;  // number of non-identity generators, d^2 - 1
    std::vector<double> f;  // totally antisymmetric
    std::vector<double> g;  // totally symmetric

    double f_at(std::size_t j, std::size_t k, std::size_t l) const {
        return f[((j - 1) * count + (k - 1)) * count + (l - 1)];
    }
    double g_at(std::size_t j, std::size_t k, std::size_t l) const {
        return g[((j - 1) * count + (k - 1)) * count + (l - 1)];
    }
};

// f_jkl = tr([G_j, G_k] G_l) / 4i and g_jkl = tr({G_j, G_k} G_l) / 4,
// computed from traces over the flat ordering (identity excluded).
// Never table-driven: the traces are the ground truth.
inline StructureConstants structure_constants(std::size_t d) {
    if (d < 2 || d > 6) throw dimension_error("structure_constants: dimension must be in [2, 6]");
    const GeneratorBasis basis = full_basis(d);
    const std::size_t n = d * d - 1;

    std::vector<Matrix> prod(n * n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            prod[j * n + k] = basis.flat[j + 1] * basis.flat[k + 1];

    StructureConstants out;
    out.count = n;
    out.f.assign(n * n * n, 0.0);
    out.g.assign(n * n * n, 0.0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            const Matrix comm = prod[j * n + k] - prod[k * n + j];
            const Matrix anti = prod[j * n + k] + prod[k * n + j];
            for (std::size_t l = 0; l < n; ++l) {
                const cx tf = trace(comm * basis.flat[l + 1]);
                const cx tg = trace(anti * basis.flat[l + 1]);
                if (std::abs(tf.real()) / 4.0 > 1e-12 || std::abs(tg.imag()) / 4.0 > 1e-12)
                    throw numerical_error("structure_constants: trace residue out of tolerance");
                out.f[(j * n + k) * n + l] = tf.imag() / 4.0;
                out.g[(j * n + k) * n + l] = tg.real() / 4.0;
            }
        }
    return out;
}

}  // namespace quditkit
