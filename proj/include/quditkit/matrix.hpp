#pragma once

// Dense complex matrices: the carrier type for operators, gates and
// density matrices throughout the library. Row-major storage, value
// semantics, no aliasing tricks. Everything here is a pure function.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace quditkit {

using cx = std::complex<double>;

// Invalid-input family: maps to CLI exit code 2.
struct shape_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Numerical-failure family (non-convergence and friends): CLI exit code 3.
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Composite-dimension ceiling for dense storage. QUDIT_MAX_DIM overrides.
inline std::size_t max_dim() {
    static const std::size_t cap = [] {
        if (const char* env = std::getenv("QUDIT_MAX_DIM")) {
            const long v = std::strtol(env, nullptr, 10);
            if (v > 1) return static_cast<std::size_t>(v);
        }
        return std::size_t{4096};
    }();
    return cap;
}

inline bool is_finite(cx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

class Matrix {
  public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, cx{0.0, 0.0}) {}

    Matrix(std::size_t rows, std::size_t cols, std::vector<cx> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_)
            throw shape_error("Matrix: data length does not match rows*cols");
        for (const cx& z : data_)
            if (!is_finite(z)) throw validation_error("Matrix: non-finite entry");
    }

    Matrix(std::initializer_list<std::initializer_list<cx>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw shape_error("Matrix: ragged initializer");
            for (cx z : r) {
                if (!is_finite(z)) throw validation_error("Matrix: non-finite entry");
                data_.push_back(z);
            }
        }
    }

    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

    static Matrix identity(std::size_t d) {
        Matrix m(d, d);
        for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
        return m;
    }

    static Matrix diag(const std::vector<cx>& entries) {
        Matrix m(entries.size(), entries.size());
        for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
        return m;
    }

    static Matrix diag_real(const std::vector<double>& entries) {
        Matrix m(entries.size(), entries.size());
        for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    cx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const cx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<cx>& data() const { return data_; }

    Matrix& operator+=(const Matrix& o) {
        require_same_shape(o, "+");
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        require_same_shape(o, "-");
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    Matrix& operator*=(cx z) {
        for (cx& v : data_) v *= z;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(cx z, Matrix m) { return m *= z; }
    friend Matrix operator*(Matrix m, cx z) { return m *= z; }
    friend Matrix operator*(double z, Matrix m) { return m *= cx{z, 0.0}; }
    friend Matrix operator*(Matrix m, double z) { return m *= cx{z, 0.0}; }
    friend Matrix operator-(const Matrix& m) { return cx{-1.0, 0.0} * m; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw shape_error("Matrix product: inner dimensions differ");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const cx aik = a(i, k);
                if (aik == cx{0.0, 0.0}) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

  private:
    void require_same_shape(const Matrix& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw shape_error(std::string("Matrix ") + op + ": shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cx> data_;
};

inline Matrix dagger(const Matrix& a) {
    Matrix out(a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = std::conj(a(r, c));
    return out;
}

inline Matrix transpose(const Matrix& a) {
    Matrix out(a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = a(r, c);
    return out;
}

inline Matrix conjugate(const Matrix& a) {
    Matrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = std::conj(a(r, c));
    return out;
}

inline cx trace(const Matrix& a) {
    if (!a.square()) throw shape_error("trace: matrix is not square");
    cx t{0.0, 0.0};
    for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
    const std::size_t rows = a.rows() * b.rows();
    const std::size_t cols = a.cols() * b.cols();
    if (rows > max_dim() || cols > max_dim())
        throw dimension_error("kron: composite dimension exceeds the configured cap");
    Matrix out(rows, cols);
    for (std::size_t ar = 0; ar < a.rows(); ++ar)
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const cx v = a(ar, ac);
            if (v == cx{0.0, 0.0}) continue;
            for (std::size_t br = 0; br < b.rows(); ++br)
                for (std::size_t bc = 0; bc < b.cols(); ++bc)
                    out(ar * b.rows() + br, ac * b.cols() + bc) = v * b(br, bc);
        }
    return out;
}

inline Matrix commutator(const Matrix& a, const Matrix& b) {
    if (!a.square() || a.rows() != b.rows() || a.cols() != b.cols())
        throw shape_error("commutator: operands must be square and of equal shape");
    return a * b - b * a;
}

inline Matrix anticommutator(const Matrix& a, const Matrix& b) {
    if (!a.square() || a.rows() != b.rows() || a.cols() != b.cols())
        throw shape_error("anticommutator: operands must be square and of equal shape");
    return a * b + b * a;
}

inline double max_abs(const Matrix& a) {
    double m = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) m = std::max(m, std::abs(a(r, c)));
    return m;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw shape_error("max_abs_diff: shape mismatch");
    double m = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) m = std::max(m, std::abs(a(r, c) - b(r, c)));
    return m;
}

inline double hermiticity_defect(const Matrix& a) {
    if (!a.square()) throw shape_error("hermiticity_defect: matrix is not square");
    double m = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            m = std::max(m, std::abs(a(r, c) - std::conj(a(c, r))));
    return m;
}

inline bool is_hermitian(const Matrix& a, double tol = 1e-10) {
    return a.square() && hermiticity_defect(a) <= tol;
}

inline bool is_unitary(const Matrix& a, double tol = 1e-10) {
    if (!a.square()) return false;
    return max_abs_diff(dagger(a) * a, Matrix::identity(a.rows())) <= tol;
}

// Pauli matrices and the Hadamard, used all over the test and state layers.
inline const Matrix& pauli_x() {
    static const Matrix m{{0.0, 1.0}, {1.0, 0.0}};
    return m;
}
inline const Matrix& pauli_y() {
    static const Matrix m{{0.0, cx{0.0, -1.0}}, {cx{0.0, 1.0}, 0.0}};
    return m;
}
inline const Matrix& pauli_z() {
    static const Matrix m{{1.0, 0.0}, {0.0, -1.0}};
    return m;
}
inline const Matrix& hadamard() {
    static const Matrix m{{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)},
                          {1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0)}};
    return m;
}

}  // namespace quditkit
