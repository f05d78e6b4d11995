#pragma once

// State vectors, density operators, Bloch parametrization and the catalog
// of named states used throughout the tests and the CLI.

#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "eig.hpp"
#include "generators.hpp"
#include "matrix.hpp"

namespace quditkit {

// Ordered list of subsystem dimensions; product = total dimension.
class DimSpec {
  public:
    DimSpec() = default;

    DimSpec(std::initializer_list<std::size_t> dims) : DimSpec(std::vector<std::size_t>(dims)) {}

    explicit DimSpec(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
        if (dims_.empty()) throw dimension_error("DimSpec: empty dimension list");
        std::size_t prod = 1;
        for (std::size_t d : dims_) {
            if (d < 2) throw dimension_error("DimSpec: subsystem dimension must be at least 2");
            if (prod > max_dim() / d)
                throw dimension_error("DimSpec: total dimension exceeds the configured cap");
            prod *= d;
        }
        total_ = prod;
    }

    std::size_t count() const { return dims_.size(); }
    std::size_t total() const { return total_; }
    std::size_t operator[](std::size_t s) const { return dims_[s]; }
    const std::vector<std::size_t>& dims() const { return dims_; }

    bool operator==(const DimSpec& o) const { return dims_ == o.dims_; }
    bool operator!=(const DimSpec& o) const { return !(*this == o); }

  private:
    std::vector<std::size_t> dims_;
    std::size_t total_ = 0;
};

// Normalized pure state.
class Ket {
  public:
    Ket(std::vector<cx> amplitudes, DimSpec dims)
        : amps_(std::move(amplitudes)), dims_(std::move(dims)) {
        if (amps_.size() != dims_.total())
            throw shape_error("Ket: amplitude count does not match dimensions");
        double n2 = 0.0;
        for (const cx& a : amps_) {
            if (!is_finite(a)) throw validation_error("Ket: non-finite amplitude");
            n2 += std::norm(a);
        }
        if (std::abs(n2 - 1.0) > 1e-12)
            throw validation_error("Ket: state vector is not normalized");
    }

    static Ket normalized(std::vector<cx> amplitudes, DimSpec dims) {
        double n2 = 0.0;
        for (const cx& a : amplitudes) n2 += std::norm(a);
        if (n2 <= 0.0) throw validation_error("Ket: zero vector cannot be normalized");
        const double inv = 1.0 / std::sqrt(n2);
        for (cx& a : amplitudes) a *= inv;
        return Ket(std::move(amplitudes), std::move(dims));
    }

    static Ket basis(std::size_t index, DimSpec dims) {
        std::vector<cx> amps(dims.total(), cx{0.0, 0.0});
        amps.at(index) = 1.0;
        return Ket(std::move(amps), std::move(dims));
    }

    const std::vector<cx>& amplitudes() const { return amps_; }
    const DimSpec& dims() const { return dims_; }
    std::size_t size() const { return amps_.size(); }
    const cx& operator[](std::size_t i) const { return amps_[i]; }

  private:
    std::vector<cx> amps_;
    DimSpec dims_;
};

inline cx inner(const Ket& a, const Ket& b) {
    if (a.size() != b.size()) throw shape_error("inner: dimension mismatch");
    cx acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

inline double fidelity(const Ket& a, const Ket& b) { return std::norm(inner(a, b)); }

// Rotate the largest-magnitude amplitude to the positive real axis.
// Comparisons of kets need a canonical form; states differing by a global
// phase are the same physical state.
inline Ket canonical_phase(const Ket& psi) {
    std::size_t imax = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < psi.size(); ++i) {
        const double m = std::abs(psi[i]);
        if (m > best) {
            best = m;
            imax = i;
        }
    }
    if (best <= 0.0) return psi;
    const cx rot = std::conj(psi[imax]) / best;
    std::vector<cx> amps(psi.amplitudes());
    for (cx& a : amps) a *= rot;
    return Ket(std::move(amps), psi.dims());
}

enum class PurityClass { pure, mixed };

// Validated density operator: unit trace, Hermitian, positive semidefinite
// (small negative eigenvalues within tolerance are accepted, they appear in
// roundtrips through Bloch coordinates).
class DensityOp {
  public:
    DensityOp(Matrix m, DimSpec dims, double trace_tol = 1e-8, double pos_tol = 1e-8,
              double herm_tol = 1e-8)
        : matrix_(std::move(m)), dims_(std::move(dims)) {
        if (!matrix_.square() || matrix_.rows() != dims_.total())
            throw shape_error("DensityOp: matrix shape does not match dimensions");
        if (std::abs(trace(matrix_) - cx{1.0, 0.0}) > trace_tol)
            throw validation_error("DensityOp: normalization error, trace is not 1");
        if (hermiticity_defect(matrix_) > herm_tol)
            throw validation_error("DensityOp: hermiticity error");
        const std::vector<double> eigs = hermitian_eigenvalues(matrix_, herm_tol);
        if (eigs.front() < -pos_tol)
            throw validation_error("DensityOp: positivity error, negative eigenvalue " +
                                   std::to_string(eigs.front()));
    }

    // For states valid by construction (pure projectors, partial traces,
    // unitary conjugations). Skips the eigenvalue check.
    static DensityOp unchecked(Matrix m, DimSpec dims) {
        DensityOp out;
        out.matrix_ = std::move(m);
        out.dims_ = std::move(dims);
        if (!out.matrix_.square() || out.matrix_.rows() != out.dims_.total())
            throw shape_error("DensityOp: matrix shape does not match dimensions");
        return out;
    }

    const Matrix& matrix() const { return matrix_; }
    const DimSpec& dims() const { return dims_; }
    std::size_t dim() const { return dims_.total(); }

    double purity() const {
        double p = 0.0;
        for (std::size_t r = 0; r < matrix_.rows(); ++r)
            for (std::size_t c = 0; c < matrix_.cols(); ++c)
                p += (matrix_(r, c) * std::conj(matrix_(r, c))).real();
        return p;  // tr(rho^dagger rho) = sum |rho_rc|^2 for Hermitian rho
    }

  private:
    DensityOp() = default;

    Matrix matrix_;
    DimSpec dims_;
};

inline DensityOp dm_from_ket(const Ket& psi) {
    const std::size_t d = psi.size();
    Matrix m(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) m(r, c) = psi[r] * std::conj(psi[c]);
    return DensityOp::unchecked(std::move(m), psi.dims());
}

inline DensityOp validate_density(const Matrix& m, const DimSpec& dims) {
    return DensityOp(m, dims);
}

inline DensityOp maximally_mixed(const DimSpec& dims) {
    const std::size_t d = dims.total();
    Matrix m = Matrix::identity(d);
    m *= cx{1.0 / static_cast<double>(d), 0.0};
    return DensityOp::unchecked(std::move(m), dims);
}

struct PurityReport {
    PurityClass cls;
    double value;
};

inline PurityReport purity_class(const DensityOp& rho) {
    const double p = rho.purity();
    return {p >= 1.0 - 1e-9 ? PurityClass::pure : PurityClass::mixed, p};
}

// Off-diagonal deletion in the computational basis; idempotent and
// trace-preserving by construction.
inline DensityOp dephase(const DensityOp& rho) {
    const std::size_t d = rho.dim();
    Matrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) m(i, i) = rho.matrix()(i, i).real();
    return DensityOp::unchecked(std::move(m), rho.dims());
}

// ---------------------------------------------------------------------------
// Bloch parametrization
// ---------------------------------------------------------------------------

// Real coefficients r_{j_1..j_N} of a state expanded in the tensor products
// of per-subsystem generator bases (flat ordering of full_basis). Stored
// densely, j_1 slowest.
class BlochCoeffs {
  public:
    BlochCoeffs(DimSpec dims, std::vector<double> coeffs)
        : dims_(std::move(dims)), coeffs_(std::move(coeffs)) {
        std::size_t expect = 1;
        for (std::size_t s = 0; s < dims_.count(); ++s) expect *= dims_[s] * dims_[s];
        if (coeffs_.size() != expect)
            throw shape_error("BlochCoeffs: coefficient count does not match dimensions");
    }

    const DimSpec& dims() const { return dims_; }
    const std::vector<double>& coeffs() const { return coeffs_; }
    std::vector<double>& coeffs() { return coeffs_; }

    std::size_t flatten(const std::vector<std::size_t>& multi_index) const {
        if (multi_index.size() != dims_.count())
            throw shape_error("BlochCoeffs: multi-index arity mismatch");
        std::size_t idx = 0;
        for (std::size_t s = 0; s < dims_.count(); ++s) {
            const std::size_t span = dims_[s] * dims_[s];
            if (multi_index[s] >= span)
                throw validation_error("BlochCoeffs: generator index out of range");
            idx = idx * span + multi_index[s];
        }
        return idx;
    }

    double at(const std::vector<std::size_t>& multi_index) const {
        return coeffs_[flatten(multi_index)];
    }

  private:
    DimSpec dims_;
    std::vector<double> coeffs_;
};

namespace detail {

inline std::vector<GeneratorBasis> bases_for(const DimSpec& dims) {
    std::vector<GeneratorBasis> bases;
    bases.reserve(dims.count());
    for (std::size_t s = 0; s < dims.count(); ++s) bases.push_back(full_basis(dims[s]));
    return bases;
}

// Iterate all generator multi-indices, invoking fn(multi_index, tensor).
template <typename Fn>
inline void for_each_generator_product(const DimSpec& dims, const std::vector<GeneratorBasis>& bases,
                                       Fn&& fn) {
    const std::size_t n = dims.count();
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        Matrix tensor = bases[0].flat[idx[0]];
        for (std::size_t s = 1; s < n; ++s) tensor = kron(tensor, bases[s].flat[idx[s]]);
        fn(idx, tensor);
        std::size_t s = n;
        while (s > 0) {
            --s;
            if (++idx[s] < dims[s] * dims[s]) break;
            idx[s] = 0;
            if (s == 0) return;
        }
    }
}

}  // namespace detail

// r_{j_1..j_N} = tr(rho (G_{j_1} x ... x G_{j_N})) / (2^{N-z} prod_{j_s=0} d_s)
// where z counts identity factors in the multi-index.
inline BlochCoeffs bloch_from_dm(const DensityOp& rho, const std::vector<GeneratorBasis>& bases) {
    const DimSpec& dims = rho.dims();
    if (bases.size() != dims.count())
        throw shape_error("bloch_from_dm: one generator basis per subsystem required");
    for (std::size_t s = 0; s < dims.count(); ++s)
        if (bases[s].dim != dims[s]) throw shape_error("bloch_from_dm: basis dimension mismatch");

    std::size_t span = 1;
    for (std::size_t s = 0; s < dims.count(); ++s) span *= dims[s] * dims[s];
    std::vector<double> coeffs(span, 0.0);

    detail::for_each_generator_product(dims, bases, [&](const std::vector<std::size_t>& idx,
                                                        const Matrix& tensor) {
        double denom = 1.0;
        for (std::size_t s = 0; s < dims.count(); ++s)
            denom *= (idx[s] == 0) ? static_cast<double>(dims[s]) : 2.0;
        const cx t = trace(rho.matrix() * tensor);
        std::size_t flat = 0;
        for (std::size_t s = 0; s < dims.count(); ++s)
            flat = flat * dims[s] * dims[s] + idx[s];
        coeffs[flat] = t.real() / denom;
    });
    return BlochCoeffs(dims, std::move(coeffs));
}

inline BlochCoeffs bloch_from_dm(const DensityOp& rho) {
    return bloch_from_dm(rho, detail::bases_for(rho.dims()));
}

// Rebuild rho = sum r_{j_1..j_N} G_{j_1} x ... x G_{j_N} and reject Bloch
// points outside the state space.
inline DensityOp dm_from_bloch(const BlochCoeffs& b, const std::vector<GeneratorBasis>& bases,
                               double pos_tol = 1e-10) {
    const DimSpec& dims = b.dims();
    if (bases.size() != dims.count())
        throw shape_error("dm_from_bloch: one generator basis per subsystem required");
    const std::size_t d = dims.total();
    Matrix m(d, d);
    detail::for_each_generator_product(dims, bases, [&](const std::vector<std::size_t>& idx,
                                                        const Matrix& tensor) {
        std::size_t flat = 0;
        for (std::size_t s = 0; s < dims.count(); ++s)
            flat = flat * dims[s] * dims[s] + idx[s];
        const double r = b.coeffs()[flat];
        if (r == 0.0) return;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) m(i, j) += r * tensor(i, j);
    });
    return DensityOp(std::move(m), dims, 1e-10, pos_tol, 1e-10);
}

inline DensityOp dm_from_bloch(const BlochCoeffs& b, double pos_tol = 1e-10) {
    return dm_from_bloch(b, detail::bases_for(b.dims()), pos_tol);
}

// Convenience for single qubits: the rescaled coherence vector
// v = (tr(rho sx), tr(rho sy), tr(rho sz)), with ||v|| <= 1.
inline std::array<double, 3> qubit_bloch_vector(const DensityOp& rho) {
    if (rho.dims() != DimSpec{2}) throw dimension_error("qubit_bloch_vector: dims must be [2]");
    return {trace(rho.matrix() * pauli_x()).real(), trace(rho.matrix() * pauli_y()).real(),
            trace(rho.matrix() * pauli_z()).real()};
}

inline DensityOp qubit_from_bloch_vector(double vx, double vy, double vz, double pos_tol = 1e-10) {
    const double norm = std::sqrt(vx * vx + vy * vy + vz * vz);
    if (norm > 1.0 + pos_tol)
        throw validation_error("qubit_from_bloch_vector: positivity error, ||v|| > 1");
    Matrix m{{0.5 * (1.0 + vz), 0.5 * cx{vx, -vy}}, {0.5 * cx{vx, vy}, 0.5 * (1.0 - vz)}};
    return DensityOp::unchecked(std::move(m), DimSpec{2});
}

// ---------------------------------------------------------------------------
// Qutrit positivity via the star product
// ---------------------------------------------------------------------------

namespace detail {
inline const StructureConstants& su3_constants() {
    static const StructureConstants sc = structure_constants(3);
    return sc;
}
}  // namespace detail

// (r * r)_k = sqrt(3) g_ijk r_i r_j over the flat SU(3) ordering. The input
// is the coherence vector of the rho = (1/3)(I + sqrt(3) r . G) convention.
inline std::array<double, 8> star_product(const std::array<double, 8>& r) {
    const StructureConstants& sc = detail::su3_constants();
    std::array<double, 8> out{};
    for (std::size_t k = 1; k <= 8; ++k) {
        double acc = 0.0;
        for (std::size_t i = 1; i <= 8; ++i)
            for (std::size_t j = 1; j <= 8; ++j) acc += sc.g_at(i, j, k) * r[i - 1] * r[j - 1];
        out[k - 1] = std::sqrt(3.0) * acc;
    }
    return out;
}

// Coherence vector with r_j = (sqrt(3)/2) tr(rho G_j), flat ordering.
inline std::array<double, 8> qutrit_coherence_vector(const DensityOp& rho) {
    if (rho.dims() != DimSpec{3})
        throw dimension_error("qutrit_coherence_vector: dims must be [3]");
    const GeneratorBasis basis = full_basis(3);
    std::array<double, 8> r{};
    for (std::size_t j = 1; j <= 8; ++j)
        r[j - 1] = 0.5 * std::sqrt(3.0) * trace(rho.matrix() * basis.flat[j]).real();
    return r;
}

struct QutritCharCoeffs {
    double b1, b2, b3;
};

// Characteristic-polynomial coefficients of a qutrit state:
//   det(rho - x) = -(x^3 - B1 x^2 + B2 x - B3)
// B1 = tr(rho), B2 = (1 - tr(rho^2))/2 and B3 from the star product,
// cross-checked against det(rho) computed from the spectrum.
inline QutritCharCoeffs qutrit_char_coeffs(const DensityOp& rho) {
    if (rho.dims() != DimSpec{3}) throw dimension_error("qutrit_char_coeffs: dims must be [3]");
    const double b1 = trace(rho.matrix()).real();
    const double b2 = 0.5 * (1.0 - rho.purity());

    const std::array<double, 8> r = qutrit_coherence_vector(rho);
    const std::array<double, 8> rr = star_product(r);
    double r_dot_r = 0.0, rr_dot_r = 0.0;
    for (std::size_t i = 0; i < 8; ++i) {
        r_dot_r += r[i] * r[i];
        rr_dot_r += rr[i] * r[i];
    }
    const double b3 = (1.0 - 3.0 * r_dot_r + 2.0 * rr_dot_r) / 27.0;

    const std::vector<double> eigs = hermitian_eigenvalues(rho.matrix(), 1e-8);
    const double det = eigs[0] * eigs[1] * eigs[2];
    if (std::abs(b3 - det) > 1e-10)
        throw numerical_error("qutrit_char_coeffs: star-product B3 disagrees with det(rho)");
    return {b1, b2, b3};
}

// ---------------------------------------------------------------------------
// Named states
// ---------------------------------------------------------------------------

inline Ket ket_z_plus() { return Ket::basis(0, DimSpec{2}); }
inline Ket ket_z_minus() { return Ket::basis(1, DimSpec{2}); }
inline Ket ket_x_plus() { return Ket::normalized({1.0, 1.0}, DimSpec{2}); }
inline Ket ket_x_minus() { return Ket::normalized({1.0, -1.0}, DimSpec{2}); }
inline Ket ket_y_plus() { return Ket::normalized({1.0, cx{0.0, 1.0}}, DimSpec{2}); }
inline Ket ket_y_minus() { return Ket::normalized({1.0, cx{0.0, -1.0}}, DimSpec{2}); }

// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>
inline Ket hopf_ket(double theta, double phi) {
    return Ket({std::cos(theta / 2.0), std::polar(std::sin(theta / 2.0), phi)}, DimSpec{2});
}

enum class BellKind { phi_plus, phi_minus, psi_plus, psi_minus };

inline Ket bell(BellKind kind) {
    const double s = 1.0 / std::sqrt(2.0);
    switch (kind) {
        case BellKind::phi_plus: return Ket({s, 0.0, 0.0, s}, DimSpec{2, 2});
        case BellKind::phi_minus: return Ket({s, 0.0, 0.0, -s}, DimSpec{2, 2});
        case BellKind::psi_plus: return Ket({0.0, s, s, 0.0}, DimSpec{2, 2});
        case BellKind::psi_minus: return Ket({0.0, s, -s, 0.0}, DimSpec{2, 2});
    }
    throw validation_error("bell: unknown kind");
}

inline Ket singlet() { return bell(BellKind::psi_minus); }

inline Ket ghz3() {
    std::vector<cx> amps(8, cx{0.0, 0.0});
    const double s = 1.0 / std::sqrt(2.0);
    amps[0] = s;
    amps[7] = s;
    return Ket(std::move(amps), DimSpec{2, 2, 2});
}

inline Ket w3() {
    std::vector<cx> amps(8, cx{0.0, 0.0});
    const double s = 1.0 / std::sqrt(3.0);
    amps[1] = s;  // |001>
    amps[2] = s;  // |010>
    amps[4] = s;  // |100>
    return Ket(std::move(amps), DimSpec{2, 2, 2});
}

// (|00> + |11> + |01>)/sqrt(3): pure but not maximally entangled.
inline Ket partial_entangled_3term() {
    const double s = 1.0 / std::sqrt(3.0);
    return Ket({s, s, 0.0, s}, DimSpec{2, 2});
}

inline Ket qutrit_basis(std::size_t k) {
    if (k > 2) throw validation_error("qutrit_basis: index out of range");
    return Ket::basis(k, DimSpec{3});
}

// (1-x)/4 * I4 + x * S with S the singlet projector. The family is a valid
// state for x in [-1/3, 1]; outside that window the matrix is kept as-is so
// the partial-transpose and CHSH scans can probe the whole parameter range.
inline Matrix werner_matrix(double x) {
    if (x < -1.0 || x > 1.0) throw validation_error("werner: x outside [-1, 1]");
    Matrix s(4, 4);
    s(1, 1) = 0.5;
    s(2, 2) = 0.5;
    s(1, 2) = -0.5;
    s(2, 1) = -0.5;
    Matrix m = Matrix::identity(4);
    m *= cx{(1.0 - x) / 4.0, 0.0};
    m += x * s;
    return m;
}

inline DensityOp werner(double x) {
    return DensityOp::unchecked(werner_matrix(x), DimSpec{2, 2});
}

// String-keyed catalog used by the CLI. Parameters: hopf takes theta/phi,
// werner takes x, qutrit-basis takes k.
inline std::variant<Ket, DensityOp> named_state(const std::string& name,
                                                const std::map<std::string, double>& params = {}) {
    const auto param = [&](const std::string& key, std::optional<double> fallback =
                                                       std::nullopt) -> double {
        const auto it = params.find(key);
        if (it != params.end()) return it->second;
        if (fallback) return *fallback;
        throw validation_error("named_state: missing parameter '" + key + "' for " + name);
    };
    if (name == "z+") return ket_z_plus();
    if (name == "z-") return ket_z_minus();
    if (name == "x+") return ket_x_plus();
    if (name == "x-") return ket_x_minus();
    if (name == "y+") return ket_y_plus();
    if (name == "y-") return ket_y_minus();
    if (name == "hopf") return hopf_ket(param("theta"), param("phi", 0.0));
    if (name == "bell-phi-plus") return bell(BellKind::phi_plus);
    if (name == "bell-phi-minus") return bell(BellKind::phi_minus);
    if (name == "bell-psi-plus") return bell(BellKind::psi_plus);
    if (name == "bell-psi-minus" || name == "singlet") return bell(BellKind::psi_minus);
    if (name == "ghz3") return ghz3();
    if (name == "w3") return w3();
    if (name == "partial-entangled-3term") return partial_entangled_3term();
    if (name == "werner") return werner(param("x"));
    if (name == "qutrit-basis")
        return qutrit_basis(static_cast<std::size_t>(param("k")));
    throw validation_error("named_state: unknown state '" + name + "'");
}

}  // namespace quditkit
