#pragma once

// CHSH operator construction and evaluation: spin observables from
// measurement directions, the CHSH combination, quantum expectation values,
// and a scan over the Werner family.

#include <array>
#include <cmath>
#include <vector>

#include "matrix.hpp"
#include "quantifiers.hpp"
#include "states.hpp"

namespace quditkit {

using Vec3 = std::array<double, 3>;

inline double norm3(const Vec3& v) {
    return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

// n . sigma for a unit direction: Hermitian, traceless, squares to I.
inline Matrix spin_observable(const Vec3& n) {
    if (std::abs(norm3(n) - 1.0) > 1e-12)
        throw validation_error("spin_observable: direction must be a unit vector");
    return Matrix{{n[2], cx{n[0], -n[1]}}, {cx{n[0], n[1]}, -n[2]}};
}

// Measurement directions for the four observables R = r.sigma, Q = q.sigma
// (first party) and S = s.sigma, T = t.sigma (second party).
struct ChshSettings {
    Vec3 r, q, s, t;

    void validate() const {
        for (const Vec3* v : {&r, &q, &s, &t})
            if (std::abs(norm3(*v) - 1.0) > 1e-12)
                throw validation_error("ChshSettings: directions must be unit vectors");
    }
};

// Settings achieving the Tsirelson bound +2*sqrt(2) on the |00>+|11> Bell
// state: Q = z, R = x, s = (z+x)/sqrt(2), t = (x-z)/sqrt(2).
inline ChshSettings optimal_chsh_settings() {
    const double h = 1.0 / std::sqrt(2.0);
    ChshSettings settings;
    settings.r = {1.0, 0.0, 0.0};
    settings.q = {0.0, 0.0, 1.0};
    settings.s = {h, 0.0, h};
    settings.t = {h, 0.0, -h};
    return settings;
}

// c = R x S + R x T + Q x S - Q x T
inline Matrix chsh_operator(const ChshSettings& settings) {
    settings.validate();
    const Matrix r = spin_observable(settings.r);
    const Matrix q = spin_observable(settings.q);
    const Matrix s = spin_observable(settings.s);
    const Matrix t = spin_observable(settings.t);
    return kron(r, s) + kron(r, t) + kron(q, s) - kron(q, t);
}

inline double chsh_value(const DensityOp& state, const ChshSettings& settings) {
    if (state.dims() != DimSpec{2, 2}) throw dimension_error("chsh_value: dims must be [2,2]");
    return trace(state.matrix() * chsh_operator(settings)).real();
}

inline double chsh_value(const Ket& state, const ChshSettings& settings) {
    return chsh_value(dm_from_ket(state), settings);
}

struct ChshScanRow {
    double x;
    double chsh;
    double ppt_min_eig;
    double concurrence;
};

// Werner-family scan at fixed settings. The family is a valid state only
// for x >= -1/3, so the concurrence column uses the direct Lambda spectrum,
// which is well defined across the whole range.
inline std::vector<ChshScanRow> chsh_scan(double from, double to, double step,
                                          const ChshSettings& settings = optimal_chsh_settings()) {
    if (from < -1.0 || to > 1.0 || from > to)
        throw validation_error("chsh_scan: grid must lie within [-1, 1]");
    if (!(step > 0.0)) throw validation_error("chsh_scan: step must be positive");
    const Matrix op = chsh_operator(settings);

    std::vector<ChshScanRow> rows;
    for (double x = from; x <= to + 0.5 * step; x += step) {
        const double xc = std::min(x, to);
        const DensityOp w = werner(xc);
        ChshScanRow row;
        row.x = xc;
        row.chsh = trace(w.matrix() * op).real();
        row.ppt_min_eig = hermitian_eigenvalues(partial_transpose(w, 1)).front();
        row.concurrence = detail::concurrence_from_spectrum(
            detail::concurrence_spectrum_direct(w.matrix()));
        rows.push_back(row);
        if (xc >= to) break;
    }
    return rows;
}

}  // namespace quditkit
