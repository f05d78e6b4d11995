#pragma once

// Three-qubit statevector simulator for the standard teleportation
// protocol: branch enumeration through the deferred-measurement form, and
// seeded shot sampling with mid-circuit collapse. Qubit q0 (the payload) is
// the leftmost tensor factor.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "multipartite.hpp"
#include "random.hpp"
#include "states.hpp"

namespace quditkit {

struct Gate {
    enum class Kind { i, x, y, z, h, s, t, cnot, u };

    Kind kind = Kind::i;
    std::size_t target = 0;
    std::size_t control = 0;             // cnot only
    double alpha = 0.0;                  // u only
    double theta = 0.0;                  // u only
    std::array<double, 3> n{0.0, 0.0, 1.0};  // u only

    static Gate single(Kind k, std::size_t target) {
        Gate g;
        g.kind = k;
        g.target = target;
        return g;
    }
    static Gate identity(std::size_t t) { return single(Kind::i, t); }
    static Gate x(std::size_t t) { return single(Kind::x, t); }
    static Gate y(std::size_t t) { return single(Kind::y, t); }
    static Gate z(std::size_t t) { return single(Kind::z, t); }
    static Gate h(std::size_t t) { return single(Kind::h, t); }
    static Gate s(std::size_t t) { return single(Kind::s, t); }
    static Gate t(std::size_t t) { return single(Kind::t, t); }
    static Gate cnot(std::size_t control, std::size_t target) {
        Gate g;
        g.kind = Kind::cnot;
        g.control = control;
        g.target = target;
        return g;
    }
    static Gate u(double alpha, double theta, const std::array<double, 3>& n, std::size_t target);
};

// e^{i alpha} (cos(theta/2) I - i sin(theta/2) n . sigma)
inline Matrix arbitrary_u(double alpha, double theta, const std::array<double, 3>& n) {
    const double nn = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    if (std::abs(nn - 1.0) > 1e-12)
        throw validation_error("arbitrary_u: rotation axis must be a unit vector");
    const cx phase = std::polar(1.0, alpha);
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    const cx mi{0.0, -1.0};
    Matrix m = Matrix::identity(2);
    m *= cx{c, 0.0};
    m += (mi * s) * (n[0] * pauli_x() + n[1] * pauli_y() + n[2] * pauli_z());
    m *= phase;
    return m;
}

inline Matrix single_qubit_matrix(const Gate& g) {
    switch (g.kind) {
        case Gate::Kind::i: return Matrix::identity(2);
        case Gate::Kind::x: return pauli_x();
        case Gate::Kind::y: return pauli_y();
        case Gate::Kind::z: return pauli_z();
        case Gate::Kind::h: return hadamard();
        case Gate::Kind::s: return Matrix{{1.0, 0.0}, {0.0, cx{0.0, 1.0}}};
        case Gate::Kind::t: return Matrix{{1.0, 0.0}, {0.0, std::polar(1.0, 3.14159265358979323846 / 4.0)}};
        case Gate::Kind::u: return arbitrary_u(g.alpha, g.theta, g.n);
        case Gate::Kind::cnot: break;
    }
    throw validation_error("single_qubit_matrix: gate is not single-qubit");
}

inline Gate Gate::u(double alpha, double theta, const std::array<double, 3>& n,
                    std::size_t target) {
    Gate g;
    g.kind = Kind::u;
    g.alpha = alpha;
    g.theta = theta;
    g.n = n;
    g.target = target;
    return g;
}

namespace detail {

inline std::size_t qubit_count(const Ket& psi) {
    const DimSpec& dims = psi.dims();
    for (std::size_t s = 0; s < dims.count(); ++s)
        if (dims[s] != 2) throw dimension_error("gate application needs qubit subsystems");
    return dims.count();
}

}  // namespace detail

inline Ket apply_gate(const Ket& psi, const Gate& g) {
    const std::size_t n = detail::qubit_count(psi);
    std::vector<cx> amps(psi.amplitudes());
    if (g.kind == Gate::Kind::cnot) {
        if (g.control >= n || g.target >= n || g.control == g.target)
            throw validation_error("apply_gate: cnot indices out of range");
        const std::size_t cbit = std::size_t{1} << (n - 1 - g.control);
        const std::size_t tbit = std::size_t{1} << (n - 1 - g.target);
        for (std::size_t i = 0; i < amps.size(); ++i)
            if ((i & cbit) && !(i & tbit)) std::swap(amps[i], amps[i | tbit]);
        return Ket(std::move(amps), psi.dims());
    }
    if (g.target >= n) throw validation_error("apply_gate: target index out of range");
    const Matrix m = single_qubit_matrix(g);
    const std::size_t tbit = std::size_t{1} << (n - 1 - g.target);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & tbit) continue;
        const cx a0 = amps[i];
        const cx a1 = amps[i | tbit];
        amps[i] = m(0, 0) * a0 + m(0, 1) * a1;
        amps[i | tbit] = m(1, 0) * a0 + m(1, 1) * a1;
    }
    return Ket(std::move(amps), psi.dims());
}

struct TeleportOutcome {
    std::array<int, 2> branch{0, 0};   // Alice's classical bits (q0, q1)
    double probability = 0.0;
    Ket bob_state_pre_correction;
    std::string correction;            // "I", "X", "Z" or "ZX"
    Ket bob_state_final;
    double fidelity = 0.0;

    TeleportOutcome()
        : bob_state_pre_correction(Ket::basis(0, DimSpec{2})),
          bob_state_final(Ket::basis(0, DimSpec{2})) {}
};

namespace detail {

inline const Matrix& correction_matrix(int b0, int b1) {
    static const Matrix ident = Matrix::identity(2);
    static const Matrix zx = pauli_z() * pauli_x();
    if (b0 == 0) return b1 == 0 ? ident : pauli_x();
    return b1 == 0 ? pauli_z() : zx;
}

inline const char* correction_name(int b0, int b1) {
    if (b0 == 0) return b1 == 0 ? "I" : "X";
    return b1 == 0 ? "Z" : "ZX";
}

// |psi4> of the protocol: payload (x) |00>, then H(q1), CNOT(q1,q2),
// CNOT(q0,q1), H(q0).
inline Ket teleport_premeasure_state(const Ket& input) {
    if (input.dims() != DimSpec{2}) throw dimension_error("teleport: input must be one qubit");
    const Ket zero = Ket::basis(0, DimSpec{2});
    Ket state = compose({input, zero, zero});
    state = apply_gate(state, Gate::h(1));
    state = apply_gate(state, Gate::cnot(1, 2));
    state = apply_gate(state, Gate::cnot(0, 1));
    state = apply_gate(state, Gate::h(0));
    return state;
}

inline Ket apply_correction(const Ket& bob, const Matrix& m) {
    return Ket::normalized({m(0, 0) * bob[0] + m(0, 1) * bob[1],
                            m(1, 0) * bob[0] + m(1, 1) * bob[1]},
                           DimSpec{2});
}

}  // namespace detail

inline std::array<TeleportOutcome, 4> teleport_enumerate(const Ket& input) {
    const Ket state = detail::teleport_premeasure_state(input);
    std::array<TeleportOutcome, 4> outcomes;
    for (int b0 = 0; b0 < 2; ++b0)
        for (int b1 = 0; b1 < 2; ++b1) {
            TeleportOutcome& out = outcomes[b0 * 2 + b1];
            out.branch = {b0, b1};
            const std::size_t base = static_cast<std::size_t>(b0) * 4 +
                                     static_cast<std::size_t>(b1) * 2;
            const cx a0 = state[base];
            const cx a1 = state[base + 1];
            out.probability = std::norm(a0) + std::norm(a1);
            const double inv = 1.0 / std::sqrt(out.probability);
            out.bob_state_pre_correction = Ket({a0 * inv, a1 * inv}, DimSpec{2});
            out.correction = detail::correction_name(b0, b1);
            out.bob_state_final = detail::apply_correction(out.bob_state_pre_correction,
                                                           detail::correction_matrix(b0, b1));
            out.fidelity = fidelity(input, out.bob_state_final);
        }
    return outcomes;
}

struct TeleportTally {
    std::uint64_t shots = 0;
    std::array<std::uint64_t, 4> counts{0, 0, 0, 0};
    std::array<TeleportOutcome, 4> branches;  // per-branch states and fidelities
};

// Shot sampling with mid-circuit collapse: q0 then q1 are measured in
// sequence, each by the Born rule, branch selection by cumulative
// probability from the seeded generator. Identical seeds give identical
// shot sequences.
inline TeleportTally teleport_sample(const Ket& input, std::uint64_t seed, std::uint64_t shots) {
    const Ket state = detail::teleport_premeasure_state(input);
    TeleportTally tally;
    tally.shots = shots;
    tally.branches = teleport_enumerate(input);

    // Collapse probabilities: p(q0 = 1), then p(q1 = 1 | q0).
    std::array<double, 4> branch_prob{};
    for (int b = 0; b < 4; ++b) branch_prob[b] = tally.branches[b].probability;
    const double p_q0_one = branch_prob[2] + branch_prob[3];

    SplitMix64 rng(seed);
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        const int b0 = rng.uniform53() < p_q0_one ? 1 : 0;
        const double p_pair = branch_prob[b0 * 2] + branch_prob[b0 * 2 + 1];
        const double p_q1_one = branch_prob[b0 * 2 + 1] / p_pair;
        const int b1 = rng.uniform53() < p_q1_one ? 1 : 0;
        ++tally.counts[b0 * 2 + b1];
    }
    return tally;
}

// Bob's reduced state from the post-measurement ensemble: I/2 for every
// input, so Alice's measurement alone carries no signal.
inline DensityOp bob_premeasure_reduced(const Ket& input) {
    const std::array<TeleportOutcome, 4> outcomes = teleport_enumerate(input);
    Matrix ensemble(8, 8);
    for (const TeleportOutcome& out : outcomes) {
        const std::size_t base = static_cast<std::size_t>(out.branch[0]) * 4 +
                                 static_cast<std::size_t>(out.branch[1]) * 2;
        const Ket& bob = out.bob_state_pre_correction;
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c)
                ensemble(base + r, base + c) += out.probability * bob[r] * std::conj(bob[c]);
    }
    const DensityOp rho = DensityOp::unchecked(std::move(ensemble), DimSpec{2, 2, 2});
    return partial_trace(rho, {2});
}

}  // namespace quditkit
