#pragma once

// Built-in acceptance suite: one entry per shipped guarantee, each checked
// at a fixed tolerance against an independent route (hand values, direct
// traces, finite differences, brute-force minimization). The CLI `selftest`
// subcommand and the acceptance test binary both run this list.

#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "bell.hpp"
#include "eig.hpp"
#include "generators.hpp"
#include "matrix.hpp"
#include "multipartite.hpp"
#include "quantifiers.hpp"
#include "quantum_ops.hpp"
#include "random.hpp"
#include "states.hpp"
#include "teleport.hpp"

namespace quditkit {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace selftest_detail {

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

struct Check {
    bool pass = true;
    double worst = 0.0;

    void bound(double value, double tol) {
        worst = std::max(worst, value);
        if (value > tol) pass = false;
    }
    void require(bool ok) {
        if (!ok) pass = false;
    }
};

inline CriterionResult ggm_orthonormality() {
    Check check;
    for (std::size_t d = 2; d <= 5; ++d) {
        const GeneratorBasis basis = full_basis(d);
        check.require(basis.flat.size() == d * d);
        check.require(basis.flat.size() - 1 == d * d - 1);
        for (std::size_t j = 1; j < basis.flat.size(); ++j)
            for (std::size_t k = 1; k < basis.flat.size(); ++k) {
                const cx t = trace(basis.flat[j] * basis.flat[k]);
                const double expect = (j == k) ? 2.0 : 0.0;
                check.bound(std::abs(t - cx{expect, 0.0}), 1e-12);
            }
    }
    return {1, "GGM trace orthonormality, d in 2..5", check.pass,
            "max |tr(GjGk) - 2 delta| = " + fmt(check.worst)};
}

inline CriterionResult su3_structure_constants() {
    const StructureConstants sc = structure_constants(3);
    const std::vector<std::size_t> gm = gell_mann_flat_index();
    const auto f = [&](std::size_t a, std::size_t b, std::size_t c) {
        return sc.f_at(gm[a], gm[b], gm[c]);
    };
    const auto g = [&](std::size_t a, std::size_t b, std::size_t c) {
        return sc.g_at(gm[a], gm[b], gm[c]);
    };
    const double rt3 = std::sqrt(3.0);
    Check check;
    check.bound(std::abs(f(4, 5, 8) - rt3 / 2.0), 1e-12);
    check.bound(std::abs(f(6, 7, 8) - rt3 / 2.0), 1e-12);
    check.bound(std::abs(f(1, 4, 7) - 0.5), 1e-12);
    check.bound(std::abs(g(1, 1, 8) - 1.0 / rt3), 1e-12);
    check.bound(std::abs(g(8, 8, 8) + 1.0 / rt3), 1e-12);
    // The trace oracle gives f_123 = 1; tables in circulation sometimes
    // list sqrt(3)/2 for this entry. The traces win.
    check.bound(std::abs(f(1, 2, 3) - 1.0), 1e-12);
    return {2, "SU(3) structure constants from the trace oracle (f_123 = 1)", check.pass,
            "max deviation = " + fmt(check.worst)};
}

inline CriterionResult singlet_reductions() {
    const DensityOp rho = dm_from_ket(singlet());
    const DensityOp ra = partial_trace(rho, {0});
    const DensityOp rb = partial_trace(rho, {1});
    const Matrix half = 0.5 * Matrix::identity(2);
    Check check;
    check.bound(max_abs_diff(ra.matrix(), half), 1e-12);
    check.bound(max_abs_diff(rb.matrix(), half), 1e-12);
    check.bound(std::abs(purity(ra) - 0.5), 1e-12);
    check.bound(std::abs(entanglement_entropy(rho, 0) - 1.0), 1e-10);
    return {3, "singlet reductions: tr_a = tr_b = I/2, purity 1/2, entropy 1", check.pass,
            "max deviation = " + fmt(check.worst)};
}

inline CriterionResult concurrence_values() {
    Check check;
    for (BellKind kind : {BellKind::phi_plus, BellKind::phi_minus, BellKind::psi_plus,
                          BellKind::psi_minus})
        check.bound(std::abs(concurrence(dm_from_ket(bell(kind))) - 1.0), 1e-9);
    SplitMix64 rng(41);
    for (int i = 0; i < 20; ++i)
        check.bound(concurrence(dm_from_ket(random_product_ket(rng, DimSpec{2, 2}))), 1e-9);
    check.bound(std::abs(concurrence(dm_from_ket(partial_entangled_3term())) - 2.0 / 3.0), 1e-9);
    return {4, "concurrence: Bell 1, product 0, three-term 2/3", check.pass,
            "max deviation = " + fmt(check.worst)};
}

inline CriterionResult werner_ppt() {
    Check check;
    const auto min_eig = [](double x) {
        return hermitian_eigenvalues(partial_transpose(werner(std::min(x, 1.0)), 1)).front();
    };
    for (double x = -1.0 / 3.0; x <= 1.0 / 3.0 + 1e-12; x += 0.01)
        check.require(min_eig(x) >= -1e-10);
    for (double x = 0.34; x <= 1.0 + 1e-12; x += 0.01)
        check.require(min_eig(x) < -1e-6);
    check.require(min_eig(1.0 / 3.0 - 0.01) >= -1e-10);
    check.require(min_eig(1.0 / 3.0 + 0.01) < 0.0);
    return {5, "Werner PPT: positive up to x = 1/3, negative beyond", check.pass,
            "min eig at x=1: " + fmt(min_eig(1.0))};
}

inline CriterionResult tsirelson() {
    Check check;
    const double bound = 2.0 * std::sqrt(2.0);
    const double at_optimal = chsh_value(bell(BellKind::phi_plus), optimal_chsh_settings());
    check.bound(std::abs(at_optimal - bound), 1e-10);

    SplitMix64 rng(42);
    const auto random_settings = [&rng] {
        ChshSettings s;
        s.r = random_unit_vector3(rng);
        s.q = random_unit_vector3(rng);
        s.s = random_unit_vector3(rng);
        s.t = random_unit_vector3(rng);
        return s;
    };
    double max_seen = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double v = std::abs(chsh_value(random_density(rng, DimSpec{2, 2}), random_settings()));
        max_seen = std::max(max_seen, v);
        check.require(v <= bound + 1e-9);
    }
    double max_product = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double v =
            std::abs(chsh_value(dm_from_ket(random_product_ket(rng, DimSpec{2, 2})),
                                random_settings()));
        max_product = std::max(max_product, v);
        check.require(v <= 2.0 + 1e-9);
    }
    return {6, "Tsirelson: 2*sqrt(2) at optimal settings, ceilings respected", check.pass,
            "optimal " + fmt(at_optimal) + ", max random " + fmt(max_seen) + ", max product " +
                fmt(max_product)};
}

inline CriterionResult teleportation() {
    Check check;
    SplitMix64 rng(43);
    const Matrix half = 0.5 * Matrix::identity(2);
    for (int i = 0; i < 100; ++i) {
        const double theta = rng.uniform(0.0, 3.14159265358979323846);
        const double phi = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
        const Ket input = hopf_ket(theta, phi);
        for (const TeleportOutcome& out : teleport_enumerate(input)) {
            check.bound(std::abs(out.probability - 0.25), 1e-12);
            check.bound(std::abs(out.fidelity - 1.0), 1e-10);
        }
        check.bound(max_abs_diff(bob_premeasure_reduced(input).matrix(), half), 1e-11);
    }
    return {7, "teleportation: 4 branches at 1/4, fidelity 1, Bob reduced I/2", check.pass,
            "max deviation = " + fmt(check.worst)};
}

inline CriterionResult qubit_coherence_closed_form() {
    Check check;
    SplitMix64 rng(44);
    const std::array<double, 4> ps{1.0, 1.5, 2.0, 3.0};
    double max_grid_gap = 0.0;
    for (int i = 0; i < 50; ++i) {
        const DensityOp rho = random_density(rng, DimSpec{2});
        // Bloch vector of the rho = (I + r . sigma)/2 convention
        const double r1 = trace(rho.matrix() * pauli_x()).real();
        const double r2 = trace(rho.matrix() * pauli_y()).real();
        for (const double p : ps) {
            const double closed =
                std::pow(2.0, (1.0 - p) / p) * std::sqrt(r1 * r1 + r2 * r2);
            const double computed = p_norm_coherence(rho, p);
            check.bound(std::abs(computed - closed), 1e-9);

            // Independent route: brute-force minimum over the diagonal
            // (incoherent) family iota = (I + i3 sz)/2.
            double best = 1e100;
            for (double i3 = -1.0; i3 <= 1.0 + 1e-12; i3 += 1e-4) {
                const DensityOp iota = qubit_from_bloch_vector(0.0, 0.0, std::min(i3, 1.0));
                best = std::min(best, p_norm_distance(rho, iota, p));
            }
            max_grid_gap = std::max(max_grid_gap, std::abs(best - computed));
            check.require(std::abs(best - computed) <= 2e-4);
        }
    }
    return {8, "1-qubit p-norm coherence matches closed form and grid minimum", check.pass,
            "max closed-form gap " + fmt(check.worst) + ", max grid gap " + fmt(max_grid_gap)};
}

inline CriterionResult bloch_roundtrip() {
    Check check;
    SplitMix64 rng(45);
    for (const DimSpec& dims : {DimSpec{2}, DimSpec{3}, DimSpec{2, 2}, DimSpec{2, 3}}) {
        const std::vector<GeneratorBasis> bases = detail::bases_for(dims);
        for (int i = 0; i < 100; ++i) {
            const DensityOp rho = random_density(rng, dims);
            const DensityOp back = dm_from_bloch(bloch_from_dm(rho, bases), bases);
            check.bound(max_abs_diff(back.matrix(), rho.matrix()), 1e-11);
        }
    }
    return {9, "Bloch roundtrip dm -> coefficients -> dm", check.pass,
            "max entry error = " + fmt(check.worst)};
}

inline CriterionResult entropy_properties() {
    Check check;
    for (std::size_t d = 2; d <= 8; ++d) {
        const double s = von_neumann_entropy(maximally_mixed(DimSpec{d}));
        check.bound(std::abs(s - std::log2(static_cast<double>(d))), 1e-10);
    }
    SplitMix64 rng(46);
    for (int i = 0; i < 100; ++i) {
        const std::size_t d = (i % 2 == 0) ? 2 : 3;
        const DensityOp rho = random_density(rng, DimSpec{d});
        const DensityOp rotated = evolve_unitary(rho, random_unitary(rng, d));
        check.bound(std::abs(von_neumann_entropy(rotated) - von_neumann_entropy(rho)), 1e-10);

        const DensityOp other = random_density(rng, DimSpec{3});
        const DensityOp joint = compose({rho, other});
        check.bound(std::abs(von_neumann_entropy(joint) - von_neumann_entropy(rho) -
                             von_neumann_entropy(other)),
                    1e-10);
    }
    return {10, "entropy: log2(d) maximum, isometric invariance, additivity", check.pass,
            "max deviation = " + fmt(check.worst)};
}

inline CriterionResult qutrit_positivity() {
    Check check;
    SplitMix64 rng(47);
    for (int i = 0; i < 100; ++i) {
        const DensityOp rho = random_density(rng, DimSpec{3});
        const QutritCharCoeffs b = qutrit_char_coeffs(rho);
        check.require(b.b1 >= -1e-10 && b.b2 >= -1e-10 && b.b3 >= -1e-10);
        const std::vector<double> eigs = hermitian_eigenvalues(rho.matrix());
        check.bound(std::abs(b.b3 - eigs[0] * eigs[1] * eigs[2]), 1e-10);
    }
    const QutritCharCoeffs mixed = qutrit_char_coeffs(maximally_mixed(DimSpec{3}));
    check.bound(std::abs(mixed.b1 - 1.0), 1e-12);
    check.bound(std::abs(mixed.b2 - 1.0 / 3.0), 1e-12);
    check.bound(std::abs(mixed.b3 - 1.0 / 27.0), 1e-12);
    return {11, "qutrit star-product coefficients nonnegative, B3 = det", check.pass,
            "max deviation = " + fmt(check.worst)};
}

inline CriterionResult postulate_suite() {
    Check check;
    SplitMix64 rng(48);

    for (int i = 0; i < 100; ++i) {
        const DensityOp rho = random_density(rng, DimSpec{2, 2});
        const Matrix basis = random_unitary(rng, 4);
        double total = 0.0;
        for (const auto& branch : projective_measure(rho, basis)) total += branch.probability;
        check.bound(std::abs(total - 1.0), 1e-10);

        const Matrix g = random_gaussian_matrix(rng, 4, 4);
        const Matrix obs = 0.5 * (g + dagger(g));
        check.require(variance(rho, obs) >= -1e-10);
    }

    for (int i = 0; i < 1000; ++i) {
        const DensityOp rho = random_density(rng, DimSpec{2});
        const Matrix ga = random_gaussian_matrix(rng, 2, 2);
        const Matrix gb = random_gaussian_matrix(rng, 2, 2);
        const RobertsonReport rep =
            robertson_check(rho, 0.5 * (ga + dagger(ga)), 0.5 * (gb + dagger(gb)));
        check.require(rep.holds);
        check.require(rep.lhs >= rep.rhs - 1e-10);
    }

    // d rho/dt at t = 0 equals -i [H, rho] for rho(t) = U rho U^dagger,
    // central differences with step 1e-5.
    const double h = 1e-5;
    for (int i = 0; i < 20; ++i) {
        const std::size_t d = (i % 2 == 0) ? 2 : 3;
        const DensityOp rho = random_density(rng, DimSpec{d});
        const Matrix gh = random_gaussian_matrix(rng, d, d);
        const Matrix ham = 0.5 * (gh + dagger(gh));
        const Matrix plus = evolve_unitary(rho, propagator(ham, h)).matrix();
        const Matrix minus = evolve_unitary(rho, propagator(ham, -h)).matrix();
        const Matrix numeric = (1.0 / (2.0 * h)) * (plus - minus);
        const Matrix algebraic = cx{0.0, -1.0} * commutator(ham, rho.matrix());
        check.bound(max_abs_diff(numeric, algebraic), 1e-6);
    }
    return {12, "postulates: normalization, variance, Robertson, evolution residual", check.pass,
            "max deviation = " + fmt(check.worst)};
}

}  // namespace selftest_detail

inline std::vector<CriterionResult> run_acceptance() {
    using namespace selftest_detail;
    return {ggm_orthonormality(), su3_structure_constants(), singlet_reductions(),
            concurrence_values(), werner_ppt(),          tsirelson(),
            teleportation(),      qubit_coherence_closed_form(), bloch_roundtrip(),
            entropy_properties(), qutrit_positivity(),   postulate_suite()};
}

// Prints one line per criterion; returns the number of failures.
inline int print_acceptance(std::ostream& os) {
    int failures = 0;
    for (const CriterionResult& r : run_acceptance()) {
        os << (r.pass ? "PASS" : "FAIL") << "  criterion " << r.id << ": " << r.name << " ("
           << r.detail << ")\n";
        if (!r.pass) ++failures;
    }
    os << (failures == 0 ? "all criteria passed" : "criteria failed") << "\n";
    return failures;
}

}  // namespace quditkit
