#include <catch_amalgamated.hpp>

#include <cmath>

#include "quditkit/random.hpp"
#include "quditkit/states.hpp"

using namespace quditkit;

TEST_CASE("dm_from_ket pinned cases") {
    CHECK(max_abs_diff(dm_from_ket(ket_z_plus()).matrix(), Matrix::diag_real({1.0, 0.0})) == 0.0);

    const double theta = 1.1, phi = 2.3;
    const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
    const Matrix expected{{c * c, c * s * std::polar(1.0, -phi)},
                          {c * s * std::polar(1.0, phi), s * s}};
    CHECK(max_abs_diff(dm_from_ket(hopf_ket(theta, phi)).matrix(), expected) <= 1e-15);

    const Matrix bellm = dm_from_ket(bell(BellKind::phi_plus)).matrix();
    Matrix corners(4, 4);
    corners(0, 0) = corners(0, 3) = corners(3, 0) = corners(3, 3) = 0.5;
    CHECK(max_abs_diff(bellm, corners) <= 1e-15);
}

TEST_CASE("validate_density") {
    const DensityOp mixed = validate_density(0.5 * Matrix::identity(2), DimSpec{2});
    CHECK(purity_class(mixed).cls == PurityClass::mixed);

    const DensityOp pure = validate_density(Matrix::diag_real({1.0, 0.0}), DimSpec{2});
    CHECK(purity_class(pure).cls == PurityClass::pure);

    CHECK_THROWS_WITH(validate_density(Matrix::diag_real({1.5, -0.5}), DimSpec{2}),
                      Catch::Matchers::ContainsSubstring("positivity"));
    CHECK_THROWS_WITH(validate_density(Matrix::diag_real({0.5, 0.4}), DimSpec{2}),
                      Catch::Matchers::ContainsSubstring("normalization"));
    Matrix skew = Matrix::diag_real({0.5, 0.5});
    skew(0, 1) = cx{0.0, 0.1};
    CHECK_THROWS_WITH(validate_density(skew, DimSpec{2}),
                      Catch::Matchers::ContainsSubstring("hermiticity"));
}

TEST_CASE("purity_class values") {
    SplitMix64 rng(3);
    CHECK(purity_class(dm_from_ket(random_ket(rng, DimSpec{4}))).cls == PurityClass::pure);
    CHECK(purity_class(maximally_mixed(DimSpec{2})).value == Catch::Approx(0.5).margin(1e-15));

    const Matrix m = Matrix::diag_real({0.9, 0.1});
    CHECK(purity_class(validate_density(m, DimSpec{2})).value ==
          Catch::Approx(0.82).margin(1e-15));
}

TEST_CASE("bloch coefficients of pinned states") {
    const DensityOp mixed = maximally_mixed(DimSpec{2});
    const BlochCoeffs b = bloch_from_dm(mixed);
    CHECK(b.at({0}) == Catch::Approx(0.5).margin(1e-15));
    for (std::size_t j = 1; j < 4; ++j) CHECK(b.at({j}) == Catch::Approx(0.0).margin(1e-15));

    // flat order is (identity, z, x, y): 2 r = (cos t, sin t cos p, sin t sin p)
    const double theta = 0.7, phi = 1.9;
    const BlochCoeffs h = bloch_from_dm(dm_from_ket(hopf_ket(theta, phi)));
    CHECK(2.0 * h.at({1}) == Catch::Approx(std::cos(theta)).margin(1e-14));
    CHECK(2.0 * h.at({2}) == Catch::Approx(std::sin(theta) * std::cos(phi)).margin(1e-14));
    CHECK(2.0 * h.at({3}) == Catch::Approx(std::sin(theta) * std::sin(phi)).margin(1e-14));

    const BlochCoeffs s = bloch_from_dm(dm_from_ket(singlet()));
    for (std::size_t j = 1; j < 4; ++j) {
        CHECK(s.at({j, 0}) == Catch::Approx(0.0).margin(1e-14));
        CHECK(s.at({0, j}) == Catch::Approx(0.0).margin(1e-14));
    }
}

TEST_CASE("singlet spin correlations from the trace oracle") {
    const DensityOp rho = dm_from_ket(singlet());
    const GeneratorBasis basis = full_basis(2);
    for (std::size_t j = 1; j < 4; ++j)
        for (std::size_t k = 1; k < 4; ++k) {
            const double corr =
                trace(rho.matrix() * kron(basis.flat[j], basis.flat[k])).real();
            const double expect = (j == k) ? -1.0 : 0.0;
            CHECK(corr == Catch::Approx(expect).margin(1e-13));
        }
}

TEST_CASE("dm_from_bloch pinned cases and rejection") {
    CHECK(max_abs_diff(qubit_from_bloch_vector(0.0, 0.0, 1.0).matrix(),
                       Matrix::diag_real({1.0, 0.0})) <= 1e-15);
    CHECK_THROWS_WITH(qubit_from_bloch_vector(0.0, 0.9, 0.8),
                      Catch::Matchers::ContainsSubstring("positivity"));

    // coefficient-level rejection through the general path
    BlochCoeffs bad(DimSpec{2}, {0.5, 0.6, 0.0, 0.0});
    CHECK_THROWS_WITH(dm_from_bloch(bad), Catch::Matchers::ContainsSubstring("positivity"));

    std::vector<double> coeffs(9, 0.0);
    coeffs[0] = 1.0 / 3.0;
    const DensityOp qutrit = dm_from_bloch(BlochCoeffs(DimSpec{3}, coeffs));
    CHECK(max_abs_diff(qutrit.matrix(), maximally_mixed(DimSpec{3}).matrix()) <= 1e-15);
}

TEST_CASE("bloch roundtrip on random states") {
    SplitMix64 rng(5);
    for (const DimSpec& dims : {DimSpec{2}, DimSpec{3}, DimSpec{2, 2}, DimSpec{2, 3}}) {
        const std::vector<GeneratorBasis> bases = detail::bases_for(dims);
        for (int trial = 0; trial < 25; ++trial) {
            const DensityOp rho = random_density(rng, dims);
            const DensityOp back = dm_from_bloch(bloch_from_dm(rho, bases), bases);
            CHECK(max_abs_diff(back.matrix(), rho.matrix()) <= 1e-11);
        }
    }
}

TEST_CASE("qubit bloch norm bounds") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const DensityOp rho = random_density(rng, DimSpec{2});
        const auto v = qubit_bloch_vector(rho);
        const double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
        CHECK(norm <= 1.0 + 1e-10);
        const bool pure = purity_class(rho).cls == PurityClass::pure;
        CHECK(pure == (norm >= 1.0 - 1e-5));

        // populations bound the coherences: v1^2 + v2^2 <= 4 p0 p1
        const double p0 = rho.matrix()(0, 0).real();
        const double p1 = rho.matrix()(1, 1).real();
        CHECK(v[0] * v[0] + v[1] * v[1] <= 4.0 * p0 * p1 + 1e-10);
    }
    const auto pv = qubit_bloch_vector(dm_from_ket(hopf_ket(0.3, 0.4)));
    CHECK(std::sqrt(pv[0] * pv[0] + pv[1] * pv[1] + pv[2] * pv[2]) ==
          Catch::Approx(1.0).margin(1e-10));
}

TEST_CASE("dephase") {
    const double theta = 0.8, phi = 0.2;
    const DensityOp deph = dephase(dm_from_ket(hopf_ket(theta, phi)));
    const double c2 = std::cos(theta / 2.0) * std::cos(theta / 2.0);
    CHECK(max_abs_diff(deph.matrix(), Matrix::diag_real({c2, 1.0 - c2})) <= 1e-15);

    const DensityOp diag = validate_density(Matrix::diag_real({0.3, 0.7}), DimSpec{2});
    CHECK(max_abs_diff(dephase(diag).matrix(), diag.matrix()) == 0.0);

    CHECK(max_abs_diff(dephase(dm_from_ket(ket_x_plus())).matrix(),
                       maximally_mixed(DimSpec{2}).matrix()) <= 1e-15);

    SplitMix64 rng(11);
    const DensityOp rho = random_density(rng, DimSpec{4});
    const DensityOp once = dephase(rho);
    CHECK(max_abs_diff(dephase(once).matrix(), once.matrix()) == 0.0);
    CHECK(trace(once.matrix()).real() == Catch::Approx(1.0).margin(1e-14));
}

TEST_CASE("state catalog") {
    const Ket phi_plus = bell(BellKind::phi_plus);
    CHECK(phi_plus[0].real() == Catch::Approx(1.0 / std::sqrt(2.0)));
    CHECK(phi_plus[3].real() == Catch::Approx(1.0 / std::sqrt(2.0)));

    const Ket w = w3();
    CHECK(w[1].real() == Catch::Approx(1.0 / std::sqrt(3.0)));
    CHECK(w[2].real() == Catch::Approx(1.0 / std::sqrt(3.0)));
    CHECK(w[4].real() == Catch::Approx(1.0 / std::sqrt(3.0)));

    const Ket pe = partial_entangled_3term();
    CHECK(pe[0].real() == Catch::Approx(1.0 / std::sqrt(3.0)));
    CHECK(pe[1].real() == Catch::Approx(1.0 / std::sqrt(3.0)));
    CHECK(pe[3].real() == Catch::Approx(1.0 / std::sqrt(3.0)));
    CHECK(std::abs(pe[2]) == 0.0);

    // Werner matrix equals its correlation form (I - x sum s x s)/4
    const double x = 0.37;
    const GeneratorBasis basis = full_basis(2);
    Matrix fano = Matrix::identity(4);
    for (std::size_t j = 2; j <= 3; ++j) fano -= x * kron(basis.flat[j], basis.flat[j]);
    fano -= x * kron(basis.flat[1], basis.flat[1]);
    fano *= cx{0.25, 0.0};
    CHECK(max_abs_diff(werner(x).matrix(), fano) <= 1e-15);

    CHECK_THROWS_AS(werner(1.5), validation_error);
    CHECK_THROWS_AS(named_state("no-such-state"), validation_error);

    for (std::size_t k = 0; k < 3; ++k) {
        const Ket q = qutrit_basis(k);
        CHECK(q[k].real() == 1.0);
    }

    // every catalog pure state is normalized
    for (const char* name : {"z+", "z-", "x+", "x-", "y+", "y-", "bell-phi-plus",
                             "bell-psi-minus", "ghz3", "w3", "partial-entangled-3term"}) {
        const auto state = named_state(name);
        const Ket& psi = std::get<Ket>(state);
        double n2 = 0.0;
        for (std::size_t i = 0; i < psi.size(); ++i) n2 += std::norm(psi[i]);
        CHECK(std::abs(n2 - 1.0) <= 1e-15);
    }
}

TEST_CASE("star product and qutrit characteristic coefficients") {
    const QutritCharCoeffs mixed = qutrit_char_coeffs(maximally_mixed(DimSpec{3}));
    CHECK(mixed.b1 == Catch::Approx(1.0).margin(1e-14));
    CHECK(mixed.b2 == Catch::Approx(1.0 / 3.0).margin(1e-14));
    CHECK(mixed.b3 == Catch::Approx(1.0 / 27.0).margin(1e-14));

    const QutritCharCoeffs pure = qutrit_char_coeffs(dm_from_ket(qutrit_basis(0)));
    CHECK(pure.b3 == Catch::Approx(0.0).margin(1e-12));
    CHECK(pure.b2 == Catch::Approx(0.0).margin(1e-12));

    // pure states are star-product fixed points: r * r = r
    const auto r = qutrit_coherence_vector(dm_from_ket(qutrit_basis(0)));
    const auto rr = star_product(r);
    for (std::size_t i = 0; i < 8; ++i) CHECK(rr[i] == Catch::Approx(r[i]).margin(1e-12));

    SplitMix64 rng(13);
    for (int trial = 0; trial < 25; ++trial) {
        const QutritCharCoeffs b = qutrit_char_coeffs(random_density(rng, DimSpec{3}));
        CHECK(b.b1 >= -1e-10);
        CHECK(b.b2 >= -1e-10);
        CHECK(b.b3 >= -1e-10);
    }

    CHECK_THROWS_AS(qutrit_char_coeffs(maximally_mixed(DimSpec{2})), dimension_error);
}

TEST_CASE("canonical phase fixes global phase") {
    const Ket psi = hopf_ket(1.2, 0.7);
    std::vector<cx> rotated(psi.amplitudes());
    for (cx& a : rotated) a *= std::polar(1.0, 1.23);
    const Ket other(std::move(rotated), psi.dims());
    const Ket ca = canonical_phase(psi);
    const Ket cb = canonical_phase(other);
    for (std::size_t i = 0; i < ca.size(); ++i) CHECK(std::abs(ca[i] - cb[i]) <= 1e-14);
}

TEST_CASE("ket validation") {
    CHECK_THROWS_AS(Ket({1.0, 1.0}, DimSpec{2}), validation_error);
    CHECK_THROWS_AS(Ket({1.0}, DimSpec{2}), shape_error);
    CHECK_THROWS_AS(Ket::normalized({0.0, 0.0}, DimSpec{2}), validation_error);
}
