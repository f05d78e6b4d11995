#include <catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "quditkit/eig.hpp"
#include "quditkit/random.hpp"

using namespace quditkit;

namespace {

Matrix random_hermitian(SplitMix64& rng, std::size_t d) {
    const Matrix g = random_gaussian_matrix(rng, d, d);
    return 0.5 * (g + dagger(g));
}

// Durand-Kerner root finder for a monic real-coefficient polynomial
// x^d - a1 x^{d-1} + a2 x^{d-2} - ..., used as the inverse oracle for
// char_coeffs_from_eigs.
std::vector<double> roots_from_char_coeffs(const std::vector<double>& a) {
    const std::size_t d = a.size() - 1;
    const auto eval = [&](cx x) {
        cx acc{0.0, 0.0};
        for (std::size_t j = 0; j <= d; ++j) {
            const double sign = (j % 2 == 0) ? 1.0 : -1.0;
            acc += sign * a[j] * std::pow(x, static_cast<double>(d - j));
        }
        return acc;
    };
    std::vector<cx> roots(d);
    for (std::size_t i = 0; i < d; ++i) roots[i] = std::polar(0.4 + 0.1 * i, 0.9 * (i + 1));
    for (int iter = 0; iter < 300; ++iter)
        for (std::size_t i = 0; i < d; ++i) {
            cx denom{1.0, 0.0};
            for (std::size_t j = 0; j < d; ++j)
                if (j != i) denom *= roots[i] - roots[j];
            roots[i] -= eval(roots[i]) / denom;
        }
    std::vector<double> out;
    for (const cx& r : roots) out.push_back(r.real());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("hermitian_eig on pinned 2x2 cases") {
    const EigDecomp z = hermitian_eig(pauli_z());
    CHECK(z.eigenvalues[0] == Catch::Approx(-1.0).margin(1e-14));
    CHECK(z.eigenvalues[1] == Catch::Approx(1.0).margin(1e-14));

    const EigDecomp x = hermitian_eig(pauli_x());
    CHECK(x.eigenvalues[0] == Catch::Approx(-1.0).margin(1e-13));
    CHECK(x.eigenvalues[1] == Catch::Approx(1.0).margin(1e-13));
    // eigenvectors are |-+> up to phase: all components 1/sqrt(2) in magnitude
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c)
            CHECK(std::abs(x.eigenvectors(r, c)) == Catch::Approx(1.0 / std::sqrt(2.0)).margin(1e-12));

    const EigDecomp half = hermitian_eig(0.5 * Matrix::identity(2));
    CHECK(half.eigenvalues[0] == Catch::Approx(0.5).margin(1e-14));
    CHECK(half.eigenvalues[1] == Catch::Approx(0.5).margin(1e-14));
}

TEST_CASE("hermitian_eig reconstruction and orthonormality") {
    SplitMix64 rng(23);
    for (std::size_t d : {2u, 3u, 5u, 8u, 16u}) {
        const Matrix a = random_hermitian(rng, d);
        const EigDecomp eig = hermitian_eig(a);
        for (std::size_t k = 1; k < d; ++k) CHECK(eig.eigenvalues[k - 1] <= eig.eigenvalues[k]);

        std::vector<cx> diag(eig.eigenvalues.begin(), eig.eigenvalues.end());
        const Matrix recon = eig.eigenvectors * Matrix::diag(diag) * dagger(eig.eigenvectors);
        CHECK(max_abs_diff(recon, a) <= 1e-11);
        CHECK(max_abs_diff(dagger(eig.eigenvectors) * eig.eigenvectors, Matrix::identity(d)) <=
              1e-11);
    }
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
    Matrix bad(2, 2);
    bad(0, 1) = 1.0;
    CHECK_THROWS_AS(hermitian_eig(bad), validation_error);
}

TEST_CASE("svd pinned cases") {
    const SvdResult ident = svd(Matrix::identity(3));
    for (double s : ident.s) CHECK(s == Catch::Approx(1.0).margin(1e-13));

    Matrix proj(2, 2);  // |0><0|
    proj(0, 0) = 1.0;
    const SvdResult rank1 = svd(proj);
    CHECK(rank1.s[0] == Catch::Approx(1.0).margin(1e-13));
    CHECK(rank1.s[1] == Catch::Approx(0.0).margin(1e-13));

    // coefficient matrix of (|00> + |11>)/sqrt(2)
    const SvdResult bellco = svd((1.0 / std::sqrt(2.0)) * Matrix::identity(2));
    CHECK(bellco.s[0] == Catch::Approx(1.0 / std::sqrt(2.0)).margin(1e-13));
    CHECK(bellco.s[1] == Catch::Approx(1.0 / std::sqrt(2.0)).margin(1e-13));
}

TEST_CASE("svd reconstructs random matrices") {
    SplitMix64 rng(29);
    for (auto [m, n] : {std::pair<std::size_t, std::size_t>{4, 4}, {3, 5}, {5, 3}}) {
        const Matrix a = random_gaussian_matrix(rng, m, n);
        const SvdResult s = svd(a);
        const std::size_t k = std::min(m, n);
        std::vector<cx> diag(s.s.begin(), s.s.end());
        const Matrix recon = s.u * Matrix::diag(diag) * dagger(s.v);
        CHECK(max_abs_diff(recon, a) <= 1e-11 * std::max(1.0, max_abs(a)));
        CHECK(max_abs_diff(dagger(s.u) * s.u, Matrix::identity(k)) <= 1e-11);
        CHECK(max_abs_diff(dagger(s.v) * s.v, Matrix::identity(k)) <= 1e-11);
        for (std::size_t j = 1; j < k; ++j) CHECK(s.s[j - 1] >= s.s[j]);
    }

    // rank-deficient: a column repeated
    Matrix low(3, 2);
    low(0, 0) = 1.0;
    low(1, 0) = 2.0;
    low(0, 1) = 1.0;
    low(1, 1) = 2.0;
    const SvdResult s = svd(low);
    CHECK(s.s[1] == Catch::Approx(0.0).margin(1e-12));
    std::vector<cx> diag(s.s.begin(), s.s.end());
    CHECK(max_abs_diff(s.u * Matrix::diag(diag) * dagger(s.v), low) <= 1e-11);
    CHECK(max_abs_diff(dagger(s.u) * s.u, Matrix::identity(2)) <= 1e-11);
}

TEST_CASE("mat_func") {
    const Matrix expz = mat_func(pauli_z(), [](double x) { return std::exp(x); });
    CHECK(max_abs_diff(expz, Matrix::diag_real({std::exp(1.0), std::exp(-1.0)})) <= 1e-13);

    const Matrix sq = mat_func(0.5 * Matrix::identity(2), [](double x) { return x * x; });
    CHECK(max_abs_diff(sq, 0.25 * Matrix::identity(2)) <= 1e-14);

    SplitMix64 rng(31);
    const Matrix a = random_hermitian(rng, 4);
    CHECK(max_abs_diff(mat_func(a, [](double x) { return x; }), a) <= 1e-12);
    // f(A) commutes with A
    const Matrix fa = mat_func(a, [](double x) { return std::exp(-x * x); });
    CHECK(max_abs(commutator(fa, a)) <= 1e-11);

    CHECK_THROWS_AS(mat_func(Matrix::diag_real({1.0, 0.0}), [](double x) { return std::log(x); }),
                    validation_error);
}

TEST_CASE("pure projector is idempotent under squaring") {
    SplitMix64 rng(37);
    std::vector<cx> amps(4);
    double n2 = 0.0;
    for (cx& a : amps) {
        a = rng.complex_gaussian();
        n2 += std::norm(a);
    }
    Matrix rho(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) rho(r, c) = amps[r] * std::conj(amps[c]) / n2;
    CHECK(max_abs_diff(mat_func(rho, [](double x) { return x * x; }), rho) <= 1e-11);
}

TEST_CASE("char_coeffs_from_eigs") {
    const std::vector<double> pure = char_coeffs_from_eigs({1.0, 0.0});
    CHECK(pure == std::vector<double>{1.0, 1.0, 0.0});

    const std::vector<double> mixed = char_coeffs_from_eigs({0.5, 0.5});
    CHECK(mixed[0] == 1.0);
    CHECK(mixed[1] == Catch::Approx(1.0).margin(1e-15));
    CHECK(mixed[2] == Catch::Approx(0.25).margin(1e-15));

    SplitMix64 rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<double> eigs(4);
        double total = 0.0;
        for (double& e : eigs) {
            e = rng.uniform53();
            total += e;
        }
        for (double& e : eigs) e /= total;  // PSD spectrum summing to 1
        for (double a : char_coeffs_from_eigs(eigs)) CHECK(a >= 0.0);
    }
}

TEST_CASE("char_coeffs roundtrip through root finding") {
    SplitMix64 rng(43);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<double> eigs{rng.uniform(0.1, 0.3), rng.uniform(0.4, 0.6),
                                 rng.uniform(0.7, 0.9)};
        std::sort(eigs.begin(), eigs.end());
        const std::vector<double> roots = roots_from_char_coeffs(char_coeffs_from_eigs(eigs));
        REQUIRE(roots.size() == eigs.size());
        for (std::size_t i = 0; i < eigs.size(); ++i)
            CHECK(roots[i] == Catch::Approx(eigs[i]).margin(1e-9));
    }
}
