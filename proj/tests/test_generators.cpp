#include <catch_amalgamated.hpp>

#include <cmath>

#include "quditkit/generators.hpp"

using namespace quditkit;

TEST_CASE("pauli specialization at d = 2") {
    const GeneratorBasis basis = full_basis(2);
    REQUIRE(basis.flat.size() == 4);
    CHECK(max_abs_diff(basis.flat[0], Matrix::identity(2)) == 0.0);
    CHECK(max_abs_diff(basis.flat[1], pauli_z()) == 0.0);
    CHECK(max_abs_diff(basis.flat[2], pauli_x()) == 0.0);
    CHECK(max_abs_diff(basis.flat[3], pauli_y()) == 0.0);
}

TEST_CASE("gell-mann specialization at d = 3") {
    const GeneratorBasis basis = full_basis(3);
    REQUIRE(basis.flat.size() == 9);

    const double r3 = 1.0 / std::sqrt(3.0);
    const Matrix lambda8 = Matrix::diag_real({r3, r3, -2.0 * r3});
    CHECK(max_abs_diff(ggm_diagonal(3, 2), lambda8) < 1e-15);

    Matrix lambda4(3, 3);
    lambda4(0, 2) = 1.0;
    lambda4(2, 0) = 1.0;
    CHECK(max_abs_diff(ggm_symmetric(3, 1, 3), lambda4) == 0.0);

    Matrix lambda5(3, 3);
    lambda5(0, 2) = cx{0.0, -1.0};
    lambda5(2, 0) = cx{0.0, 1.0};
    CHECK(max_abs_diff(ggm_antisymmetric(3, 1, 3), lambda5) == 0.0);
}

TEST_CASE("generators are traceless Hermitian and trace-orthonormal") {
    for (std::size_t d = 2; d <= 5; ++d) {
        const GeneratorBasis basis = full_basis(d);
        CHECK(basis.flat.size() == d * d);
        for (std::size_t j = 1; j < basis.flat.size(); ++j) {
            CHECK(std::abs(trace(basis.flat[j])) <= 1e-15);
            CHECK(hermiticity_defect(basis.flat[j]) <= 1e-15);
        }
        for (std::size_t j = 1; j < basis.flat.size(); ++j)
            for (std::size_t k = 1; k < basis.flat.size(); ++k) {
                const double expect = j == k ? 2.0 : 0.0;
                CHECK(std::abs(trace(basis.flat[j] * basis.flat[k]) - cx{expect, 0.0}) <= 1e-13);
            }
    }
}

TEST_CASE("su(2) structure constants are the Levi-Civita symbol") {
    const StructureConstants sc = structure_constants(2);
    // flat order (z, x, y) is a cyclic permutation of (x, y, z)
    const auto eps = [](std::size_t j, std::size_t k, std::size_t l) -> double {
        if (j == k || k == l || j == l) return 0.0;
        if ((j == 1 && k == 2 && l == 3) || (j == 2 && k == 3 && l == 1) ||
            (j == 3 && k == 1 && l == 2))
            return 1.0;
        return -1.0;
    };
    for (std::size_t j = 1; j <= 3; ++j)
        for (std::size_t k = 1; k <= 3; ++k)
            for (std::size_t l = 1; l <= 3; ++l) {
                CHECK(sc.f_at(j, k, l) == Catch::Approx(eps(j, k, l)).margin(1e-13));
                CHECK(sc.g_at(j, k, l) == Catch::Approx(0.0).margin(1e-13));
            }
}

TEST_CASE("su(3) structure constants from traces") {
    const StructureConstants sc = structure_constants(3);
    const std::vector<std::size_t> gm = gell_mann_flat_index();
    const auto f = [&](int a, int b, int c) { return sc.f_at(gm[a], gm[b], gm[c]); };
    const auto g = [&](int a, int b, int c) { return sc.g_at(gm[a], gm[b], gm[c]); };

    const double rt3 = std::sqrt(3.0);
    CHECK(f(4, 5, 8) == Catch::Approx(rt3 / 2.0).margin(1e-13));
    CHECK(f(6, 7, 8) == Catch::Approx(rt3 / 2.0).margin(1e-13));
    CHECK(f(1, 4, 7) == Catch::Approx(0.5).margin(1e-13));
    CHECK(f(2, 4, 6) == Catch::Approx(0.5).margin(1e-13));
    // the trace oracle pins f_123 to 1 (some published tables list sqrt(3)/2)
    CHECK(f(1, 2, 3) == Catch::Approx(1.0).margin(1e-13));

    CHECK(g(1, 1, 8) == Catch::Approx(1.0 / rt3).margin(1e-13));
    CHECK(g(2, 2, 8) == Catch::Approx(1.0 / rt3).margin(1e-13));
    CHECK(g(8, 8, 8) == Catch::Approx(-1.0 / rt3).margin(1e-13));
    CHECK(g(3, 4, 4) == Catch::Approx(0.5).margin(1e-13));
    CHECK(g(4, 4, 8) == Catch::Approx(-0.5 / rt3).margin(1e-13));
}

TEST_CASE("f is totally antisymmetric, g totally symmetric") {
    for (std::size_t d : {2u, 3u}) {
        const StructureConstants sc = structure_constants(d);
        const std::size_t n = d * d - 1;
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t k = 1; k <= n; ++k)
                for (std::size_t l = 1; l <= n; ++l) {
                    CHECK(std::abs(sc.f_at(j, k, l) + sc.f_at(k, j, l)) <= 1e-12);
                    CHECK(std::abs(sc.f_at(j, k, l) - sc.f_at(k, l, j)) <= 1e-12);
                    CHECK(std::abs(sc.g_at(j, k, l) - sc.g_at(k, j, l)) <= 1e-12);
                    CHECK(std::abs(sc.g_at(j, k, l) - sc.g_at(l, k, j)) <= 1e-12);
                }
    }
}

TEST_CASE("generator index validation") {
    CHECK_THROWS_AS(ggm_diagonal(3, 0), validation_error);
    CHECK_THROWS_AS(ggm_diagonal(3, 3), validation_error);
    CHECK_THROWS_AS(ggm_symmetric(3, 2, 2), validation_error);
    CHECK_THROWS_AS(ggm_antisymmetric(3, 3, 2), validation_error);
    CHECK_THROWS_AS(full_basis(1), dimension_error);
    CHECK_THROWS_AS(full_basis(17), dimension_error);
    CHECK_THROWS_AS(structure_constants(7), dimension_error);
}
