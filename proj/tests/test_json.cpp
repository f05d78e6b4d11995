#include <catch_amalgamated.hpp>

#include "quditkit/json_io.hpp"
#include "quditkit/random.hpp"

using namespace quditkit;

TEST_CASE("matrix json roundtrip is bit-identical") {
    SplitMix64 rng(3);
    Matrix m = random_gaussian_matrix(rng, 3, 4);
    m(0, 0) = cx{0.1, 1.0 / 3.0};
    m(1, 2) = cx{1e-308, -2.5e17};

    const std::string text = to_json(m).dump();
    const Matrix back = matrix_from_json(parse_json(text));
    REQUIRE(back.rows() == m.rows());
    REQUIRE(back.cols() == m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            CHECK(back(r, c).real() == m(r, c).real());
            CHECK(back(r, c).imag() == m(r, c).imag());
        }
}

TEST_CASE("density operator json roundtrip") {
    SplitMix64 rng(5);
    const DensityOp rho = random_density(rng, DimSpec{2, 3});
    const DensityOp back = density_from_json(parse_json(to_json(rho).dump()));
    CHECK(back.dims() == rho.dims());
    CHECK(max_abs_diff(back.matrix(), rho.matrix()) == 0.0);
}

TEST_CASE("json validation errors") {
    CHECK_THROWS_AS(parse_json("{not json"), validation_error);
    CHECK_THROWS_AS(matrix_from_json(parse_json("{\"rows\":2,\"cols\":2,\"data\":[[1,0]]}")),
                    validation_error);
    CHECK_THROWS_AS(density_from_json(parse_json("{\"dims\":[2]}")), validation_error);

    // a positivity failure coming through the user-input path
    const json bad{{"dims", {2}},
                   {"matrix",
                    {{"rows", 2}, {"cols", 2}, {"data", {{1.5, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {-0.5, 0.0}}}}}};
    CHECK_THROWS_WITH(density_from_json(bad), Catch::Matchers::ContainsSubstring("positivity"));
}

TEST_CASE("qubit bloch shorthand") {
    const BlochCoeffs b = bloch_from_json(parse_json("[0.0, 0.0, 1.0]"), DimSpec{2});
    CHECK(b.at({0}) == 0.5);
    CHECK(b.at({1}) == 0.5);  // z coefficient in flat order
    CHECK(b.at({2}) == 0.0);
    CHECK(b.at({3}) == 0.0);
}
