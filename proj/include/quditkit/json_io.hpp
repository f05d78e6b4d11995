#pragma once

// JSON encodings shared by the CLI and any scripted consumer.
//
//   matrix:  {"rows": R, "cols": C, "data": [[re, im], ...]}   (row-major)
//   state:   {"dims": [d1, ...], "matrix": {...}}
//   bloch:   flat coefficient array, or a 3-vector [vx, vy, vz] for a
//            single qubit (the rescaled coherence-vector convention)

#include <string>
#include <vector>

#include <json.hpp>

#include "matrix.hpp"
#include "states.hpp"

namespace quditkit {

using nlohmann::json;

inline json to_json(const Matrix& m) {
    json data = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            data.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

inline Matrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
        throw validation_error("matrix JSON must have rows, cols and data fields");
    const std::size_t rows = j.at("rows").get<std::size_t>();
    const std::size_t cols = j.at("cols").get<std::size_t>();
    const json& data = j.at("data");
    if (!data.is_array() || data.size() != rows * cols)
        throw validation_error("matrix JSON: data length does not match rows*cols");
    std::vector<cx> entries;
    entries.reserve(rows * cols);
    for (const json& e : data) {
        if (!e.is_array() || e.size() != 2)
            throw validation_error("matrix JSON: entries must be [re, im] pairs");
        entries.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    return Matrix(rows, cols, std::move(entries));
}

inline json to_json(const DensityOp& rho) {
    return json{{"dims", rho.dims().dims()}, {"matrix", to_json(rho.matrix())}};
}

inline DensityOp density_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dims") || !j.contains("matrix"))
        throw validation_error("state JSON must have dims and matrix fields");
    const DimSpec dims(j.at("dims").get<std::vector<std::size_t>>());
    return validate_density(matrix_from_json(j.at("matrix")), dims);
}

inline BlochCoeffs bloch_from_json(const json& j, const DimSpec& dims) {
    if (!j.is_array()) throw validation_error("bloch JSON must be an array of reals");
    std::vector<double> values;
    values.reserve(j.size());
    for (const json& e : j) values.push_back(e.get<double>());

    // Single-qubit shorthand: [vx, vy, vz] rescaled vector.
    if (dims == DimSpec{2} && values.size() == 3) {
        const std::vector<double> coeffs{0.5, 0.5 * values[2], 0.5 * values[0], 0.5 * values[1]};
        return BlochCoeffs(dims, coeffs);
    }
    return BlochCoeffs(dims, std::move(values));
}

inline json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw validation_error("malformed JSON input");
    return j;
}

}  // namespace quditkit
