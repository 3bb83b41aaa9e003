#ifndef QSP_IO_HPP
#define QSP_IO_HPP

#include <string>

#include <json.hpp>

#include "qsp/decompose.hpp"
#include "qsp/protocols.hpp"
#include "qsp/state.hpp"

namespace qsp::io {

using json = nlohmann::json;

// Wire formats (all complex numbers as [re, im] pairs):
//   polynomial  {"min_exponent": int, "coefficients": [[re, im], ...]}
//   state       {"dim": int, "min_power": int, "gammas": [[[re, im] x dim] x powers]}
//   matrix      {"n": int, "entries": [[[re, im] x n] x n]}  (row-major)
//   protocol    {"signal_exponents": [int, ...], "unitaries": [matrix, ...]}  (A_0 first)
//   arcs        {"delta": real, "arcs": [[a, b], ...]}
//   report      {"grid_max_error": real, "rescale_applied": real, "truncation_bound": real|null}

json to_json(const LaurentPolynomial& p);
LaurentPolynomial polynomial_from_json(const json& j);

json to_json(const PolynomialState& s);
PolynomialState state_from_json(const json& j);

json to_json(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd matrix_from_json(const json& j);

json to_json(const Protocol& p);
Protocol protocol_from_json(const json& j);

json to_json(const ArcSpec& spec);
ArcSpec arcs_from_json(const json& j);

json to_json(const BuildReport& report);

json read_json_file(const std::string& path);

/// Atomic write: temp file in the target directory, then rename.
void write_file_atomic(const std::string& path, const std::string& contents);
void write_json_file(const std::string& path, const json& j);

} // namespace qsp::io

#endif
