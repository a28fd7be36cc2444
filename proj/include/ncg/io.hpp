#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "ncg/graph.hpp"
#include "ncg/homomorphism.hpp"
#include "ncg/parameters.hpp"
#include "ncg/sdp.hpp"
#include "ncg/theta.hpp"

namespace ncg {

using nlohmann::json;

/// Reads a whole file; ParseError when it cannot be opened.
std::string read_file(const std::string& path);
/// Parses JSON text, rethrowing syntax errors as ParseError.
json parse_json(std::string_view text);

/// Square: {"n", "data"}; rectangular (Kraus operators): {"rows", "cols", "data"}.
/// data holds [re, im] pairs in row-major order.
json to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j);

json to_json(const Vector& v);
Vector vector_from_json(const json& j);

/// {"n", "kind", "spanning": [matrix, ...]}; the basis is re-orthonormalized
/// and the kind re-verified on input.
json to_json(const MatrixSubspace& s);
MatrixSubspace subspace_from_json(const json& j);

/// {"n", "edges": [[i, j], ...]} with 1-based vertices.
json to_json(const Graph& g);
Graph graph_from_json(const json& j);

/// {"basis": [vector, ...], "parts": [[i, ...], ...] (1-based), "mode"}.
json to_json(const Colouring& c);
Colouring colouring_from_json(const json& j);

json to_json(const ParameterEstimate& e);
json to_json(const ThetaBracket& b);

json to_json(const SdpProblem& p);
SdpProblem sdp_problem_from_json(const json& j);
json to_json(const SdpSolution& s);

/// {"kind": "kraus"|"isometry", "n_in", "n_out", "d"?, "mats": [...]}.
json to_json(const KrausMap& k);
json to_json(const IsometryCertificate& c);
/// Either certificate kind, returned in Kraus form (validated).
KrausMap certificate_from_json(const json& j);

/// Integral finite values as integers, +inf as null.
json number(double x);

}  // namespace ncg
