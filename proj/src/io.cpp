#include "ncg/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace ncg {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("JSON: ") + e.what());
  }
}

namespace {

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("JSON: missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("JSON: field '") + key + "': " + e.what());
  }
}

const json& array_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_array())
    throw ParseError(std::string("JSON: field '") + key + "' must be an array");
  return j.at(key);
}

cplx entry(const json& e) {
  if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
    throw ParseError("JSON: complex entries are [re, im] pairs");
  const cplx z(e[0].get<double>(), e[1].get<double>());
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw ParseError("JSON: non-finite entry");
  return z;
}

}  // namespace

json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  if (x == std::floor(x) && std::abs(x) < 1e15) return static_cast<long long>(x);
  return x;
}

json to_json(const ComplexMatrix& m) {
  json data = json::array();
  for (const auto& z : m.data()) data.push_back({z.real(), z.imag()});
  if (m.is_square()) return {{"n", m.rows()}, {"data", std::move(data)}};
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const json& j) {
  std::size_t rows = 0, cols = 0;
  if (j.is_object() && j.contains("n")) {
    rows = cols = field<std::size_t>(j, "n");
  } else {
    rows = field<std::size_t>(j, "rows");
    cols = field<std::size_t>(j, "cols");
  }
  const auto& data = array_field(j, "data");
  if (data.size() != rows * cols) throw ParseError("JSON: matrix data length differs from rows*cols");
  ComplexMatrix m(rows, cols);
  auto d = m.data();
  for (std::size_t k = 0; k < data.size(); ++k) d[k] = entry(data[k]);
  return m;
}

json to_json(const Vector& v) {
  json out = json::array();
  for (const auto& z : v) out.push_back({z.real(), z.imag()});
  return out;
}

Vector vector_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("JSON: vector must be an array of [re, im]");
  Vector v;
  for (const auto& e : j) v.push_back(entry(e));
  return v;
}

json to_json(const MatrixSubspace& s) {
  json spanning = json::array();
  for (const auto& b : s.basis()) spanning.push_back(to_json(b));
  return {{"n", s.n()}, {"kind", std::string(to_string(s.kind()))}, {"spanning", std::move(spanning)}};
}

MatrixSubspace subspace_from_json(const json& j) {
  const auto n = field<std::size_t>(j, "n");
  if (n == 0) throw ParseError("JSON: subspace dimension must be positive");
  const auto kind = space_kind_from_string(field<std::string>(j, "kind"));
  std::vector<ComplexMatrix> gens;
  for (const auto& m : array_field(j, "spanning")) gens.push_back(matrix_from_json(m));
  for (const auto& g : gens)
    if (g.rows() != n || g.cols() != n) throw ParseError("JSON: spanning matrix dimension differs from n");
  if (gens.empty()) return MatrixSubspace::zero(n, kind);
  return span(gens, n, kind);
}

json to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [i, j] : g.edges()) edges.push_back({i + 1, j + 1});
  return {{"n", g.n()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
  const auto n = field<std::size_t>(j, "n");
  if (n > Graph::kMaxVertices) throw ParseError("JSON: too many vertices");
  Graph g(n);
  for (const auto& e : array_field(j, "edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw ParseError("JSON: edges are [i, j] integer pairs");
    const long a = e[0].get<long>(), b = e[1].get<long>();
    if (a < 1 || b < 1) throw ParseError("JSON: vertex out of range");
    g.add_edge(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1));
  }
  return g;
}

json to_json(const Colouring& c) {
  json basis = json::array();
  for (const auto& v : c.basis) basis.push_back(to_json(v));
  json parts = json::array();
  for (const auto& p : c.parts) {
    json part = json::array();
    for (const auto i : p) part.push_back(i + 1);
    parts.push_back(std::move(part));
  }
  return {{"basis", std::move(basis)}, {"parts", std::move(parts)}, {"mode", std::string(to_string(c.mode))}};
}

Colouring colouring_from_json(const json& j) {
  Colouring c;
  for (const auto& v : array_field(j, "basis")) c.basis.push_back(vector_from_json(v));
  for (const auto& p : array_field(j, "parts")) {
    if (!p.is_array()) throw ParseError("JSON: parts are arrays of indices");
    std::vector<std::size_t> part;
    for (const auto& i : p) {
      if (!i.is_number_integer() || i.get<long>() < 1) throw ParseError("JSON: part indices are 1-based integers");
      part.push_back(static_cast<std::size_t>(i.get<long>() - 1));
    }
    c.parts.push_back(std::move(part));
  }
  c.mode = colouring_mode_from_string(field<std::string>(j, "mode"));
  return c;
}

json to_json(const ParameterEstimate& e) {
  json out = {{"lower", number(e.lower)}, {"upper", number(e.upper)}, {"exact", e.exact}, {"method", e.method}};
  if (e.marginal) out["marginal"] = true;
  if (e.colouring) out["witness"] = to_json(*e.colouring);
  else if (!e.family.empty()) {
    json fam = json::array();
    for (const auto& v : e.family) fam.push_back(to_json(v));
    out["witness"] = {{"family", std::move(fam)}};
  }
  return out;
}

json to_json(const ThetaBracket& b) {
  return {{"lower", b.lower},         {"upper", b.upper},   {"exact", b.exact},
          {"upper_source", b.upper_source}, {"starts", b.starts_used}, {"witness_T", to_json(b.witness_t)}};
}

json to_json(const SdpProblem& p) {
  json f = json::array();
  for (const auto& m : p.f) f.push_back(to_json(m));
  return {{"m", p.m}, {"c", p.c}, {"F0", to_json(p.f0)}, {"F", std::move(f)}};
}

SdpProblem sdp_problem_from_json(const json& j) {
  SdpProblem p;
  p.m = field<std::size_t>(j, "m");
  p.c = field<std::vector<double>>(j, "c");
  p.f0 = matrix_from_json(j.at("F0"));
  for (const auto& m : array_field(j, "F")) p.f.push_back(matrix_from_json(m));
  return p;
}

json to_json(const SdpSolution& s) {
  return {{"x", s.x},
          {"value", number(s.value)},
          {"barrier_mu", s.barrier_mu},
          {"min_eig", s.min_eig},
          {"gap", s.gap},
          {"status", std::string(to_string(s.status))},
          {"newton_steps", s.newton_steps}};
}

json to_json(const KrausMap& k) {
  json mats = json::array();
  for (const auto& m : k.kraus) mats.push_back(to_json(m));
  return {{"kind", "kraus"}, {"n_in", k.n_in}, {"n_out", k.n_out}, {"mats", std::move(mats)}};
}

json to_json(const IsometryCertificate& c) {
  return {{"kind", "isometry"}, {"n_in", c.n_in}, {"n_out", c.n_out}, {"d", c.d}, {"mats", json::array({to_json(c.e)})}};
}

KrausMap certificate_from_json(const json& j) {
  const auto kind = field<std::string>(j, "kind");
  const auto n_in = field<std::size_t>(j, "n_in");
  const auto n_out = field<std::size_t>(j, "n_out");
  std::vector<ComplexMatrix> mats;
  for (const auto& m : array_field(j, "mats")) mats.push_back(matrix_from_json(m));
  if (kind == "kraus") {
    for (const auto& e : mats)
      if (e.rows() != n_out || e.cols() != n_in) throw ParseError("JSON: Kraus operator shape is not n_out x n_in");
    if (mats.empty()) throw ParseError("JSON: certificate without operators");
    return KrausMap{n_in, n_out, std::move(mats)};
  }
  if (kind == "isometry") {
    if (mats.size() != 1) throw ParseError("JSON: isometry certificate holds exactly one matrix");
    const auto d = field<std::size_t>(j, "d");
    return isometry_to_kraus(IsometryCertificate{d, n_in, n_out, std::move(mats.front())});
  }
  throw ParseError("JSON: unknown certificate kind '" + kind + "'");
}

}  // namespace ncg
