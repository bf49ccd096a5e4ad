#include "qgc/io.hpp"

#include <fstream>
#include <sstream>

namespace qgc {
namespace {

void require_kind(const Json& j, const char* kind) {
  if (!j.is_object()) throw InvalidInput(std::string("expected a JSON object of kind '") + kind + "'");
  if (j.value("v", 0) != kSchemaVersion)
    throw InvalidInput("unsupported schema version (expected \"v\": " + std::to_string(kSchemaVersion) + ")");
  const std::string actual = j.value("kind", std::string());
  if (actual != kind) throw InvalidInput(std::string("expected kind '") + kind + "', found '" + actual + "'");
}

template <class T>
T field(const Json& j, const char* name) {
  if (!j.contains(name)) throw InvalidInput(std::string("missing field '") + name + "'");
  try {
    return j.at(name).get<T>();
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("field '") + name + "': " + e.what());
  }
}

std::size_t positive(const Json& j, const char* name) {
  const auto v = field<long long>(j, name);
  if (v <= 0) throw InvalidInput(std::string("field '") + name + "' must be positive");
  return static_cast<std::size_t>(v);
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) out.push_back({m(r, c).real(), m(r, c).imag()});
  return out;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows * cols)
    throw InvalidInput("matrix must be an array of " + std::to_string(rows * cols) + " [re, im] pairs");
  Matrix m(rows, cols);
  for (std::size_t k = 0; k < rows * cols; ++k) {
    const Json& e = j[k];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
      throw InvalidInput("matrix entry " + std::to_string(k) + " is not an [re, im] pair");
    m(k / cols, k % cols) = Complex(e[0].get<double>(), e[1].get<double>());
  }
  return m;
}

Json to_json(const BlockAlgebra& m) {
  Json blocks = Json::array();
  for (const auto& b : m.blocks()) blocks.push_back({b.multiplicity, b.size});
  return {{"blocks", blocks},
          {"conjugator", m.has_identity_conjugator() ? Json(nullptr) : matrix_to_json(m.conjugator())}};
}

Json to_json(const QuantumGraph& g) {
  Json s = Json::array();
  for (const auto& x : g.S().basis()) s.push_back(matrix_to_json(x));
  return {{"v", kSchemaVersion}, {"kind", "quantum_graph"}, {"dim", g.ambient_dim()}, {"S", s}, {"M", to_json(g.M())}};
}

Json to_json(const ColoringCertificate& c) {
  Json ps = Json::array();
  for (const auto& p : c.projections) ps.push_back(matrix_to_json(p));
  return {{"v", kSchemaVersion},   {"kind", "certificate"}, {"dim", c.graph_dim},
          {"ancilla_dim", c.ancilla_dim}, {"fold", c.fold},        {"colors", c.colors()},
          {"projections", ps}};
}

Json to_json(const HomomorphismCertificate& h) {
  Json ks = Json::array();
  for (const auto& k : h.kraus) ks.push_back(matrix_to_json(k));
  return {{"v", kSchemaVersion},         {"kind", "homomorphism"},        {"source_dim", h.source_dim},
          {"target_dim", h.target_dim}, {"ancilla_dim", h.ancilla_dim}, {"kraus", ks}};
}

Json to_json(const ClassicalGraph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"v", kSchemaVersion}, {"kind", "classical_graph"}, {"n", g.vertex_count()}, {"edges", edges}};
}

Json to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks())
    checks.push_back({{"name", c.name}, {"residual", c.residual}, {"tol", c.tol}, {"passed", c.passed},
                      {"detail", c.detail}});
  return {{"subject", r.subject()}, {"passed", r.passed()}, {"max_residual", r.max_residual()}, {"checks", checks}};
}

Json to_json(const BFoldAssignment& w) {
  return {{"palette_size", w.palette_size}, {"fold", w.fold}, {"colours", w.colours}};
}

BlockAlgebra algebra_from_json(const Json& j, std::size_t dim) {
  if (!j.is_object()) throw InvalidInput("field 'M' must be an object");
  const Json& bl = j.contains("blocks") ? j.at("blocks") : Json();
  if (!bl.is_array() || bl.empty()) throw InvalidInput("'M.blocks' must be a non-empty array of [n, k] pairs");
  std::vector<Block> blocks;
  std::size_t total = 0;
  for (const auto& b : bl) {
    if (!b.is_array() || b.size() != 2 || !b[0].is_number_unsigned() || !b[1].is_number_unsigned())
      throw InvalidInput("each block must be a pair of positive integers");
    blocks.push_back({b[0].get<std::size_t>(), b[1].get<std::size_t>()});
    total += blocks.back().multiplicity * blocks.back().size;
  }
  if (total != dim)
    throw InvalidInput("blocks act on dimension " + std::to_string(total) + ", expected " + std::to_string(dim));
  std::optional<Matrix> u;
  if (j.contains("conjugator") && !j.at("conjugator").is_null()) u = matrix_from_json(j.at("conjugator"), dim, dim);
  return BlockAlgebra(std::move(blocks), std::move(u));
}

QuantumGraph quantum_graph_from_json(const Json& j) {
  require_kind(j, "quantum_graph");
  const std::size_t n = positive(j, "dim");
  if (!j.contains("S") || !j.at("S").is_array()) throw InvalidInput("field 'S' must be an array of matrices");
  std::vector<Matrix> s;
  for (const auto& x : j.at("S")) s.push_back(matrix_from_json(x, n, n));
  if (!j.contains("M")) throw InvalidInput("missing field 'M'");
  return QuantumGraph(orthonormalize(s, kRankCutoff, n), algebra_from_json(j.at("M"), n));
}

ColoringCertificate certificate_from_json(const Json& j) {
  require_kind(j, "certificate");
  ColoringCertificate c;
  c.graph_dim = positive(j, "dim");
  c.ancilla_dim = positive(j, "ancilla_dim");
  c.fold = positive(j, "fold");
  const auto colors = field<std::size_t>(j, "colors");
  if (!j.contains("projections") || !j.at("projections").is_array() || j.at("projections").size() != colors)
    throw InvalidInput("'projections' must hold exactly 'colors' matrices");
  for (const auto& p : j.at("projections")) c.projections.push_back(matrix_from_json(p, c.total_dim(), c.total_dim()));
  return c;
}

HomomorphismCertificate homomorphism_from_json(const Json& j) {
  require_kind(j, "homomorphism");
  HomomorphismCertificate h;
  h.source_dim = positive(j, "source_dim");
  h.target_dim = positive(j, "target_dim");
  h.ancilla_dim = positive(j, "ancilla_dim");
  if (!j.contains("kraus") || !j.at("kraus").is_array()) throw InvalidInput("field 'kraus' must be an array");
  for (const auto& k : j.at("kraus")) h.kraus.push_back(matrix_from_json(k, h.target_dim, h.source_dim * h.ancilla_dim));
  return h;
}

ClassicalGraph classical_graph_from_json(const Json& j) {
  require_kind(j, "classical_graph");
  const std::size_t n = positive(j, "n");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  if (!j.contains("edges") || !j.at("edges").is_array()) throw InvalidInput("field 'edges' must be an array");
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
      throw InvalidInput("each edge must be a pair of 0-based vertex indices");
    edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
  }
  return ClassicalGraph(n, edges);
}

// ---------------------------------------------------------------------------

ClassicalGraph read_dimacs(std::istream& in) {
  std::string line;
  std::size_t n = 0, declared = 0, lineno = 0;
  bool header = false;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    const std::string where = "DIMACS line " + std::to_string(lineno) + ": ";
    if (tag == "p") {
      std::string format;
      if (header) throw InvalidInput(where + "duplicate 'p' line");
      if (!(ls >> format >> n >> declared) || (format != "edge" && format != "col"))
        throw InvalidInput(where + "expected 'p edge <vertices> <edges>'");
      if (n == 0) throw InvalidInput(where + "graph needs at least one vertex");
      header = true;
    } else if (tag == "e") {
      long long u = 0, v = 0;
      if (!header) throw InvalidInput(where + "edge before the 'p' line");
      if (!(ls >> u >> v)) throw InvalidInput(where + "expected 'e <u> <v>'");
      if (u < 1 || v < 1 || static_cast<std::size_t>(u) > n || static_cast<std::size_t>(v) > n)
        throw InvalidInput(where + "vertex out of range 1.." + std::to_string(n));
      if (u == v) throw InvalidInput(where + "loops are not allowed");
      edges.emplace_back(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
    } else {
      throw InvalidInput(where + "unknown line type '" + tag + "'");
    }
  }
  if (!header) throw InvalidInput("DIMACS input has no 'p edge' line");
  ClassicalGraph g(n, edges);
  if (edges.size() != declared && g.edge_count() != declared)
    throw InvalidInput("DIMACS header declares " + std::to_string(declared) + " edges, found " +
                       std::to_string(edges.size()));
  return g;
}

void write_dimacs(std::ostream& out, const ClassicalGraph& g) {
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << text;
  if (!out) throw InvalidInput("error while writing '" + path + "'");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

namespace {

Json parse_json(const std::string& text, const std::string& path) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
  }
}

bool looks_like_json(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text[pos] == '{';
}

}  // namespace

ClassicalGraph load_classical_graph(const std::string& path) {
  const std::string text = read_text_file(path);
  if (looks_like_json(text)) return classical_graph_from_json(parse_json(text, path));
  std::istringstream in(text);
  return read_dimacs(in);
}

QuantumGraph load_quantum_graph(const std::string& path) {
  const std::string text = read_text_file(path);
  if (!looks_like_json(text)) {
    std::istringstream in(text);
    return from_classical(read_dimacs(in));
  }
  const Json j = parse_json(text, path);
  if (j.is_object() && j.value("kind", std::string()) == "classical_graph")
    return from_classical(classical_graph_from_json(j));
  return quantum_graph_from_json(j);
}

ColoringCertificate load_certificate(const std::string& path) {
  return certificate_from_json(parse_json(read_text_file(path), path));
}

HomomorphismCertificate load_homomorphism(const std::string& path) {
  return homomorphism_from_json(parse_json(read_text_file(path), path));
}

}  // namespace qgc
