#pragma once

// JSON and DIMACS serialization.
//
// Every JSON document carries {"v": 1, "kind": ...}. Matrices are flat
// row-major arrays of [re, im] pairs; their shape comes from the enclosing
// document. Parse failures throw InvalidInput.

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "qgc/classical.hpp"
#include "qgc/coloring.hpp"
#include "qgc/qgraph.hpp"

namespace qgc {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols);

Json to_json(const BlockAlgebra& m);
Json to_json(const QuantumGraph& g);
Json to_json(const ColoringCertificate& c);
Json to_json(const HomomorphismCertificate& h);
Json to_json(const ClassicalGraph& g);
Json to_json(const VerificationReport& r);
Json to_json(const BFoldAssignment& w);

BlockAlgebra algebra_from_json(const Json& j, std::size_t dim);
QuantumGraph quantum_graph_from_json(const Json& j);
ColoringCertificate certificate_from_json(const Json& j);
HomomorphismCertificate homomorphism_from_json(const Json& j);
ClassicalGraph classical_graph_from_json(const Json& j);

/// "p edge N M" header, "e u v" lines (1-indexed), "c" comments.
ClassicalGraph read_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const ClassicalGraph& g);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
/// Serialized form used for files and golden output (2-space indent).
std::string dump(const Json& j);

/// A classical graph from a JSON edge list or a DIMACS file.
ClassicalGraph load_classical_graph(const std::string& path);
/// A quantum graph document, or a classical graph (JSON or DIMACS) which
/// is embedded with from_classical.
QuantumGraph load_quantum_graph(const std::string& path);
ColoringCertificate load_certificate(const std::string& path);
HomomorphismCertificate load_homomorphism(const std::string& path);

}  // namespace qgc
