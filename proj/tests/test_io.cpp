#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "oracles.hpp"
#include "qgc/io.hpp"
#include "qgc/products.hpp"

using namespace qgc;

namespace {

bool bit_identical(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a.data()[i] != b.data()[i]) return false;
  return true;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("qgc_io_" + name)).string();
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("matrix round trip is bit-identical") {
    for (unsigned s = 0; s < 3; ++s) {
      const Matrix m = oracle::random_matrix(4, s);
      CHECK(bit_identical(matrix_from_json(Json::parse(matrix_to_json(m).dump()), 4, 4), m));
    }
    const Matrix tiny = Matrix::Constant(1, 1, Complex(5e-324, -1e308));
    CHECK(bit_identical(matrix_from_json(Json::parse(matrix_to_json(tiny).dump()), 1, 1), tiny));
    CHECK_THROWS_AS(matrix_from_json(matrix_to_json(identity(2)), 3, 3), InvalidInput);
    CHECK_THROWS_AS(matrix_from_json(Json::parse("[[1, 0], [0], [0, 0], [1, 0]]"), 2, 2), InvalidInput);
  }

  TEST_CASE("quantum graph round trip") {
    const auto g = conjugate_graph(complete_quantum_graph(BlockAlgebra({{1, 1}, {1, 2}})), oracle::random_unitary(3, 4));
    const auto back = quantum_graph_from_json(Json::parse(dump(to_json(g))));
    CHECK(back.ambient_dim() == 3);
    CHECK(bit_identical(back.S().columns(), g.S().columns()));
    CHECK(back.M().blocks() == g.M().blocks());
    CHECK(bit_identical(back.M().conjugator(), g.M().conjugator()));
    CHECK(dump(to_json(back)) == dump(to_json(g)));
  }

  TEST_CASE("certificate, homomorphism and classical round trips") {
    const auto bell = bell_coloring(2);
    const auto c2 = certificate_from_json(Json::parse(dump(to_json(bell))));
    CHECK(c2.colors() == 4);
    CHECK(c2.ancilla_dim == 2);
    for (std::size_t a = 0; a < 4; ++a) CHECK(bit_identical(c2.projections[a], bell.projections[a]));

    const auto w = hedetniemi_witness(from_classical(cycle(3)), from_classical(complete(2)));
    const auto w2 = homomorphism_from_json(Json::parse(dump(to_json(w))));
    CHECK(w2.kraus.size() == w.kraus.size());
    CHECK(dump(to_json(w2)) == dump(to_json(w)));

    const auto p = petersen();
    CHECK(classical_graph_from_json(Json::parse(dump(to_json(p)))) == p);
  }

  TEST_CASE("schema errors") {
    CHECK_THROWS_AS(classical_graph_from_json(Json::parse(R"({"kind":"classical_graph","n":2,"edges":[]})")),
                    InvalidInput);
    CHECK_THROWS_AS(classical_graph_from_json(Json::parse(R"({"v":1,"kind":"certificate"})")), InvalidInput);
    CHECK_THROWS_AS(classical_graph_from_json(Json::parse(R"({"v":1,"kind":"classical_graph","n":2,"edges":[[0,2]]})")),
                    InvalidInput);
    CHECK_THROWS_AS(classical_graph_from_json(Json::parse(R"({"v":1,"kind":"classical_graph","n":2,"edges":[[0]]})")),
                    InvalidInput);
    CHECK_THROWS_AS(classical_graph_from_json(Json::parse("[1, 2]")), InvalidInput);
    CHECK_THROWS_AS(quantum_graph_from_json(Json::parse(R"({"v":1,"kind":"quantum_graph","dim":2,"S":[]})")),
                    InvalidInput);
    CHECK_THROWS_AS(
        quantum_graph_from_json(Json::parse(R"({"v":1,"kind":"quantum_graph","dim":2,"S":[],"M":{"blocks":[[1,3]]}})")),
        InvalidInput);
    auto cert = to_json(bell_coloring(2));
    cert["projections"].erase(0);
    CHECK_THROWS_AS(certificate_from_json(cert), InvalidInput);
  }

  TEST_CASE("DIMACS parse and write") {
    std::istringstream in("c a comment\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n");
    const auto g = read_dimacs(in);
    CHECK(g == cycle(5));
    std::ostringstream out;
    write_dimacs(out, g);
    std::istringstream again(out.str());
    CHECK(read_dimacs(again) == g);
    CHECK(out.str().rfind("p edge 5 5\n", 0) == 0);
  }

  TEST_CASE("malformed DIMACS") {
    for (const char* text : {"e 1 2\np edge 2 1\n", "p edge 2 1\ne 1 3\n", "p edge 2 1\ne 1 1\n",
                             "p edge 2 2\ne 1 2\n", "p edge 2 1\np edge 2 1\ne 1 2\n", "p edge 0 0\n",
                             "x what\n", "", "p edge 2 1\ne 1\n"}) {
      std::istringstream in(text);
      CHECK_THROWS_AS(read_dimacs(in), InvalidInput);
    }
  }

  TEST_CASE("file loaders") {
    const std::string dimacs = temp_path("c5.col"), json = temp_path("c5.json"), bad = temp_path("bad.json");
    std::ostringstream s;
    write_dimacs(s, cycle(5));
    write_text_file(dimacs, s.str());
    write_text_file(json, dump(to_json(cycle(5))));
    write_text_file(bad, "{ not json");
    CHECK(load_classical_graph(dimacs) == cycle(5));
    CHECK(load_classical_graph(json) == cycle(5));
    CHECK(same_graph(load_quantum_graph(dimacs), from_classical(cycle(5))));
    CHECK(same_graph(load_quantum_graph(json), from_classical(cycle(5))));
    CHECK_THROWS_AS(load_classical_graph(bad), InvalidInput);
    CHECK_THROWS_AS(load_certificate(json), InvalidInput);
    CHECK_THROWS_AS(load_classical_graph(temp_path("does_not_exist")), InvalidInput);
    for (const auto& p : {dimacs, json, bad}) std::filesystem::remove(p);
  }
}
