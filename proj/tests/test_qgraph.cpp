#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "qgc/classical.hpp"
#include "qgc/qgraph.hpp"

using namespace qgc;

namespace {

// Every generator of M commutes with every generator of M'.
double commutation_defect(const BlockAlgebra& m) {
  double worst = 0.0;
  const auto a = m.generators();
  const auto b = commutant(m).generators();
  for (const auto& x : a)
    for (const auto& y : b) worst = std::max(worst, (x * y - y * x).norm());
  return worst;
}

std::vector<BlockAlgebra> algebra_corpus() {
  return {BlockAlgebra::diagonal(3),
          BlockAlgebra::full(3),
          BlockAlgebra::scalars(2),
          BlockAlgebra({{2, 2}}),
          BlockAlgebra({{1, 2}, {2, 1}}),
          BlockAlgebra({{2, 1}, {1, 2}}, oracle::random_unitary(4, 11))};
}

}  // namespace

TEST_SUITE("qgraph") {
  TEST_CASE("commutant examples") {
    const auto d = commutant(BlockAlgebra::diagonal(4));
    CHECK(d.algebra_dim() == 4);
    CHECK(same_algebra(d, BlockAlgebra::diagonal(4)));
    CHECK(same_algebra(commutant(BlockAlgebra::full(3)), BlockAlgebra::scalars(3)));

    // (C I_d ⊗ M_k)' = M_d ⊗ C I_k.
    const std::size_t dd = 2, k = 3;
    const auto m = BlockAlgebra({{dd, k}});
    std::vector<Matrix> expect;
    for (std::size_t i = 0; i < dd; ++i)
      for (std::size_t j = 0; j < dd; ++j) expect.push_back(kron(matrix_unit(dd, i, j), identity(k)));
    CHECK(same_span(algebra_basis(commutant(m)), orthonormalize(expect)));
  }

  TEST_CASE("commutant invariants over the corpus") {
    for (const auto& m : algebra_corpus()) {
      CHECK(commutation_defect(m) < 1e-12);
      const auto cc = commutant(commutant(m));
      CHECK(cc.blocks() == m.blocks());
      CHECK(same_algebra(cc, m));
      std::size_t n2 = 0, k2 = 0;
      for (const auto& b : m.blocks()) {
        n2 += b.multiplicity * b.multiplicity;
        k2 += b.size * b.size;
      }
      CHECK(algebra_basis(m).dim() == k2);
      CHECK(algebra_basis(commutant(m)).dim() == n2);
    }
    CHECK(algebra_basis(BlockAlgebra::diagonal(5)).dim() == algebra_basis(commutant(BlockAlgebra::diagonal(5))).dim());
  }

  TEST_CASE("algebra_basis and algebra_tensor") {
    const auto b = algebra_basis(BlockAlgebra::diagonal(2));
    CHECK(b.dim() == 2);
    CHECK(contains(b, matrix_unit(2, 0, 0)));
    CHECK(contains(b, matrix_unit(2, 1, 1)));

    CHECK(same_algebra(algebra_tensor(BlockAlgebra::diagonal(2), BlockAlgebra::diagonal(3)), BlockAlgebra::diagonal(6)));
    CHECK(algebra_basis(algebra_tensor(BlockAlgebra::full(2), BlockAlgebra::diagonal(3))).dim() == 12);

    const auto corpus = algebra_corpus();
    for (std::size_t i = 0; i < corpus.size(); i += 2)
      for (std::size_t j = 1; j < corpus.size(); j += 2) {
        const auto& x = corpus[i];
        const auto& y = corpus[j];
        const auto t = algebra_tensor(x, y);
        CHECK(same_span(algebra_basis(t), subspace_tensor(algebra_basis(x), algebra_basis(y))));
        // Commutant of the tensor is the tensor of commutants.
        CHECK(same_span(algebra_basis(commutant(t)),
                        subspace_tensor(algebra_basis(commutant(x)), algebra_basis(commutant(y)))));
      }
  }

  TEST_CASE("BlockAlgebra errors") {
    CHECK_THROWS_AS(BlockAlgebra(std::vector<Block>{}), InvalidInput);
    CHECK_THROWS_AS(BlockAlgebra({{0, 1}}), InvalidInput);
    CHECK_THROWS_AS(BlockAlgebra({{1, 2}}, Matrix(2.0 * identity(2))), InvalidInput);
    CHECK_THROWS_AS(BlockAlgebra({{1, 2}}, identity(3)), DimensionError);
  }

  TEST_CASE("verify_quantum_graph examples") {
    CHECK(verify_quantum_graph(from_classical(petersen())).passed());
    CHECK(verify_quantum_graph(complete_quantum_graph(BlockAlgebra::full(2))).passed());

    auto units = from_classical(complete(3)).S().basis();
    units.push_back(matrix_unit(3, 0, 0));
    const QuantumGraph bad(orthonormalize(units), BlockAlgebra::diagonal(3));
    const auto r = verify_quantum_graph(bad);
    CHECK_FALSE(r.passed());
    CHECK_FALSE(r.find("orthogonal_to_commutant")->passed);

    // Not self-adjoint: one direction of an edge only.
    const QuantumGraph oneway(orthonormalize(std::vector<Matrix>{matrix_unit(2, 0, 1)}), BlockAlgebra::diagonal(2));
    CHECK_FALSE(verify_quantum_graph(oneway).find("adjoint_closure")->passed);

    CHECK_THROWS_AS(QuantumGraph(OperatorSubspace(3), BlockAlgebra::diagonal(2)), DimensionError);
  }

  TEST_CASE("from_classical examples") {
    CHECK(from_classical(complete(1)).S().dim() == 0);
    for (std::size_t n = 2; n <= 5; ++n) CHECK(from_classical(complete(n)).S().dim() == n * n - n);
    CHECK(from_classical(cycle(3)).S().dim() == 2 * oracle::cycle_edges(3).size());
    for (const auto& g : {cycle(5), path(4), petersen(), random_graph(7, 0.5, 3)}) {
      const auto q = from_classical(g);
      CHECK(q.S().dim() == 2 * g.edge_count());
      CHECK(verify_quantum_graph(q).passed());
      CHECK(is_subgraph(q, complete_quantum_graph(BlockAlgebra::diagonal(g.vertex_count()))));
    }
  }

  TEST_CASE("complete_quantum_graph examples") {
    for (std::size_t n = 1; n <= 4; ++n)
      CHECK(same_span(complete_quantum_graph(BlockAlgebra::diagonal(n)).S(), from_classical(complete(n)).S()));
    const auto full3 = complete_quantum_graph(BlockAlgebra::full(3));
    CHECK(full3.S().dim() == 8);
    CHECK(contains(full3.S(), matrix_unit(3, 0, 0) - matrix_unit(3, 1, 1)));
    CHECK_FALSE(contains(full3.S(), identity(3)));
    // n² - dim M' with M' = M_2 ⊗ C I_2.
    const auto g = complete_quantum_graph(BlockAlgebra({{2, 2}}));
    CHECK(g.S().dim() == 16 - 4);
    for (const auto& m : algebra_corpus()) CHECK(verify_quantum_graph(complete_quantum_graph(m)).passed());
  }

  TEST_CASE("conjugate_graph") {
    const auto c5 = from_classical(cycle(5));
    CHECK(same_graph(conjugate_graph(c5, identity(5)), c5));

    const Matrix u = oracle::random_unitary(5, 7);
    const auto there = conjugate_graph(c5, u);
    CHECK(verify_quantum_graph(there).passed());
    CHECK(same_graph(conjugate_graph(there, u.adjoint()), c5));

    // Relabelling v -> π(v): with U δ_π(v) = δ_v, U* E_uv U = E_π(u)π(v).
    const std::vector<std::size_t> pi{2, 4, 1, 0, 3};
    Matrix p = Matrix::Zero(5, 5);
    for (std::size_t v = 0; v < 5; ++v) p(v, pi[v]) = 1.0;
    ClassicalGraph relabelled(5);
    for (const auto& [a, b] : oracle::cycle_edges(5)) relabelled.add_edge(pi[a], pi[b]);
    CHECK(same_graph(conjugate_graph(c5, p), from_classical(relabelled)));

    CHECK_THROWS_AS(conjugate_graph(c5, Matrix(2.0 * identity(5))), InvalidInput);
    CHECK_THROWS_AS(conjugate_graph(c5, identity(4)), DimensionError);
  }

  TEST_CASE("is_subgraph examples") {
    CHECK(is_subgraph(from_classical(cycle(5)), from_classical(complete(5))));
    const auto g = from_classical(petersen());
    CHECK(is_subgraph(g, g));
    // K_3 is not inside the path 0-1-2 (the first three vertices of C_5).
    CHECK_FALSE(is_subgraph(from_classical(complete(3)), from_classical(path(3))));
    CHECK_FALSE(is_subgraph(from_classical(complete(5)), from_classical(cycle(5))));
    CHECK_THROWS_AS(is_subgraph(from_classical(complete(2)), complete_quantum_graph(BlockAlgebra::full(2))),
                    InvalidInput);
  }
}
