#include <doctest.h>

#include <array>

#include "oracles.hpp"
#include "qgc/products.hpp"

using namespace qgc;

namespace {

oracle::Rule rule_of(ProductKind k) {
  switch (k) {
    case ProductKind::cartesian: return oracle::Rule::cartesian;
    case ProductKind::categorical: return oracle::Rule::categorical;
    case ProductKind::lexicographic: return oracle::Rule::lexicographic;
    case ProductKind::strong: return oracle::Rule::strong;
  }
  return oracle::Rule::cartesian;
}

oracle::EdgeSet edge_set(const ClassicalGraph& g) { return {g.edges().begin(), g.edges().end()}; }

// Conjugation by the flip H⊗G -> G⊗H.
QuantumGraph flipped(const QuantumGraph& k, std::size_t ng, std::size_t nh) {
  const std::array<std::size_t, 2> dims{ng, nh}, swap{1, 0};
  return conjugate_graph(k, permutation_unitary(dims, swap).adjoint());
}

}  // namespace

TEST_SUITE("products") {
  TEST_CASE("K_1 is a unit for cartesian, lexicographic and strong; absorbing for categorical") {
    const auto k1 = from_classical(complete(1));
    for (const auto& hc : {cycle(5), path(3), complete(3)}) {
      const auto h = from_classical(hc);
      CHECK(cartesian(k1, h).S().dim() == h.S().dim());
      CHECK(lexicographic(k1, h).S().dim() == h.S().dim());
      CHECK(strong(k1, h).S().dim() == h.S().dim());
      CHECK(categorical(k1, h).S().dim() == 0);
      CHECK(same_span(cartesian(k1, h).S(), h.S()));
    }
  }

  TEST_CASE("dimension formulas on (C_3, C_3) and (C_3, K_2)") {
    const auto c3 = from_classical(cycle(3)), k2 = from_classical(complete(2));
    CHECK(cartesian(c3, c3).S().dim() == 6 * 3 + 3 * 6);
    CHECK(categorical(c3, k2).S().dim() == 6 * 2);
    CHECK(lexicographic(c3, k2).S().dim() == 6 * 4 + 3 * 2);
    CHECK(is_subgraph(cartesian(c3, k2), strong(c3, k2)));
    CHECK(is_subgraph(categorical(c3, k2), strong(c3, k2)));
  }

  TEST_CASE("dimension formulas hold for quantum inputs") {
    const auto a = complete_quantum_graph(BlockAlgebra::full(2));
    const auto b = complete_quantum_graph(BlockAlgebra({{2, 2}}));
    const auto c = from_classical(path(3));
    for (const auto* g : {&a, &b, &c})
      for (const auto* h : {&a, &b, &c}) {
        const std::size_t sg = g->S().dim(), sh = h->S().dim();
        const std::size_t mg = algebra_basis(commutant(g->M())).dim(), mh = algebra_basis(commutant(h->M())).dim();
        const std::size_t nh = h->ambient_dim();
        CHECK(cartesian(*g, *h).S().dim() == sg * mh + mg * sh);
        CHECK(categorical(*g, *h).S().dim() == sg * sh);
        CHECK(lexicographic(*g, *h).S().dim() == sg * nh * nh + mg * sh);
        CHECK(strong(*g, *h).S().dim() == sg * mh + mg * sh + sg * sh);
      }
  }

  TEST_CASE("products of valid graphs are quantum graphs") {
    const std::vector<QuantumGraph> corpus{from_classical(complete(2)), from_classical(path(3)),
                                           complete_quantum_graph(BlockAlgebra::full(2)),
                                           conjugate_graph(complete_quantum_graph(BlockAlgebra({{1, 1}, {1, 2}})),
                                                           oracle::random_unitary(3, 5))};
    for (const auto& g : corpus)
      for (const auto& h : corpus)
        for (auto kind : kAllProductKinds) CHECK(verify_quantum_graph(product(g, h, kind)).passed());
  }

  TEST_CASE("classical products agree with the definition-based oracle") {
    const std::vector<ClassicalGraph> corpus{complete(1), complete(2), path(3), cycle(4), cycle(5)};
    for (const auto& g : corpus)
      for (const auto& h : corpus)
        for (auto kind : kAllProductKinds) {
          const auto k = classical_product(g, h, kind);
          const auto expect =
              oracle::product_edges(g.vertex_count(), edge_set(g), h.vertex_count(), edge_set(h), rule_of(kind));
          CHECK(edge_set(k) == expect);
          CHECK(product(from_classical(g), from_classical(h), kind).S().dim() == 2 * expect.size());
        }
  }

  TEST_CASE("classical_crosscheck examples") {
    CHECK(classical_crosscheck(cycle(5), complete(2), ProductKind::lexicographic).passed());
    for (auto kind : kAllProductKinds) {
      CHECK(classical_crosscheck(complete(1), cycle(4), kind).passed());
      CHECK(classical_crosscheck(cycle(5), complete(2), kind).passed());
    }
    CHECK(classical_crosscheck(path(3), cycle(4), ProductKind::strong).passed());
    CHECK(is_unitary(identification_unitary(3, 4)));
  }

  TEST_CASE("the literal M_H' reading of the lexicographic product fails the cross-check") {
    // S_G ⊗ M_{n_H} + M_H' ⊗ S_H only typechecks when n_G = n_H; even then it
    // differs from the classical lexicographic product.
    const auto g = from_classical(path(3)), h = from_classical(cycle(3));
    std::vector<Matrix> pieces = subspace_tensor(g.S(), full_matrix_space(3)).basis();
    for (const auto& x : subspace_tensor(algebra_basis(commutant(h.M())), h.S()).basis()) pieces.push_back(x);
    const auto literal = orthonormalize(pieces);
    const auto k = from_classical(classical_product(path(3), cycle(3), ProductKind::lexicographic));
    CHECK(same_span(lexicographic(g, h).S(), k.S()));
    // Differ only through which factor's commutant sits on the left; with
    // both commutants diagonal the spans coincide, so use a non-classical H.
    const auto hq = complete_quantum_graph(BlockAlgebra({{1, 1}, {1, 2}}));
    std::vector<Matrix> p2 = subspace_tensor(g.S(), full_matrix_space(3)).basis();
    for (const auto& x : subspace_tensor(algebra_basis(commutant(hq.M())), hq.S()).basis()) p2.push_back(x);
    const auto literal_q = QuantumGraph(orthonormalize(p2), algebra_tensor(g.M(), hq.M()));
    CHECK(verify_quantum_graph(lexicographic(g, hq)).passed());
    CHECK_FALSE(verify_quantum_graph(literal_q).passed());
    CHECK(literal.dim() > 0);
  }

  TEST_CASE("cartesian, categorical and strong commute up to the flip; lexicographic does not") {
    const auto c5 = from_classical(cycle(5)), k2 = from_classical(complete(2));
    const auto q = complete_quantum_graph(BlockAlgebra::full(2));
    for (const auto& [g, h] : {std::pair{c5, k2}, std::pair{q, k2}, std::pair{c5, q}}) {
      for (auto kind : {ProductKind::cartesian, ProductKind::categorical, ProductKind::strong}) {
        const auto gh = product(g, h, kind);
        const auto hg = product(h, g, kind);
        CHECK(same_graph(flipped(hg, h.ambient_dim(), g.ambient_dim()), gh));
      }
    }
    CHECK(lexicographic(c5, k2).S().dim() != lexicographic(k2, c5).S().dim());
  }

  TEST_CASE("invalid factors are rejected") {
    const QuantumGraph bad(orthonormalize(std::vector<Matrix>{identity(2)}), BlockAlgebra::diagonal(2));
    const auto ok = from_classical(complete(2));
    for (auto kind : kAllProductKinds) {
      CHECK_THROWS_AS(product(bad, ok, kind), InvalidInput);
      CHECK_THROWS_AS(product(ok, bad, kind), InvalidInput);
    }
  }
}
