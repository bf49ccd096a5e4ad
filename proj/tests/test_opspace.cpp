#include <doctest.h>

#include <array>

#include "oracles.hpp"
#include "qgc/opspace.hpp"

using namespace qgc;

namespace {

Matrix m2(Complex a, Complex b, Complex c, Complex d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

TEST_SUITE("opspace") {
  TEST_CASE("hs_inner examples") {
    CHECK(hs_inner(matrix_unit(3, 0, 0), matrix_unit(3, 0, 0)) == Complex(1.0));
    CHECK(hs_inner(matrix_unit(3, 0, 0), matrix_unit(3, 1, 1)) == Complex(0.0));
    CHECK(hs_inner(identity(4), identity(4)) == Complex(4.0));
    CHECK_THROWS_AS(hs_inner(identity(2), identity(3)), DimensionError);
  }

  TEST_CASE("hs_inner is conjugate symmetric and additive") {
    for (unsigned s = 0; s < 5; ++s) {
      const Matrix a = oracle::random_matrix(3, s), b = oracle::random_matrix(3, s + 10),
                   c = oracle::random_matrix(3, s + 20);
      CHECK(std::abs(hs_inner(a, b) - std::conj(hs_inner(b, a))) < 1e-12);
      const Complex lhs = hs_inner(a + b, c), rhs = hs_inner(a, c) + hs_inner(b, c);
      CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
    }
  }

  TEST_CASE("orthonormalize examples") {
    const std::vector<Matrix> dup{identity(2), identity(2)};
    const auto s = orthonormalize(dup);
    CHECK(s.dim() == 1);
    CHECK(contains(s, identity(2)));

    const std::vector<Matrix> two{matrix_unit(2, 0, 0), matrix_unit(2, 0, 1)};
    CHECK(orthonormalize(two).dim() == 2);

    // C_3: 2|E| ordered edges by enumeration.
    std::vector<Matrix> units;
    for (const auto& [u, v] : oracle::cycle_edges(3)) {
      units.push_back(matrix_unit(3, u, v));
      units.push_back(matrix_unit(3, v, u));
    }
    CHECK(orthonormalize(units).dim() == 2 * oracle::cycle_edges(3).size());

    CHECK(orthonormalize(std::vector<Matrix>{}, kRankCutoff, 3).dim() == 0);
    CHECK_THROWS_AS(orthonormalize(std::vector<Matrix>{identity(2), identity(3)}), DimensionError);
    CHECK_THROWS_AS(orthonormalize(two, 0.0), InvalidInput);
  }

  TEST_CASE("orthonormalize basis is orthonormal, idempotent and spans its input") {
    std::vector<Matrix> v;
    for (unsigned s = 0; s < 4; ++s) v.push_back(oracle::random_matrix(3, s));
    v.push_back(v[0] + 2.0 * v[1]);  // dependent
    const auto s = orthonormalize(v);
    CHECK(s.dim() == 4);
    const Matrix gram = s.columns().adjoint() * s.columns();
    CHECK((gram - Matrix::Identity(4, 4)).norm() < 1e-12);
    for (const auto& x : v) CHECK(contains(s, x));
    const auto again = orthonormalize(s.basis());
    CHECK(same_span(s, again));
    for (const auto& b : s.basis()) CHECK(contains(s, b));
  }

  TEST_CASE("contains examples") {
    const auto s = orthonormalize(std::vector<Matrix>{matrix_unit(2, 0, 1)});
    CHECK(contains(s, matrix_unit(2, 0, 1)));
    CHECK_FALSE(contains(s, matrix_unit(2, 1, 0)));
    CHECK(contains(OperatorSubspace(2), Matrix::Zero(2, 2)));
    CHECK_THROWS_AS(contains(s, identity(3)), DimensionError);
  }

  TEST_CASE("sum, tensor and perp") {
    std::vector<Matrix> diag;
    for (std::size_t i = 0; i < 4; ++i) diag.push_back(matrix_unit(4, i, i));
    const auto d = orthonormalize(diag);
    const auto off = subspace_perp(d);
    CHECK(off.dim() == 12);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        if (i != j) CHECK(contains(off, matrix_unit(4, i, j)));
    CHECK(subspace_perp(full_matrix_space(3)).dim() == 0);

    const auto e11 = orthonormalize(std::vector<Matrix>{matrix_unit(2, 0, 0)});
    const auto t = subspace_tensor(e11, e11);
    CHECK(t.dim() == 1);
    CHECK(contains(t, kron(matrix_unit(2, 0, 0), matrix_unit(2, 0, 0))));

    const auto a = orthonormalize(std::vector<Matrix>{oracle::random_matrix(2, 1), oracle::random_matrix(2, 2)});
    const auto b = orthonormalize(std::vector<Matrix>{oracle::random_matrix(3, 3)});
    CHECK(subspace_tensor(a, b).dim() == a.dim() * b.dim());
    CHECK(subspace_sum(a, subspace_perp(a)).dim() == 4);
    CHECK_THROWS_AS(subspace_sum(a, b), DimensionError);
  }

  TEST_CASE("perp is an involution") {
    for (unsigned s = 0; s < 3; ++s) {
      std::vector<Matrix> v{oracle::random_matrix(3, s), oracle::random_matrix(3, s + 7)};
      const auto x = orthonormalize(v);
      const auto p = subspace_perp(x);
      CHECK(x.dim() + p.dim() == 9);
      CHECK(same_span(subspace_perp(p), x));
      CHECK((x.columns().adjoint() * p.columns()).cwiseAbs().maxCoeff() < 1e-12);
    }
  }

  TEST_CASE("permute_systems examples") {
    const Matrix a = oracle::random_matrix(2, 1), b = oracle::random_matrix(3, 2);
    const std::array<std::size_t, 2> dims{2, 3}, swap{1, 0};
    CHECK((permute_systems(kron(a, b), dims, swap) - kron(b, a)).norm() < 1e-14);
    const std::array<std::size_t, 2> id{0, 1};
    CHECK((permute_systems(kron(a, b), dims, id) - kron(a, b)).norm() == 0.0);

    // cycle 1->2->3->1: leg i goes to position perm[i].
    const Matrix x = kron(kron(matrix_unit(2, 0, 0), matrix_unit(2, 1, 1)), matrix_unit(2, 0, 1));
    const std::array<std::size_t, 3> d3{2, 2, 2}, cyc{1, 2, 0};
    const Matrix expect = kron(kron(matrix_unit(2, 0, 1), matrix_unit(2, 0, 0)), matrix_unit(2, 1, 1));
    CHECK((permute_systems(x, d3, cyc) - expect).norm() == 0.0);

    const std::array<std::size_t, 2> bad{2, 2};
    CHECK_THROWS_AS(permute_systems(kron(a, b), bad, swap), DimensionError);
  }

  TEST_CASE("permute_systems round trip and unitary form") {
    const std::array<std::size_t, 3> dims{2, 3, 2}, perm{2, 0, 1};
    const auto inv = inverse_permutation(perm);
    std::array<std::size_t, 3> dims2{};
    for (std::size_t i = 0; i < 3; ++i) dims2[perm[i]] = dims[i];
    const Matrix x = oracle::random_matrix(12, 5);
    const Matrix y = permute_systems(x, dims, perm);
    CHECK((permute_systems(y, dims2, inv) - x).norm() < 1e-14);
    const Matrix w = permutation_unitary(dims, perm);
    CHECK(is_unitary(w));
    CHECK((w * x * w.adjoint() - y).norm() < 1e-12);
  }

  TEST_CASE("partial_trace") {
    const Matrix a = oracle::random_matrix(2, 1), b = oracle::random_matrix(3, 2);
    const std::array<std::size_t, 2> dims{2, 3};
    CHECK((partial_trace(kron(a, b), dims, 1) - b.trace() * a).norm() < 1e-12);
    CHECK((partial_trace(kron(a, b), dims, 0) - a.trace() * b).norm() < 1e-12);
  }

  TEST_CASE("is_projection examples") {
    CHECK(is_projection(identity(3)));
    CHECK_FALSE(is_projection(matrix_unit(2, 0, 1)));
    CHECK(is_projection(m2(0.5, 0.5, 0.5, 0.5)));
  }

  TEST_CASE("projection_meet examples") {
    Matrix p = Matrix::Zero(3, 3), q = Matrix::Zero(3, 3), r = Matrix::Zero(3, 3);
    p.diagonal() << 1, 1, 0;
    q.diagonal() << 0, 1, 1;
    r.diagonal() << 0, 1, 0;
    CHECK((projection_meet(p, q) - r).norm() < 1e-12);
    CHECK((projection_meet(p, q) - p * q).norm() < 1e-12);

    const Matrix line = m2(0.5, 0.5, 0.5, 0.5);
    CHECK((projection_meet(line, line) - line).norm() < 1e-12);
    CHECK(projection_meet(line, matrix_unit(2, 0, 0)).norm() < 1e-12);
    CHECK_THROWS_AS(projection_meet(matrix_unit(2, 0, 1), line), InvalidInput);
  }

  TEST_CASE("projection_meet lies below both arguments") {
    const Matrix u = oracle::random_unitary(4, 3);
    Matrix p = Matrix::Zero(4, 4), q = Matrix::Zero(4, 4);
    p.diagonal() << 1, 1, 1, 0;
    q.diagonal() << 0, 1, 1, 1;
    p = u * p * u.adjoint();
    q = u * q * u.adjoint();
    const Matrix m = projection_meet(p, q);
    CHECK(is_projection(m));
    CHECK(std::abs(m.trace().real() - 2.0) < 1e-9);
    CHECK(((identity(4) - p) * m).norm() < 1e-9);
    CHECK(((identity(4) - q) * m).norm() < 1e-9);
  }
}
