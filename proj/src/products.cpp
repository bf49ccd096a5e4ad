#include "qgc/products.hpp"

#include <string>
#include <vector>

namespace qgc {
namespace {

// Vectorized Kronecker products of every pair of basis elements.
Matrix tensor_columns(const OperatorSubspace& a, const OperatorSubspace& b) {
  const std::size_t n = a.ambient_dim() * b.ambient_dim();
  Matrix cols(n * n, static_cast<Eigen::Index>(a.dim() * b.dim()));
  const auto bb = b.basis();
  Eigen::Index k = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Matrix ai = a.basis(i);
    for (const auto& bj : bb) {
      const Matrix x = kron(ai, bj);
      cols.col(k++) = Eigen::Map<const Vector>(x.data(), x.size());
    }
  }
  return cols;
}

void require_valid(const QuantumGraph& g, const char* which, double tol) {
  const auto report = verify_quantum_graph(g, tol);
  if (!report.passed())
    throw InvalidInput(std::string("product: ") + which + " factor is not a quantum graph\n" +
                       report.to_string());
}

struct Pieces {
  OperatorSubspace sg, sh, mgc, mhc;
  std::size_t n;
};

Pieces pieces(const QuantumGraph& g, const QuantumGraph& h, double tol) {
  require_valid(g, "first", tol);
  require_valid(h, "second", tol);
  return {g.S(), h.S(), algebra_basis(commutant(g.M())), algebra_basis(commutant(h.M())),
          g.ambient_dim() * h.ambient_dim()};
}

// Raw summands are stacked and orthonormalized once.
QuantumGraph assemble(const QuantumGraph& g, const QuantumGraph& h, std::vector<Matrix> summands,
                      std::size_t n) {
  Eigen::Index total = 0;
  for (const auto& s : summands) total += s.cols();
  Matrix cols(static_cast<Eigen::Index>(n * n), total);
  Eigen::Index at = 0;
  for (const auto& s : summands) {
    cols.middleCols(at, s.cols()) = s;
    at += s.cols();
  }
  return QuantumGraph(orthonormalize_columns(n, cols), algebra_tensor(g.M(), h.M()));
}

}  // namespace

QuantumGraph cartesian(const QuantumGraph& g, const QuantumGraph& h, double tol) {
  const auto p = pieces(g, h, tol);
  return assemble(g, h, {tensor_columns(p.sg, p.mhc), tensor_columns(p.mgc, p.sh)}, p.n);
}

QuantumGraph categorical(const QuantumGraph& g, const QuantumGraph& h, double tol) {
  const auto p = pieces(g, h, tol);
  return assemble(g, h, {tensor_columns(p.sg, p.sh)}, p.n);
}

QuantumGraph lexicographic(const QuantumGraph& g, const QuantumGraph& h, double tol) {
  const auto p = pieces(g, h, tol);
  return assemble(g, h,
                  {tensor_columns(p.sg, full_matrix_space(h.ambient_dim())), tensor_columns(p.mgc, p.sh)},
                  p.n);
}

QuantumGraph strong(const QuantumGraph& g, const QuantumGraph& h, double tol) {
  const auto p = pieces(g, h, tol);
  return assemble(g, h,
                  {tensor_columns(p.sg, p.mhc), tensor_columns(p.mgc, p.sh), tensor_columns(p.sg, p.sh)},
                  p.n);
}

QuantumGraph product(const QuantumGraph& g, const QuantumGraph& h, ProductKind kind, double tol) {
  switch (kind) {
    case ProductKind::cartesian: return cartesian(g, h, tol);
    case ProductKind::categorical: return categorical(g, h, tol);
    case ProductKind::lexicographic: return lexicographic(g, h, tol);
    case ProductKind::strong: return strong(g, h, tol);
  }
  throw InvalidInput("unknown product kind");
}

Matrix identification_unitary(std::size_t n_g, std::size_t n_h) {
  const std::size_t n = n_g * n_h;
  Matrix u = Matrix::Zero(n, n);
  for (std::size_t v = 0; v < n_g; ++v)
    for (std::size_t w = 0; w < n_h; ++w) {
      Vector dv = Vector::Zero(n_g), dw = Vector::Zero(n_h);
      dv(v) = 1.0;
      dw(w) = 1.0;
      u.col(v * n_h + w) = kron(dv, dw);
    }
  return u;
}

VerificationReport classical_crosscheck(const ClassicalGraph& g, const ClassicalGraph& h,
                                        ProductKind kind, double tol) {
  VerificationReport report("classical cross-check: " + std::string(to_string(kind)) + " product (" +
                            std::to_string(g.vertex_count()) + " x " + std::to_string(h.vertex_count()) +
                            " vertices)");
  const std::size_t ng = g.vertex_count(), nh = h.vertex_count(), n = ng * nh;
  const ClassicalGraph k = classical_product(g, h, kind);
  const Matrix u = identification_unitary(ng, nh);
  report.add("identification_unitary", (u.adjoint() * u - Matrix::Identity(n, n)).norm(), tol);

  // U is a permutation matrix, so U E_xy U* = E_{π(x) π(y)} with π read off
  // its columns; this avoids n^3 work per basis element.
  std::vector<std::size_t> pi(n);
  for (std::size_t x = 0; x < n; ++x) {
    Eigen::Index row = 0;
    u.col(x).cwiseAbs().maxCoeff(&row);
    pi[x] = static_cast<std::size_t>(row);
  }
  std::vector<Matrix> units;
  for (const auto& [x, y] : k.edges()) {
    units.push_back(matrix_unit(n, pi[x], pi[y]));
    units.push_back(matrix_unit(n, pi[y], pi[x]));
  }
  const OperatorSubspace mapped = orthonormalize(units, kRankCutoff, n);

  const QuantumGraph q = product(from_classical(g), from_classical(h), kind, tol);
  report.add("dim_S", std::abs(static_cast<double>(mapped.dim()) - static_cast<double>(q.S().dim())), 0.0,
             std::to_string(mapped.dim()) + " vs " + std::to_string(q.S().dim()));
  report.add("S_mutual_containment", mutual_containment_residual(mapped, q.S()), tol);
  const BlockAlgebra dk = BlockAlgebra::diagonal(n).conjugated_by(u.adjoint());
  report.add_flag("M_identified", same_algebra(dk, q.M(), tol), "U D_K U* vs M_G (x) M_H");
  return report;
}

}  // namespace qgc
