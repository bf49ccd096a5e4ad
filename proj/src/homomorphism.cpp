#include <algorithm>
#include <string>

#include "qgc/coloring.hpp"

namespace qgc {
namespace {

Matrix vec(const Matrix& x) { return Eigen::Map<const Vector>(x.data(), x.size()); }

// Worst residual of F_i (X ⊗ I) F_j* in `target` over all i, j and X in xs.
double image_residual(const std::vector<Matrix>& xs, const HomomorphismCertificate& cert,
                      const OperatorSubspace& target) {
  if (xs.empty() || cert.kraus.empty()) return 0.0;
  const Matrix anc = Matrix::Identity(cert.ancilla_dim, cert.ancilla_dim);
  const std::size_t m = cert.kraus.size();
  const auto nt = static_cast<Eigen::Index>(cert.target_dim * cert.target_dim);
  Matrix cols(nt, static_cast<Eigen::Index>(m * m));
  double worst = 0.0;
  for (const auto& x : xs) {
    const Matrix xi = kron(x, anc);
    Eigen::Index k = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const Matrix left = cert.kraus[i] * xi;
      for (std::size_t j = 0; j < m; ++j) cols.col(k++) = vec(left * cert.kraus[j].adjoint());
    }
    worst = std::max(worst, target.residuals(cols).maxCoeff());
  }
  return worst;
}

// Isometry C^k -> H onto the first copy of the smallest block, whose range
// projection U (E_00 ⊗ I_k) U* is a minimal projection of M'.
Matrix minimal_commutant_isometry(const BlockAlgebra& m) {
  std::size_t best = 0;
  for (std::size_t r = 1; r < m.blocks().size(); ++r)
    if (m.blocks()[r].size < m.blocks()[best].size) best = r;
  const std::size_t k = m.blocks()[best].size, off = m.block_offset(best);
  Matrix e = Matrix::Zero(m.ambient_dim(), k);
  for (std::size_t p = 0; p < k; ++p) e(off + p, p) = 1.0;
  return m.conjugator() * e;
}

}  // namespace

VerificationReport verify_homomorphism(const QuantumGraph& src, const QuantumGraph& dst,
                                       const HomomorphismCertificate& cert, double tol) {
  if (cert.source_dim != src.ambient_dim() || cert.target_dim != dst.ambient_dim())
    throw DimensionError("homomorphism certificate dimensions do not match the graphs");
  if (cert.ancilla_dim == 0) throw InvalidInput("ancilla dimension must be positive");
  const std::size_t in = cert.source_dim * cert.ancilla_dim;
  for (std::size_t i = 0; i < cert.kraus.size(); ++i)
    if (static_cast<std::size_t>(cert.kraus[i].rows()) != cert.target_dim ||
        static_cast<std::size_t>(cert.kraus[i].cols()) != in)
      throw DimensionError("Kraus operator " + std::to_string(i) + " must be " +
                           std::to_string(cert.target_dim) + "x" + std::to_string(in));

  VerificationReport report("homomorphism (" + std::to_string(cert.kraus.size()) + " Kraus operators, " +
                            std::to_string(cert.source_dim) + " -> " + std::to_string(cert.target_dim) +
                            ", ancilla " + std::to_string(cert.ancilla_dim) + ")");
  Matrix sum = Matrix::Zero(in, in);
  for (const auto& f : cert.kraus) sum += f.adjoint() * f;
  report.add("trace_preserving", (sum - Matrix::Identity(in, in)).norm(), tol, "sum F_i* F_i = I");
  report.add("graph_condition", image_residual(src.S().basis(), cert, dst.S()), tol,
             "F_i (S (x) I) F_j* in S_dst");
  report.add("commutant_condition",
             image_residual(commutant(src.M()).generators(), cert, algebra_basis(commutant(dst.M()))), tol,
             "F_i (M' (x) I) F_j* in M_dst'");
  return report;
}

HomomorphismCertificate sabidussi_witness(const QuantumGraph& g, const QuantumGraph& h, Factor source) {
  const std::size_t ng = g.ambient_dim(), nh = h.ambient_dim();
  if (source == Factor::first) {
    const Matrix v = minimal_commutant_isometry(h.M());
    const auto k = static_cast<std::size_t>(v.cols());
    return {ng, ng * nh, k, {kron(Matrix::Identity(ng, ng), v)}};
  }
  // H ⊗ C^k -> C^k ⊗ H -> H_G ⊗ H.
  const Matrix v = minimal_commutant_isometry(g.M());
  const auto k = static_cast<std::size_t>(v.cols());
  const std::size_t dims[] = {nh, k};
  const std::size_t perm[] = {1, 0};
  return {nh, ng * nh, k, {kron(v, Matrix::Identity(nh, nh)) * permutation_unitary(dims, perm)}};
}

HomomorphismCertificate hedetniemi_witness(const QuantumGraph& g, const QuantumGraph& h, Factor target) {
  const std::size_t ng = g.ambient_dim(), nh = h.ambient_dim();
  HomomorphismCertificate cert{ng * nh, target == Factor::first ? ng : nh, 1, {}};
  const std::size_t other = target == Factor::first ? nh : ng;
  for (std::size_t j = 0; j < other; ++j) {
    Matrix ej = Matrix::Zero(1, other);
    ej(0, j) = 1.0;
    cert.kraus.push_back(target == Factor::first ? kron(Matrix::Identity(ng, ng), ej)
                                                 : kron(ej, Matrix::Identity(nh, nh)));
  }
  return cert;
}

}  // namespace qgc
