#include <algorithm>
#include <string>

#include "qgc/coloring.hpp"
#include "qgc/products.hpp"

namespace qgc {
namespace {

void require_passing(const VerificationReport& report, const char* what) {
  if (!report.passed())
    throw InvalidInput(std::string(what) + ": input certificate does not verify\n" + report.to_string());
}

TransformResult finish(ColoringCertificate cert, VerificationReport report, const char* what,
                       std::vector<std::size_t> colour_map = {}) {
  if (!report.passed())
    throw ConstructionError(std::string(what) + ": constructed certificate failed verification", std::move(report));
  return {std::move(cert), std::move(report), std::move(colour_map)};
}

// A ⊙ B: A on H_1 ⊗ N_1, B on H_2 ⊗ N_2, result on H_1 ⊗ H_2 ⊗ N_1 ⊗ N_2.
Matrix odot(const Matrix& a, std::size_t n1, std::size_t d1, const Matrix& b, std::size_t n2, std::size_t d2) {
  const std::size_t dims[] = {n1, d1, n2, d2};
  const std::size_t perm[] = {0, 2, 1, 3};
  return permute_systems(kron(a, b), dims, perm);
}

}  // namespace

TransformResult reduce_bfold(const QuantumGraph& g, const ColoringCertificate& cert, double tol) {
  if (cert.fold < 2) throw InvalidInput("reduce_bfold needs fold >= 2");
  require_passing(verify_bfold(g, cert, tol), "reduce_bfold");
  const std::size_t n = cert.total_dim();
  const Matrix id = Matrix::Identity(n, n);

  // P~_1 = P_1, P~_a = P_a (I - Σ_{m<a} P~_m); the reduced colouring keeps
  // P'_a = P_a - P~_a, i.e. every colour except each point's first one.
  Matrix covered = Matrix::Zero(n, n);
  ColoringCertificate out{cert.graph_dim, cert.ancilla_dim, cert.fold - 1, {}};
  std::vector<std::size_t> map;
  for (std::size_t a = 0; a < cert.colors(); ++a) {
    const Matrix& p = cert.projections[a];
    const Matrix first = p * (id - covered);
    covered += first;
    Matrix rest = p - first;
    rest = 0.5 * (rest + rest.adjoint()).eval();
    if (rest.norm() <= tol) continue;
    out.projections.push_back(std::move(rest));
    map.push_back(a);
  }
  auto report = verify_bfold(g, out, tol);
  return finish(std::move(out), std::move(report), "reduce_bfold", std::move(map));
}

TransformResult combine_bfold(const QuantumGraph& g, const ColoringCertificate& a,
                              const ColoringCertificate& b, double tol) {
  if (a.graph_dim != b.graph_dim) throw DimensionError("combine_bfold: certificates are for different graphs");
  require_passing(verify_bfold(g, a, tol), "combine_bfold (first)");
  require_passing(verify_bfold(g, b, tol), "combine_bfold (second)");
  const std::size_t n = a.graph_dim, d1 = a.ancilla_dim, d2 = b.ancilla_dim;
  const std::size_t c1 = a.colors(), c2 = b.colors();
  const auto qa = pvm_from_bfold(a, tol);
  const auto qb = pvm_from_bfold(b, tol);

  // Both PVMs are carried to H ⊗ N_1 ⊗ N_2: Q¹ ⊗ I_{N2}, and Q² ⊗ I_{N1}
  // with its ancilla moved to the last leg.
  const std::size_t dims_b[] = {n, d2, d1};
  const std::size_t perm_b[] = {0, 2, 1};
  const Matrix i1 = Matrix::Identity(d1, d1), i2 = Matrix::Identity(d2, d2);

  std::vector<Matrix> eb;
  for (const auto& e : qb) eb.push_back(e.q.norm() > tol ? permute_systems(kron(e.q, i1), dims_b, perm_b) : Matrix());

  std::vector<PvmEntry> pvm;
  for (const auto& ea : qa) {
    if (ea.q.norm() <= tol) continue;
    const Matrix left = kron(ea.q, i2);
    for (std::size_t j = 0; j < qb.size(); ++j) {
      if (eb[j].size() == 0) continue;
      Matrix meet = projection_meet(left, eb[j], tol);
      if (meet.norm() <= tol) continue;
      std::vector<std::size_t> s = ea.subset;
      for (auto x : qb[j].subset) s.push_back(c1 + x);
      pvm.push_back({std::move(s), std::move(meet)});
    }
  }
  ColoringCertificate out = bfold_from_pvm(pvm, c1 + c2, a.fold + b.fold, n, d1 * d2);
  auto report = verify_bfold(g, out, tol);
  return finish(std::move(out), std::move(report), "combine_bfold");
}

TransformResult scale_bfold(const QuantumGraph& g, const ColoringCertificate& cert, std::size_t b, double tol) {
  if (b == 0) throw InvalidInput("scale_bfold needs b >= 1");
  if (cert.fold != 1) throw InvalidInput("scale_bfold expects a fold-1 certificate");
  if (b == 1) {
    auto report = verify_coloring(g, cert, tol);
    require_passing(report, "scale_bfold");
    return {cert, std::move(report), {}};
  }
  TransformResult acc = combine_bfold(g, cert, cert, tol);
  for (std::size_t i = 2; i < b; ++i) acc = combine_bfold(g, acc.certificate, cert, tol);
  return acc;
}

TransformResult lexicographic_coloring(const QuantumGraph& g, const ColoringCertificate& cert_g,
                                       const QuantumGraph& h, const ColoringCertificate& cert_h, double tol) {
  if (cert_h.fold != 1) throw InvalidInput("lexicographic_coloring: the H certificate must have fold 1");
  if (cert_h.colors() != cert_g.fold)
    throw InvalidInput("lexicographic_coloring: H must be coloured with exactly b = " +
                       std::to_string(cert_g.fold) + " colours, got " + std::to_string(cert_h.colors()));
  require_passing(verify_bfold(g, cert_g, tol), "lexicographic_coloring (G)");
  require_passing(verify_coloring(h, cert_h, tol), "lexicographic_coloring (H)");

  const std::size_t ng = cert_g.graph_dim, dg = cert_g.ancilla_dim;
  const std::size_t nh = cert_h.graph_dim, dh = cert_h.ancilla_dim;
  const std::size_t total = ng * nh * dg * dh;
  ColoringCertificate out{ng * nh, dg * dh, 1,
                          std::vector<Matrix>(cert_g.colors(), Matrix::Zero(total, total))};
  // P^L_a = Σ_{T ∋ a} Q_T ⊙ P^H_{ψ(T,a)}, ψ(T,a) = rank of a within sorted T.
  for (const auto& e : pvm_from_bfold(cert_g, tol)) {
    if (e.q.norm() <= tol) continue;
    for (std::size_t rank = 0; rank < e.subset.size(); ++rank)
      out.projections[e.subset[rank]] += odot(e.q, ng, dg, cert_h.projections[rank], nh, dh);
  }
  auto report = verify_coloring(lexicographic(g, h, tol), out, tol);
  return finish(std::move(out), std::move(report), "lexicographic_coloring");
}

TransformResult strong_coloring(const QuantumGraph& g, const ColoringCertificate& cert_g,
                                const QuantumGraph& h, const ColoringCertificate& cert_h, double tol) {
  require_passing(verify_coloring(g, cert_g, tol), "strong_coloring (G)");
  require_passing(verify_coloring(h, cert_h, tol), "strong_coloring (H)");
  const std::size_t ng = cert_g.graph_dim, dg = cert_g.ancilla_dim;
  const std::size_t nh = cert_h.graph_dim, dh = cert_h.ancilla_dim;
  ColoringCertificate out{ng * nh, dg * dh, 1, {}};
  for (const auto& pa : cert_g.projections)
    for (const auto& pb : cert_h.projections) out.projections.push_back(odot(pa, ng, dg, pb, nh, dh));

  VerificationReport report("strong-product colouring (" + std::to_string(out.colors()) + " colours)");
  report.merge(verify_coloring(strong(g, h, tol), out, tol), "strong.");
  report.merge(verify_coloring(cartesian(g, h, tol), out, tol), "cartesian.");
  return finish(std::move(out), std::move(report), "strong_coloring");
}

TransformResult categorical_lift(const QuantumGraph& g, const ColoringCertificate& cert_g,
                                 const QuantumGraph& h, double tol) {
  const bool folded = cert_g.fold > 1;
  require_passing(folded ? verify_bfold(g, cert_g, tol) : verify_coloring(g, cert_g, tol), "categorical_lift");
  const std::size_t ng = cert_g.graph_dim, dg = cert_g.ancilla_dim, nh = h.ambient_dim();
  const std::size_t dims[] = {ng, dg, nh};
  const std::size_t perm[] = {0, 2, 1};
  const Matrix ih = Matrix::Identity(nh, nh);
  ColoringCertificate out{ng * nh, dg, cert_g.fold, {}};
  for (const auto& p : cert_g.projections) out.projections.push_back(permute_systems(kron(p, ih), dims, perm));
  const auto k = categorical(g, h, tol);
  auto report = folded ? verify_bfold(k, out, tol) : verify_coloring(k, out, tol);
  return finish(std::move(out), std::move(report), "categorical_lift");
}

}  // namespace qgc
