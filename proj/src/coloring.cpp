#include "qgc/coloring.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace qgc {
namespace {

// Above this many b-subsets the derived PVM checks are refused rather than
// left to run for minutes.
constexpr std::size_t kMaxSubsets = 5000;

Matrix vec(const Matrix& x) { return Eigen::Map<const Vector>(x.data(), x.size()); }

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::vector<std::size_t>> checked_subsets(std::size_t c, std::size_t b) {
  if (binomial(c, b) > kMaxSubsets)
    throw SizeGuardError("instance too large: " + std::to_string(binomial(c, b)) + " colour subsets");
  return subsets(c, b);
}

// Worst ||P_a (X ⊗ I) P_a|| over colours and basis elements of S.
double edge_residual(const QuantumGraph& g, const ColoringCertificate& cert) {
  double worst = 0.0;
  const Matrix id = Matrix::Identity(cert.ancilla_dim, cert.ancilla_dim);
  for (const auto& x : g.S().basis()) {
    const Matrix xi = kron(x, id);
    for (const auto& p : cert.projections) worst = std::max(worst, (p * xi * p).norm());
  }
  return worst;
}

double membership_residual(const QuantumGraph& g, const ColoringCertificate& cert) {
  if (cert.projections.empty()) return 0.0;
  const OperatorSubspace alg =
      algebra_basis(algebra_tensor(g.M(), BlockAlgebra::full(cert.ancilla_dim)));
  Matrix cols(static_cast<Eigen::Index>(cert.total_dim() * cert.total_dim()),
              static_cast<Eigen::Index>(cert.colors()));
  for (std::size_t a = 0; a < cert.colors(); ++a) cols.col(a) = vec(cert.projections[a]);
  return alg.residuals(cols).maxCoeff();
}

double max_projection_residual(const std::vector<Matrix>& ps) {
  double worst = 0.0;
  for (const auto& p : ps) worst = std::max(worst, projection_residual(p));
  return worst;
}

double commutation_residual(const std::vector<Matrix>& ps) {
  double worst = 0.0;
  for (std::size_t a = 0; a < ps.size(); ++a)
    for (std::size_t b = a + 1; b < ps.size(); ++b)
      worst = std::max(worst, (ps[a] * ps[b] - ps[b] * ps[a]).norm());
  return worst;
}

Matrix ordered_product(const ColoringCertificate& cert, const std::vector<std::size_t>& subset) {
  Matrix q = Matrix::Identity(cert.total_dim(), cert.total_dim());
  for (auto a : subset) q = q * cert.projections[a];
  return q;
}

std::string describe(const ColoringCertificate& cert) {
  return std::to_string(cert.fold) + "-fold " + std::to_string(cert.colors()) + "-colouring, n = " +
         std::to_string(cert.graph_dim) + ", ancilla " + std::to_string(cert.ancilla_dim);
}

}  // namespace

void check_certificate_shape(const QuantumGraph& g, const ColoringCertificate& cert) {
  if (cert.graph_dim != g.ambient_dim())
    throw DimensionError("certificate is for dimension " + std::to_string(cert.graph_dim) +
                         " but the graph has dimension " + std::to_string(g.ambient_dim()));
  if (cert.ancilla_dim == 0 || cert.fold == 0) throw InvalidInput("ancilla dimension and fold must be positive");
  const auto n = static_cast<Eigen::Index>(cert.total_dim());
  for (std::size_t a = 0; a < cert.colors(); ++a)
    if (cert.projections[a].rows() != n || cert.projections[a].cols() != n)
      throw DimensionError("projection " + std::to_string(a) + " is not " + std::to_string(n) + "x" +
                           std::to_string(n));
}

VerificationReport verify_coloring(const QuantumGraph& g, const ColoringCertificate& cert, double tol) {
  check_certificate_shape(g, cert);
  if (cert.fold != 1) throw InvalidInput("verify_coloring expects a fold-1 certificate; use verify_bfold");
  VerificationReport report("colouring certificate (" + describe(cert) + ")");
  const std::size_t n = cert.total_dim();
  report.add("projections", max_projection_residual(cert.projections), tol);
  report.add("algebra_membership", membership_residual(g, cert), tol, "P_a in M (x) M_d");
  Matrix sum = Matrix::Zero(n, n);
  for (const auto& p : cert.projections) sum += p;
  report.add("partition_of_identity", (sum - Matrix::Identity(n, n)).norm(), tol, "sum P_a = I");
  report.add("edge_condition", edge_residual(g, cert), tol, "P_a (X (x) I) P_a = 0");
  return report;
}

VerificationReport verify_bfold(const QuantumGraph& g, const ColoringCertificate& cert, double tol) {
  check_certificate_shape(g, cert);
  VerificationReport report("b-fold colouring certificate (" + describe(cert) + ")");
  const std::size_t n = cert.total_dim();
  const Matrix id = Matrix::Identity(n, n);
  const std::size_t b = cert.fold, c = cert.colors();

  report.add("projections", max_projection_residual(cert.projections), tol);
  report.add("algebra_membership", membership_residual(g, cert), tol, "P_a in M (x) M_d");
  report.add("commutation", commutation_residual(cert.projections), tol, "[P_a, P_b] = 0");
  report.add("edge_condition", edge_residual(g, cert), tol, "P_a (X (x) I) P_a = 0");

  Matrix sum_p = Matrix::Zero(n, n);
  for (const auto& p : cert.projections) sum_p += p;
  report.add("sum_equals_bI", (sum_p - static_cast<double>(b) * id).norm(), tol, "sum P_a = b I");

  if (b > c) {
    report.add_flag("bfold_partition", false, "fold exceeds the number of colours");
    return report;
  }

  // Derived PVM Q_T = Π_{a ∈ T} P_a.
  std::vector<std::vector<std::size_t>> ts = checked_subsets(c, b);
  std::vector<Matrix> qs;
  qs.reserve(ts.size());
  Matrix sum_q = Matrix::Zero(n, n);
  for (const auto& t : ts) {
    qs.push_back(ordered_product(cert, t));
    sum_q += qs.back();
  }
  report.add("bfold_partition", (sum_q - id).norm(), tol, "sum_T P_a1...P_ab = I");

  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < qs.size(); ++i)
    if (qs[i].norm() > tol) live.push_back(i);

  double q_proj = 0.0, q_orth = 0.0, q_edge = 0.0;
  for (auto i : live) q_proj = std::max(q_proj, projection_residual(qs[i]));
  for (std::size_t x = 0; x < live.size(); ++x)
    for (std::size_t y = x + 1; y < live.size(); ++y)
      q_orth = std::max(q_orth, (qs[live[x]] * qs[live[y]]).norm());
  const Matrix anc = Matrix::Identity(cert.ancilla_dim, cert.ancilla_dim);
  for (const auto& xs : g.S().basis()) {
    const Matrix xi = kron(xs, anc);
    for (auto i : live) {
      const Matrix left = qs[i] * xi;
      for (auto j : live) {
        std::vector<std::size_t> common;
        std::set_intersection(ts[i].begin(), ts[i].end(), ts[j].begin(), ts[j].end(),
                              std::back_inserter(common));
        if (!common.empty()) q_edge = std::max(q_edge, (left * qs[j]).norm());
      }
    }
  }
  report.add("pvm_projections", q_proj, tol, "Q_T projections");
  report.add("pvm_orthogonal", q_orth, tol, "Q_S Q_T = 0 for S != T");
  report.add("pvm_edge_condition", q_edge, tol, "Q_S (X (x) I) Q_T = 0 when S, T meet");

  double excess = 0.0;
  if (b + 1 <= c) {
    const auto larger = checked_subsets(c, b + 1);
    for (const auto& t : larger) excess = std::max(excess, ordered_product(cert, t).norm());
  }
  report.add("b_plus_one_products", excess, tol, "products of b+1 distinct P_a vanish");
  return report;
}

std::vector<PvmEntry> pvm_from_bfold(const ColoringCertificate& cert, double tol) {
  if (const double r = commutation_residual(cert.projections); r > tol)
    throw InvalidInput("pvm_from_bfold: projections do not commute (residual " + std::to_string(r) + ")");
  std::vector<PvmEntry> out;
  for (auto& t : checked_subsets(cert.colors(), cert.fold)) {
    Matrix q = ordered_product(cert, t);
    out.push_back({std::move(t), std::move(q)});
  }
  return out;
}

ColoringCertificate bfold_from_pvm(const std::vector<PvmEntry>& pvm, std::size_t colors, std::size_t fold,
                                   std::size_t graph_dim, std::size_t ancilla_dim) {
  const std::size_t n = graph_dim * ancilla_dim;
  ColoringCertificate cert{graph_dim, ancilla_dim, fold, std::vector<Matrix>(colors, Matrix::Zero(n, n))};
  for (const auto& e : pvm) {
    if (e.subset.size() != fold) throw InvalidInput("bfold_from_pvm: subset size differs from the fold");
    if (static_cast<std::size_t>(e.q.rows()) != n || e.q.rows() != e.q.cols())
      throw DimensionError("bfold_from_pvm: Q_T has the wrong dimension");
    for (auto a : e.subset) {
      if (a >= colors) throw InvalidInput("bfold_from_pvm: colour index out of range");
      cert.projections[a] += e.q;
    }
  }
  return cert;
}

ColoringCertificate conjugate_certificate(const ColoringCertificate& cert, const Matrix& u) {
  if (static_cast<std::size_t>(u.rows()) != cert.graph_dim || u.rows() != u.cols())
    throw DimensionError("conjugate_certificate: unitary has the wrong dimension");
  const Matrix w = kron(u, Matrix::Identity(cert.ancilla_dim, cert.ancilla_dim));
  ColoringCertificate out = cert;
  for (auto& p : out.projections) p = w.adjoint() * p * w;
  return out;
}

ColoringCertificate bell_coloring(std::size_t n) {
  if (n == 0) throw InvalidInput("bell_coloring needs n >= 1");
  const double s = 1.0 / std::sqrt(static_cast<double>(n));
  Vector omega = Vector::Zero(n * n);
  for (std::size_t v = 0; v < n; ++v) omega(v * n + v) = s;

  Matrix shift = Matrix::Zero(n, n), phase = Matrix::Zero(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    shift((v + 1) % n, v) = 1.0;
    phase(v, v) = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(v) / static_cast<double>(n));
  }
  ColoringCertificate cert{n, n, 1, {}};
  Matrix xj = Matrix::Identity(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Matrix zk = Matrix::Identity(n, n);
    for (std::size_t k = 0; k < n; ++k) {
      const Vector psi = kron(Matrix::Identity(n, n), xj * zk) * omega;
      cert.projections.push_back(psi * psi.adjoint());
      zk = zk * phase;
    }
    xj = xj * shift;
  }
  return cert;
}

VerificationReport complete_lower_bound_extract(const QuantumGraph& g, const ColoringCertificate& cert,
                                                double tol) {
  const auto& blocks = g.M().blocks();
  if (blocks.size() != 1)
    throw InvalidInput("lower-bound extraction needs a single-block algebra C I_d (x) M_k");
  check_certificate_shape(g, cert);
  const std::size_t d = blocks[0].multiplicity, k = blocks[0].size, b = cert.fold;
  VerificationReport report("lower-bound extraction (d = " + std::to_string(d) + ", k = " + std::to_string(k) +
                            ", b = " + std::to_string(b) + ", c = " + std::to_string(cert.colors()) + ")");

  const Matrix w = kron(g.M().conjugator(), Matrix::Identity(cert.ancilla_dim, cert.ancilla_dim));
  const std::size_t dims[] = {cert.graph_dim, cert.ancilla_dim};
  const double scale = static_cast<double>(k) / static_cast<double>(d);
  const std::size_t na = cert.ancilla_dim;

  double idem = 0.0, adj = 0.0;
  Matrix sum = Matrix::Zero(na, na);
  for (const auto& p : cert.projections) {
    const Matrix std_frame = w.adjoint() * p * w;
    const Matrix r = scale * partial_trace(std_frame, dims, 0);
    idem = std::max(idem, (r * r - r).norm());
    adj = std::max(adj, (r - r.adjoint()).norm());
    sum += r;
  }
  const double target = static_cast<double>(b * k * k);
  report.add("R_idempotent", idem, tol, "R_a^2 = R_a");
  report.add("R_self_adjoint", adj, tol, "R_a* = R_a");
  report.add("R_sum", (sum - target * Matrix::Identity(na, na)).norm(), tol,
             "sum R_a = " + std::to_string(b * k * k) + " I");
  report.add_flag("colour_count", cert.colors() >= b * k * k,
                  std::to_string(cert.colors()) + " >= b dim M = " + std::to_string(b * k * k));
  return report;
}

// ---------------------------------------------------------------------------

ColoringCertificate to_local_cert(const ClassicalGraph& g, const BFoldAssignment& w) {
  if (!is_valid_assignment(g, w)) throw InvalidInput("to_local_cert: assignment is not a valid b-fold colouring");
  const std::size_t n = g.vertex_count();
  ColoringCertificate cert{n, 1, w.fold, std::vector<Matrix>(w.palette_size, Matrix::Zero(n, n))};
  for (std::size_t v = 0; v < n; ++v)
    for (auto a : w.colours[v]) cert.projections[a](v, v) = 1.0;
  return cert;
}

BFoldAssignment from_local_cert(const ClassicalGraph& g, const ColoringCertificate& cert, double tol) {
  const std::size_t n = g.vertex_count();
  if (cert.ancilla_dim != 1) throw InvalidInput("from_local_cert: certificate has a quantum ancilla");
  if (cert.graph_dim != n) throw DimensionError("from_local_cert: certificate dimension differs from the graph");
  BFoldAssignment w{cert.colors(), cert.fold, std::vector<std::vector<std::size_t>>(n)};
  for (std::size_t a = 0; a < cert.colors(); ++a) {
    const Matrix& p = cert.projections[a];
    if (static_cast<std::size_t>(p.rows()) != n || p.rows() != p.cols())
      throw DimensionError("from_local_cert: projection has the wrong dimension");
    Matrix off = p;
    off.diagonal().setZero();
    if (off.norm() > tol) throw InvalidInput("from_local_cert: projection " + std::to_string(a) + " is not diagonal");
    for (std::size_t v = 0; v < n; ++v) {
      const Complex x = p(v, v);
      if (std::abs(x) > tol && std::abs(x - 1.0) > tol)
        throw InvalidInput("from_local_cert: diagonal entry is neither 0 nor 1");
      if (std::abs(x - 1.0) <= tol) w.colours[v].push_back(a);
    }
  }
  if (!is_valid_assignment(g, w)) throw InvalidInput("from_local_cert: recovered assignment is not a valid colouring");
  return w;
}

}  // namespace qgc
