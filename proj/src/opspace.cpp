#include "qgc/opspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include <Eigen/SVD>
#include <Eigen/Sparse>

namespace qgc {
namespace {

using SparseMatrix = Eigen::SparseMatrix<Complex>;

// Below this fill ratio the sparse kernels beat dense GEMM by a wide margin;
// classical graphs and their products are almost entirely matrix units.
constexpr double kSparseDensity = 0.05;
// Gram matrices this close to I are accepted as orthonormal without an SVD.
constexpr double kOrthonormalFastPath = 1e-12;

double density(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::Index nnz = 0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != Complex(0.0, 0.0)) ++nnz;
  return static_cast<double>(nnz) / static_cast<double>(m.size());
}

Matrix vectorize(const Matrix& x) {
  return Eigen::Map<const Vector>(x.data(), x.size());
}

Matrix unvectorize(const Eigen::Ref<const Vector>& v, std::size_t n) {
  Matrix out(n, n);
  Eigen::Map<Vector>(out.data(), out.size()) = v;
  return out;
}

// Q^H * Y, choosing sparse kernels when both factors are mostly zero.
Matrix coefficients(const Matrix& q, const Matrix& y, bool sparse) {
  if (!sparse) return q.adjoint() * y;
  SparseMatrix qs = q.sparseView();
  SparseMatrix ys = y.sparseView();
  SparseMatrix c = SparseMatrix(qs.adjoint()) * ys;
  return Matrix(c);
}

Matrix expand(const Matrix& q, const Matrix& coeff, bool sparse) {
  if (!sparse) return q * coeff;
  SparseMatrix qs = q.sparseView();
  return qs * coeff;
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a.rows()) +
                         "x" + std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()) + ")");
}

std::size_t checked_product(std::span<const std::size_t> dims) {
  std::size_t total = 1;
  for (auto d : dims) {
    if (d == 0) throw DimensionError("tensor leg of dimension 0");
    total *= d;
  }
  return total;
}

void require_permutation(std::span<const std::size_t> perm, std::size_t legs) {
  if (perm.size() != legs) throw InvalidInput("permutation length does not match leg count");
  std::vector<bool> seen(legs, false);
  for (auto p : perm) {
    if (p >= legs || seen[p]) throw InvalidInput("leg permutation is not a bijection");
    seen[p] = true;
  }
}

// Destination index of every flat index under the leg permutation.
std::vector<std::size_t> permuted_indices(std::span<const std::size_t> dims,
                                          std::span<const std::size_t> perm) {
  const std::size_t legs = dims.size();
  const std::size_t total = checked_product(dims);
  std::vector<std::size_t> out_dims(legs);
  for (std::size_t i = 0; i < legs; ++i) out_dims[perm[i]] = dims[i];
  std::vector<std::size_t> out_stride(legs, 1);
  for (std::size_t i = legs; i-- > 1;) out_stride[i - 1] = out_stride[i] * out_dims[i];

  std::vector<std::size_t> map(total);
  std::vector<std::size_t> digit(legs, 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t dest = 0;
    for (std::size_t i = 0; i < legs; ++i) dest += digit[i] * out_stride[perm[i]];
    map[flat] = dest;
    for (std::size_t i = legs; i-- > 0;) {
      if (++digit[i] < dims[i]) break;
      digit[i] = 0;
    }
  }
  return map;
}

}  // namespace

Complex hs_inner(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "hs_inner");
  return (b.conjugate().cwiseProduct(a)).sum();
}

double hs_norm(const Matrix& a) { return a.norm(); }

Matrix matrix_unit(std::size_t n, std::size_t i, std::size_t j) {
  Matrix e = Matrix::Zero(n, n);
  e(i, j) = 1.0;
  return e;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix identity(std::size_t n) { return Matrix::Identity(n, n); }

bool is_unitary(const Matrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  return (u.adjoint() * u - Matrix::Identity(u.rows(), u.cols())).norm() <= tol;
}

// ---------------------------------------------------------------------------

OperatorSubspace::OperatorSubspace(std::size_t ambient_dim)
    : n_(ambient_dim), q_(Matrix::Zero(ambient_dim * ambient_dim, 0)) {}

OperatorSubspace OperatorSubspace::from_orthonormal_columns(std::size_t ambient_dim,
                                                            Matrix columns) {
  if (static_cast<std::size_t>(columns.rows()) != ambient_dim * ambient_dim)
    throw DimensionError("subspace columns do not match ambient dimension");
  OperatorSubspace s(ambient_dim);
  s.q_ = std::move(columns);
  return s;
}

Matrix OperatorSubspace::basis(std::size_t i) const { return unvectorize(q_.col(i), n_); }

std::vector<Matrix> OperatorSubspace::basis() const {
  std::vector<Matrix> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis(i));
  return out;
}

Matrix OperatorSubspace::project(const Matrix& x) const {
  if (static_cast<std::size_t>(x.rows()) != n_ || static_cast<std::size_t>(x.cols()) != n_)
    throw DimensionError("project: matrix does not match subspace ambient dimension");
  if (empty()) return Matrix::Zero(n_, n_);
  Vector v = vectorize(x);
  Vector p = q_ * (q_.adjoint() * v);
  return unvectorize(p, n_);
}

double OperatorSubspace::residual(const Matrix& x) const {
  if (static_cast<std::size_t>(x.rows()) != n_ || static_cast<std::size_t>(x.cols()) != n_)
    throw DimensionError("contains: matrix does not match subspace ambient dimension");
  return residuals(vectorize(x))(0);
}

Eigen::VectorXd OperatorSubspace::residuals(const Matrix& vecs) const {
  if (static_cast<std::size_t>(vecs.rows()) != n_ * n_)
    throw DimensionError("residuals: vector length does not match ambient dimension");
  Eigen::VectorXd out(vecs.cols());
  if (vecs.cols() == 0) return out;
  Eigen::VectorXd norms = vecs.colwise().norm().transpose();
  if (empty()) {
    for (Eigen::Index j = 0; j < vecs.cols(); ++j) out(j) = norms(j) / std::max(1.0, norms(j));
    return out;
  }
  const bool sparse = density(q_) < kSparseDensity && density(vecs) < kSparseDensity;
  Matrix r = vecs - expand(q_, coefficients(q_, vecs, sparse), sparse);
  for (Eigen::Index j = 0; j < vecs.cols(); ++j)
    out(j) = r.col(j).norm() / std::max(1.0, norms(j));
  return out;
}

// ---------------------------------------------------------------------------

OperatorSubspace orthonormalize_columns(std::size_t ambient_dim, const Matrix& columns,
                                        double cutoff) {
  if (static_cast<std::size_t>(columns.rows()) != ambient_dim * ambient_dim)
    throw DimensionError("orthonormalize: inconsistent matrix dimensions");
  if (cutoff <= 0.0) throw InvalidInput("orthonormalize: tolerance must be positive");
  if (columns.cols() == 0) return OperatorSubspace(ambient_dim);

  Eigen::VectorXd norms = columns.colwise().norm().transpose();
  const double largest = norms.maxCoeff();
  if (largest == 0.0) return OperatorSubspace(ambient_dim);

  std::vector<Eigen::Index> keep;
  for (Eigen::Index j = 0; j < columns.cols(); ++j)
    if (norms(j) > cutoff * largest) keep.push_back(j);
  Matrix a(columns.rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t j = 0; j < keep.size(); ++j) a.col(j) = columns.col(keep[j]);

  if (a.cols() <= a.rows()) {
    const bool sparse = density(a) < kSparseDensity;
    Matrix gram = coefficients(a, a, sparse);
    gram -= Matrix::Identity(a.cols(), a.cols());
    if (gram.cwiseAbs().maxCoeff() <= kOrthonormalFastPath)
      return OperatorSubspace::from_orthonormal_columns(ambient_dim, std::move(a));
  }

  Eigen::BDCSVD<Matrix> svd(a, Eigen::ComputeThinU);
  const auto& sigma = svd.singularValues();
  Eigen::Index rank = 0;
  while (rank < sigma.size() && sigma(rank) > cutoff * sigma(0)) ++rank;
  return OperatorSubspace::from_orthonormal_columns(ambient_dim, svd.matrixU().leftCols(rank));
}

OperatorSubspace orthonormalize(std::span<const Matrix> vectors, double cutoff,
                                std::size_t ambient_dim) {
  if (vectors.empty()) {
    if (ambient_dim == 0) throw DimensionError("orthonormalize: empty input needs a dimension");
    return OperatorSubspace(ambient_dim);
  }
  const auto n = static_cast<std::size_t>(vectors.front().rows());
  if (ambient_dim != 0 && ambient_dim != n)
    throw DimensionError("orthonormalize: matrices do not match requested dimension");
  Matrix cols(n * n, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    const auto& v = vectors[j];
    if (static_cast<std::size_t>(v.rows()) != n || static_cast<std::size_t>(v.cols()) != n)
      throw DimensionError("orthonormalize: matrices must share one square dimension");
    cols.col(j) = vectorize(v);
  }
  return orthonormalize_columns(n, cols, cutoff);
}

bool contains(const OperatorSubspace& s, const Matrix& x, double tol) {
  return s.residual(x) <= tol;
}

double mutual_containment_residual(const OperatorSubspace& a, const OperatorSubspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionError("subspaces live in different matrix spaces");
  double worst = 0.0;
  if (!a.empty()) worst = std::max(worst, b.residuals(a.columns()).maxCoeff());
  if (!b.empty()) worst = std::max(worst, a.residuals(b.columns()).maxCoeff());
  return worst;
}

bool same_span(const OperatorSubspace& a, const OperatorSubspace& b, double tol) {
  return a.dim() == b.dim() && mutual_containment_residual(a, b) <= tol;
}

OperatorSubspace subspace_sum(const OperatorSubspace& a, const OperatorSubspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionError("subspace_sum: ambient dimensions differ");
  Matrix cols(a.columns().rows(), a.columns().cols() + b.columns().cols());
  cols << a.columns(), b.columns();
  return orthonormalize_columns(a.ambient_dim(), cols);
}

OperatorSubspace subspace_tensor(const OperatorSubspace& a, const OperatorSubspace& b) {
  const std::size_t n = a.ambient_dim() * b.ambient_dim();
  if (a.empty() || b.empty()) return OperatorSubspace(n);
  Matrix cols(n * n, static_cast<Eigen::Index>(a.dim() * b.dim()));
  Eigen::Index k = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Matrix ai = a.basis(i);
    for (std::size_t j = 0; j < b.dim(); ++j) cols.col(k++) = vectorize(kron(ai, b.basis(j)));
  }
  return orthonormalize_columns(n, cols);
}

OperatorSubspace subspace_perp(const OperatorSubspace& s) {
  const std::size_t n = s.ambient_dim();
  const auto total = static_cast<Eigen::Index>(n * n);
  if (s.empty()) return full_matrix_space(n);
  const Eigen::Index m = s.columns().cols();
  if (m == total) return OperatorSubspace(n);
  Eigen::HouseholderQR<Matrix> qr(s.columns());
  Matrix tail = Matrix::Zero(total, total - m);
  tail.bottomRows(total - m).setIdentity();
  Matrix complement = qr.householderQ() * tail;
  return OperatorSubspace::from_orthonormal_columns(n, std::move(complement));
}

OperatorSubspace full_matrix_space(std::size_t n) {
  return OperatorSubspace::from_orthonormal_columns(n, Matrix::Identity(n * n, n * n));
}

OperatorSubspace subspace_adjoint(const OperatorSubspace& s) {
  Matrix cols(s.columns().rows(), s.columns().cols());
  for (std::size_t i = 0; i < s.dim(); ++i) cols.col(i) = vectorize(s.basis(i).adjoint());
  return OperatorSubspace::from_orthonormal_columns(s.ambient_dim(), std::move(cols));
}

OperatorSubspace subspace_conjugate(const OperatorSubspace& s, const Matrix& u) {
  if (static_cast<std::size_t>(u.rows()) != s.ambient_dim() || u.rows() != u.cols())
    throw DimensionError("subspace_conjugate: unitary has wrong dimension");
  Matrix cols(s.columns().rows(), s.columns().cols());
  for (std::size_t i = 0; i < s.dim(); ++i)
    cols.col(i) = vectorize(u.adjoint() * s.basis(i) * u);
  return OperatorSubspace::from_orthonormal_columns(s.ambient_dim(), std::move(cols));
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> inverse_permutation(std::span<const std::size_t> perm) {
  require_permutation(perm, perm.size());
  std::vector<std::size_t> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
  return inv;
}

Matrix permute_systems(const Matrix& x, std::span<const std::size_t> dims,
                       std::span<const std::size_t> perm) {
  require_permutation(perm, dims.size());
  const std::size_t total = checked_product(dims);
  if (static_cast<std::size_t>(x.rows()) != total || x.rows() != x.cols())
    throw DimensionError("permute_systems: leg dimensions do not multiply to the matrix size");
  const auto map = permuted_indices(dims, perm);
  Matrix out(x.rows(), x.cols());
  for (std::size_t c = 0; c < total; ++c)
    for (std::size_t r = 0; r < total; ++r) out(map[r], map[c]) = x(r, c);
  return out;
}

Matrix permutation_unitary(std::span<const std::size_t> dims, std::span<const std::size_t> perm) {
  require_permutation(perm, dims.size());
  const auto map = permuted_indices(dims, perm);
  Matrix w = Matrix::Zero(map.size(), map.size());
  for (std::size_t r = 0; r < map.size(); ++r) w(map[r], r) = 1.0;
  return w;
}

Matrix partial_trace(const Matrix& x, std::span<const std::size_t> dims, std::size_t leg) {
  if (leg >= dims.size()) throw InvalidInput("partial_trace: leg out of range");
  const std::size_t total = checked_product(dims);
  if (static_cast<std::size_t>(x.rows()) != total || x.rows() != x.cols())
    throw DimensionError("partial_trace: leg dimensions do not multiply to the matrix size");
  // Move the traced leg last, then sum its diagonal blocks.
  std::vector<std::size_t> perm(dims.size());
  std::size_t pos = 0;
  for (std::size_t i = 0; i < dims.size(); ++i)
    if (i != leg) perm[i] = pos++;
  perm[leg] = dims.size() - 1;
  const Matrix y = permute_systems(x, dims, perm);
  const std::size_t d = dims[leg];
  const std::size_t rest = total / d;
  Matrix out = Matrix::Zero(rest, rest);
  for (std::size_t i = 0; i < rest; ++i)
    for (std::size_t j = 0; j < rest; ++j)
      for (std::size_t k = 0; k < d; ++k) out(i, j) += y(i * d + k, j * d + k);
  return out;
}

double projection_residual(const Matrix& p) {
  if (p.rows() != p.cols()) return std::numeric_limits<double>::infinity();
  return std::max((p * p - p).norm(), (p - p.adjoint()).norm());
}

bool is_projection(const Matrix& p, double tol) { return projection_residual(p) <= tol; }

Matrix projection_meet(const Matrix& p, const Matrix& q, double tol) {
  require_same_shape(p, q, "projection_meet");
  if (!is_projection(p, tol) || !is_projection(q, tol))
    throw InvalidInput("projection_meet: arguments must be orthogonal projections");
  Matrix s = p + q;
  s = 0.5 * (s + s.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<Matrix> eig(s);
  const auto& values = eig.eigenvalues();
  Matrix meet = Matrix::Zero(p.rows(), p.cols());
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (std::abs(values(i) - 2.0) <= tol) {
      const auto v = eig.eigenvectors().col(i);
      meet += v * v.adjoint();
    }
  }
  return meet;
}

}  // namespace qgc
