#pragma once

// Dense complex matrices and Hilbert-Schmidt subspaces of M_n.
//
// Matrices are Eigen::MatrixXcd. A subspace stores its orthonormal basis as
// the columns of an (n*n) x dim matrix of column-major vectorizations, so
// projections and batched membership tests reduce to matrix products.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qgc/report.hpp"

namespace qgc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kDefaultTol = 1e-9;
/// Singular values below kRankCutoff * (largest) are treated as zero.
inline constexpr double kRankCutoff = 1e-10;

/// Tr(B* A), unnormalized trace.
Complex hs_inner(const Matrix& a, const Matrix& b);
double hs_norm(const Matrix& a);

/// Matrix unit E_ij in M_n (0-based).
Matrix matrix_unit(std::size_t n, std::size_t i, std::size_t j);
Matrix kron(const Matrix& a, const Matrix& b);
Matrix identity(std::size_t n);

bool is_unitary(const Matrix& u, double tol = kDefaultTol);

class OperatorSubspace {
 public:
  /// The zero subspace of M_n.
  explicit OperatorSubspace(std::size_t ambient_dim = 1);

  /// Wraps columns that the caller guarantees are orthonormal
  /// vectorizations of n x n matrices.
  static OperatorSubspace from_orthonormal_columns(std::size_t ambient_dim, Matrix columns);

  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return static_cast<std::size_t>(q_.cols()); }
  bool empty() const { return dim() == 0; }

  Matrix basis(std::size_t i) const;
  std::vector<Matrix> basis() const;
  /// The (n*n) x dim matrix whose columns are the vectorized basis.
  const Matrix& columns() const { return q_; }

  /// Orthogonal projection of x onto the subspace.
  Matrix project(const Matrix& x) const;

  /// Relative residual ||x - Proj(x)|| / max(1, ||x||).
  double residual(const Matrix& x) const;
  /// Relative residuals of every column of `vecs` (each a vectorized n x n
  /// matrix), computed in one batched product.
  Eigen::VectorXd residuals(const Matrix& vecs) const;

 private:
  std::size_t n_;
  Matrix q_;
};

/// Orthonormal basis of span(vectors), via SVD of the stacked
/// vectorizations. Directions with singular value <= cutoff * (largest
/// input norm) are dropped. Empty input gives the zero subspace of M_n
/// where n is `ambient_dim` (required only when vectors is empty).
OperatorSubspace orthonormalize(std::span<const Matrix> vectors, double cutoff = kRankCutoff,
                                std::size_t ambient_dim = 0);
/// Same, from already-vectorized columns.
OperatorSubspace orthonormalize_columns(std::size_t ambient_dim, const Matrix& columns,
                                        double cutoff = kRankCutoff);

/// ||x - Proj_S(x)|| <= tol * max(1, ||x||).
bool contains(const OperatorSubspace& s, const Matrix& x, double tol = kDefaultTol);
/// Both subspaces contain each other's basis; returns the worst residual.
double mutual_containment_residual(const OperatorSubspace& a, const OperatorSubspace& b);
bool same_span(const OperatorSubspace& a, const OperatorSubspace& b, double tol = kDefaultTol);

OperatorSubspace subspace_sum(const OperatorSubspace& a, const OperatorSubspace& b);
/// span{A (x) B}; ambient dimension n_a * n_b.
OperatorSubspace subspace_tensor(const OperatorSubspace& a, const OperatorSubspace& b);
/// Orthogonal complement inside the full matrix space M_n.
OperatorSubspace subspace_perp(const OperatorSubspace& s);
OperatorSubspace full_matrix_space(std::size_t n);
/// S* = {X* : X in S}.
OperatorSubspace subspace_adjoint(const OperatorSubspace& s);
/// {U* X U : X in S}.
OperatorSubspace subspace_conjugate(const OperatorSubspace& s, const Matrix& u);

/// Reorders tensor legs: leg i of x (dimension dims[i]) lands in position
/// perm[i] of the result. Equivalent to W x W* for the leg-shuffle
/// unitary W = permutation_unitary(dims, perm).
Matrix permute_systems(const Matrix& x, std::span<const std::size_t> dims,
                       std::span<const std::size_t> perm);
Matrix permutation_unitary(std::span<const std::size_t> dims, std::span<const std::size_t> perm);
std::vector<std::size_t> inverse_permutation(std::span<const std::size_t> perm);

/// Partial trace over leg `leg` of a tensor product with leg dimensions dims.
Matrix partial_trace(const Matrix& x, std::span<const std::size_t> dims, std::size_t leg);

bool is_projection(const Matrix& p, double tol = kDefaultTol);
double projection_residual(const Matrix& p);

/// Projection onto ran(P) ∩ ran(Q): the eigenvalue-2 spectral projection
/// of P + Q. Throws InvalidInput when an argument is not a projection.
Matrix projection_meet(const Matrix& p, const Matrix& q, double tol = kDefaultTol);

}  // namespace qgc
