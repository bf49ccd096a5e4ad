#pragma once

// Quantum graphs (S, M, B(C^n)) with M held in standard block form.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qgc/opspace.hpp"

namespace qgc {

/// One summand C·I_multiplicity ⊗ M_size of a standard-form algebra.
struct Block {
  std::size_t multiplicity = 1;
  std::size_t size = 1;
  friend bool operator==(const Block&, const Block&) = default;
};

/// U·(⊕_r C·I_{n_r} ⊗ M_{k_r})·U*. Block r occupies a contiguous index
/// range; inside it the multiplicity leg is the slow index.
class BlockAlgebra {
 public:
  /// Throws InvalidInput for an empty block list, a zero block, or a
  /// non-unitary conjugator.
  explicit BlockAlgebra(std::vector<Block> blocks, std::optional<Matrix> conjugator = {},
                        double tol = kDefaultTol);

  /// D_n: n blocks of (1,1).
  static BlockAlgebra diagonal(std::size_t n);
  /// M_n: one block (1,n).
  static BlockAlgebra full(std::size_t n);
  /// C·I_n: one block (n,1).
  static BlockAlgebra scalars(std::size_t n);

  std::size_t ambient_dim() const { return n_; }
  /// Σ_r k_r².
  std::size_t algebra_dim() const;
  const std::vector<Block>& blocks() const { return blocks_; }
  /// Identity when constructed without one.
  const Matrix& conjugator() const { return u_; }
  bool has_identity_conjugator() const;
  /// First index of block r in the standard frame.
  std::size_t block_offset(std::size_t r) const;

  /// Matrix units U (I_{n_r} ⊗ E_pq) U*, unnormalized. Their span is the
  /// algebra, and the diagonal ones sum to I.
  std::vector<Matrix> generators() const;

  /// Same algebra, conjugator replaced by V* · U (i.e. the algebra V* M V).
  BlockAlgebra conjugated_by(const Matrix& v) const;

 private:
  std::vector<Block> blocks_;
  Matrix u_;
  std::size_t n_ = 0;
};

BlockAlgebra commutant(const BlockAlgebra& m);
/// HS-orthonormal basis of M.
OperatorSubspace algebra_basis(const BlockAlgebra& m);
/// M1 ⊗ M2 in standard form; spans the pairwise Kronecker products.
BlockAlgebra algebra_tensor(const BlockAlgebra& a, const BlockAlgebra& b);
/// Equal block multisets and equal spans.
bool same_algebra(const BlockAlgebra& a, const BlockAlgebra& b, double tol = kDefaultTol);

class QuantumGraph {
 public:
  /// Dimensions must agree; the axioms are not checked here (see
  /// verify_quantum_graph).
  QuantumGraph(OperatorSubspace s, BlockAlgebra m);

  std::size_t ambient_dim() const { return s_.ambient_dim(); }
  const OperatorSubspace& S() const { return s_; }
  const BlockAlgebra& M() const { return m_; }

 private:
  OperatorSubspace s_;
  BlockAlgebra m_;
};

/// Checks: adjoint closure of S, M'-bimodule property, S ⊥ M'.
VerificationReport verify_quantum_graph(const QuantumGraph& g, double tol = kDefaultTol);

class ClassicalGraph;
/// S = span{E_ij : i ~ j}, M = D_n.
QuantumGraph from_classical(const ClassicalGraph& g);
/// (M_n ∩ (M')^⊥, M, M_n).
QuantumGraph complete_quantum_graph(const BlockAlgebra& m);
/// (U* S U, U* M U). Throws InvalidInput for a non-unitary U.
QuantumGraph conjugate_graph(const QuantumGraph& g, const Matrix& u, double tol = kDefaultTol);
/// S1 ⊆ S2. Throws InvalidInput when the algebras differ.
bool is_subgraph(const QuantumGraph& g1, const QuantumGraph& g2, double tol = kDefaultTol);
/// Same S and same M, up to tolerance.
bool same_graph(const QuantumGraph& g1, const QuantumGraph& g2, double tol = kDefaultTol);

}  // namespace qgc
