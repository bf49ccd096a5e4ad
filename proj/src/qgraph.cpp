#include "qgc/qgraph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qgc/classical.hpp"

namespace qgc {
namespace {

Matrix vec(const Matrix& x) { return Eigen::Map<const Vector>(x.data(), x.size()); }

// Maps C^size ⊗ C^mult onto C^mult ⊗ C^size, so that
// F (I_size ⊗ M_mult) F* = M_mult ⊗ I_size.
Matrix block_flip(const Block& b) {
  const std::size_t dims[] = {b.size, b.multiplicity};
  const std::size_t perm[] = {1, 0};
  return permutation_unitary(dims, perm);
}

}  // namespace

BlockAlgebra::BlockAlgebra(std::vector<Block> blocks, std::optional<Matrix> conjugator, double tol)
    : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw InvalidInput("block algebra needs at least one block");
  for (const auto& b : blocks_) {
    if (b.multiplicity == 0 || b.size == 0) throw InvalidInput("block dimensions must be positive");
    n_ += b.multiplicity * b.size;
  }
  if (conjugator) {
    if (static_cast<std::size_t>(conjugator->rows()) != n_ || conjugator->rows() != conjugator->cols())
      throw DimensionError("conjugator dimension " + std::to_string(conjugator->rows()) +
                           " does not match block total " + std::to_string(n_));
    if (!is_unitary(*conjugator, tol)) throw InvalidInput("conjugator is not unitary");
    u_ = std::move(*conjugator);
  } else {
    u_ = Matrix::Identity(n_, n_);
  }
}

BlockAlgebra BlockAlgebra::diagonal(std::size_t n) { return BlockAlgebra(std::vector<Block>(n, {1, 1})); }
BlockAlgebra BlockAlgebra::full(std::size_t n) { return BlockAlgebra({{1, n}}); }
BlockAlgebra BlockAlgebra::scalars(std::size_t n) { return BlockAlgebra({{n, 1}}); }

std::size_t BlockAlgebra::algebra_dim() const {
  std::size_t d = 0;
  for (const auto& b : blocks_) d += b.size * b.size;
  return d;
}

bool BlockAlgebra::has_identity_conjugator() const {
  return u_.isIdentity(0.0);
}

std::size_t BlockAlgebra::block_offset(std::size_t r) const {
  std::size_t off = 0;
  for (std::size_t i = 0; i < r; ++i) off += blocks_[i].multiplicity * blocks_[i].size;
  return off;
}

std::vector<Matrix> BlockAlgebra::generators() const {
  std::vector<Matrix> out;
  out.reserve(algebra_dim());
  const bool plain = has_identity_conjugator();
  std::size_t off = 0;
  for (const auto& b : blocks_) {
    for (std::size_t p = 0; p < b.size; ++p) {
      for (std::size_t q = 0; q < b.size; ++q) {
        Matrix g = Matrix::Zero(n_, n_);
        for (std::size_t i = 0; i < b.multiplicity; ++i) g(off + i * b.size + p, off + i * b.size + q) = 1.0;
        out.push_back(plain ? g : Matrix(u_ * g * u_.adjoint()));
      }
    }
    off += b.multiplicity * b.size;
  }
  return out;
}

BlockAlgebra BlockAlgebra::conjugated_by(const Matrix& v) const {
  return BlockAlgebra(blocks_, Matrix(v.adjoint() * u_));
}

BlockAlgebra commutant(const BlockAlgebra& m) {
  std::vector<Block> swapped;
  swapped.reserve(m.blocks().size());
  const std::size_t n = m.ambient_dim();
  Matrix flip = Matrix::Zero(n, n);
  std::size_t off = 0;
  for (const auto& b : m.blocks()) {
    const std::size_t w = b.multiplicity * b.size;
    flip.block(off, off, w, w) = block_flip(b);
    swapped.push_back({b.size, b.multiplicity});
    off += w;
  }
  if (m.has_identity_conjugator()) return BlockAlgebra(std::move(swapped), flip);
  return BlockAlgebra(std::move(swapped), Matrix(m.conjugator() * flip));
}

OperatorSubspace algebra_basis(const BlockAlgebra& m) {
  const std::size_t n = m.ambient_dim();
  const auto gens = m.generators();
  Matrix cols(n * n, static_cast<Eigen::Index>(gens.size()));
  std::size_t k = 0;
  for (const auto& b : m.blocks()) {
    const double scale = 1.0 / std::sqrt(static_cast<double>(b.multiplicity));
    for (std::size_t i = 0; i < b.size * b.size; ++i, ++k) cols.col(k) = scale * vec(gens[k]);
  }
  return orthonormalize_columns(n, cols);
}

BlockAlgebra algebra_tensor(const BlockAlgebra& a, const BlockAlgebra& b) {
  const std::size_t nb = b.ambient_dim();
  const std::size_t n = a.ambient_dim() * nb;
  std::vector<Block> blocks;
  Matrix shuffle = Matrix::Zero(n, n);
  std::size_t target = 0;
  for (std::size_t r = 0; r < a.blocks().size(); ++r) {
    const Block& br = a.blocks()[r];
    const std::size_t or_ = a.block_offset(r);
    for (std::size_t s = 0; s < b.blocks().size(); ++s) {
      const Block& bs = b.blocks()[s];
      const std::size_t os = b.block_offset(s);
      blocks.push_back({br.multiplicity * bs.multiplicity, br.size * bs.size});
      // Standard index ((i,j),(p,q)) of the product block <- Kronecker index
      // of (I ⊗ E) ⊗ (I ⊗ E) in the two factors' standard frames.
      for (std::size_t i = 0; i < br.multiplicity; ++i)
        for (std::size_t j = 0; j < bs.multiplicity; ++j)
          for (std::size_t p = 0; p < br.size; ++p)
            for (std::size_t q = 0; q < bs.size; ++q) {
              const std::size_t std_index =
                  target + (i * bs.multiplicity + j) * (br.size * bs.size) + p * bs.size + q;
              const std::size_t kron_index = (or_ + i * br.size + p) * nb + (os + j * bs.size + q);
              shuffle(kron_index, std_index) = 1.0;
            }
      target += br.multiplicity * bs.multiplicity * br.size * bs.size;
    }
  }
  if (a.has_identity_conjugator() && b.has_identity_conjugator())
    return BlockAlgebra(std::move(blocks), shuffle);
  return BlockAlgebra(std::move(blocks), Matrix(kron(a.conjugator(), b.conjugator()) * shuffle));
}

bool same_algebra(const BlockAlgebra& a, const BlockAlgebra& b, double tol) {
  if (a.ambient_dim() != b.ambient_dim()) return false;
  auto key = [](const BlockAlgebra& m) {
    std::vector<std::pair<std::size_t, std::size_t>> k;
    for (const auto& bl : m.blocks()) k.emplace_back(bl.multiplicity, bl.size);
    std::sort(k.begin(), k.end());
    return k;
  };
  if (key(a) != key(b)) return false;
  return same_span(algebra_basis(a), algebra_basis(b), tol);
}

// ---------------------------------------------------------------------------

QuantumGraph::QuantumGraph(OperatorSubspace s, BlockAlgebra m) : s_(std::move(s)), m_(std::move(m)) {
  if (s_.ambient_dim() != m_.ambient_dim())
    throw DimensionError("operator space lives in M_" + std::to_string(s_.ambient_dim()) +
                         " but the algebra acts on C^" + std::to_string(m_.ambient_dim()));
}

VerificationReport verify_quantum_graph(const QuantumGraph& g, double tol) {
  VerificationReport report("quantum graph axioms (n = " + std::to_string(g.ambient_dim()) +
                            ", dim S = " + std::to_string(g.S().dim()) + ")");
  const auto& s = g.S();
  const std::size_t n = g.ambient_dim();

  double adjoint = 0.0;
  if (!s.empty()) {
    Matrix adj(n * n, static_cast<Eigen::Index>(s.dim()));
    for (std::size_t i = 0; i < s.dim(); ++i) adj.col(i) = vec(s.basis(i).adjoint());
    adjoint = s.residuals(adj).maxCoeff();
  }
  report.add("adjoint_closure", adjoint, tol);

  // A·X·B ∈ S for all generators A, B of M' is equivalent to the one-sided
  // products A·X, X·B lying in S: the diagonal generators resolve I.
  const BlockAlgebra mc = commutant(g.M());
  const auto gens = mc.generators();
  double bimodule = 0.0;
  if (!s.empty()) {
    const auto basis = s.basis();
    Matrix prods(n * n, static_cast<Eigen::Index>(2 * basis.size()));
    for (const auto& a : gens) {
      for (std::size_t i = 0; i < basis.size(); ++i) {
        prods.col(2 * i) = vec(a * basis[i]);
        prods.col(2 * i + 1) = vec(basis[i] * a);
      }
      bimodule = std::max(bimodule, s.residuals(prods).maxCoeff());
    }
  }
  report.add("commutant_bimodule", bimodule, tol);

  double ortho = 0.0;
  if (!s.empty()) {
    const OperatorSubspace mcb = algebra_basis(mc);
    ortho = (s.columns().adjoint() * mcb.columns()).cwiseAbs().maxCoeff();
  }
  report.add("orthogonal_to_commutant", ortho, tol);
  return report;
}

QuantumGraph from_classical(const ClassicalGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Matrix> units;
  for (const auto& [u, v] : g.edges()) {
    units.push_back(matrix_unit(n, u, v));
    units.push_back(matrix_unit(n, v, u));
  }
  return QuantumGraph(orthonormalize(units, kRankCutoff, n), BlockAlgebra::diagonal(n));
}

QuantumGraph complete_quantum_graph(const BlockAlgebra& m) {
  return QuantumGraph(subspace_perp(algebra_basis(commutant(m))), m);
}

QuantumGraph conjugate_graph(const QuantumGraph& g, const Matrix& u, double tol) {
  if (static_cast<std::size_t>(u.rows()) != g.ambient_dim() || u.rows() != u.cols())
    throw DimensionError("conjugating unitary has the wrong dimension");
  if (!is_unitary(u, tol)) throw InvalidInput("conjugate_graph: matrix is not unitary");
  return QuantumGraph(subspace_conjugate(g.S(), u), g.M().conjugated_by(u));
}

bool is_subgraph(const QuantumGraph& g1, const QuantumGraph& g2, double tol) {
  if (g1.ambient_dim() != g2.ambient_dim()) throw DimensionError("is_subgraph: ambient dimensions differ");
  if (!same_algebra(g1.M(), g2.M(), tol))
    throw InvalidInput("is_subgraph: graphs must share the same algebra");
  if (g1.S().empty()) return true;
  return g2.S().residuals(g1.S().columns()).maxCoeff() <= tol;
}

bool same_graph(const QuantumGraph& g1, const QuantumGraph& g2, double tol) {
  if (g1.ambient_dim() != g2.ambient_dim()) return false;
  return same_algebra(g1.M(), g2.M(), tol) && same_span(g1.S(), g2.S(), tol);
}

}  // namespace qgc
