#pragma once

// Colouring and homomorphism certificates, their verifiers, and the
// constructive transformations between them.
//
// A certificate for a graph on H (dimension n) with ancilla C^d consists of
// projections on H ⊗ C^d, graph leg first. d = 1 is a local (classical
// ancilla) strategy; any finite d > 1 is a quantum one.

#include <cstddef>
#include <vector>

#include "qgc/classical.hpp"
#include "qgc/qgraph.hpp"

namespace qgc {

struct ColoringCertificate {
  std::size_t graph_dim = 1;
  std::size_t ancilla_dim = 1;
  std::size_t fold = 1;
  std::vector<Matrix> projections;

  std::size_t colors() const { return projections.size(); }
  std::size_t total_dim() const { return graph_dim * ancilla_dim; }
  bool is_local() const { return ancilla_dim == 1; }
};

/// Kraus operators F_i : H_src ⊗ C^ancilla -> H_dst.
struct HomomorphismCertificate {
  std::size_t source_dim = 1;
  std::size_t target_dim = 1;
  std::size_t ancilla_dim = 1;
  std::vector<Matrix> kraus;
};

/// Output of a transformation, already re-verified.
struct TransformResult {
  ColoringCertificate certificate;
  VerificationReport report;
  /// For reduce_bfold: output colour i was input colour colour_map[i].
  std::vector<std::size_t> colour_map;
};

/// Throws DimensionError when the certificate's shapes are inconsistent
/// with itself or with the graph.
void check_certificate_shape(const QuantumGraph& g, const ColoringCertificate& cert);

/// Fold-1 verifier: projections, membership in M ⊗ M_d, Σ P_a = I and
/// P_a (X ⊗ I) P_a = 0 for all X in S.
VerificationReport verify_coloring(const QuantumGraph& g, const ColoringCertificate& cert,
                                   double tol = kDefaultTol);
/// b-fold verifier, including the derived PVM Q_T = Π_{a∈T} P_a.
VerificationReport verify_bfold(const QuantumGraph& g, const ColoringCertificate& cert,
                                double tol = kDefaultTol);

struct PvmEntry {
  std::vector<std::size_t> subset;  // ascending
  Matrix q;
};
/// Q_T for every b-subset T of the palette (zero entries included).
/// Throws InvalidInput when the projections do not commute.
std::vector<PvmEntry> pvm_from_bfold(const ColoringCertificate& cert, double tol = kDefaultTol);
/// P_a = Σ_{T ∋ a} Q_T.
ColoringCertificate bfold_from_pvm(const std::vector<PvmEntry>& pvm, std::size_t colors, std::size_t fold,
                                   std::size_t graph_dim, std::size_t ancilla_dim);

/// (U* ⊗ I) P (U ⊗ I): the certificate for conjugate_graph(G, U).
ColoringCertificate conjugate_certificate(const ColoringCertificate& cert, const Matrix& u);

// --- transformations; each throws InvalidInput for failing inputs and
// --- ConstructionError when its own output fails verification.

/// b-fold -> (b-1)-fold with at least one colour fewer; zero projections
/// are dropped and colour_map records the survivors.
TransformResult reduce_bfold(const QuantumGraph& g, const ColoringCertificate& cert, double tol = kDefaultTol);
/// (b1, c) and (b2, d) -> (b1 + b2, c + d) via meets of the embedded PVMs;
/// the second palette follows the first.
TransformResult combine_bfold(const QuantumGraph& g, const ColoringCertificate& a,
                              const ColoringCertificate& b, double tol = kDefaultTol);
/// b copies of a fold-1 certificate combined: (b, b c).
TransformResult scale_bfold(const QuantumGraph& g, const ColoringCertificate& cert, std::size_t b,
                            double tol = kDefaultTol);
/// (b, c)-fold on G and fold-1 b-colouring on H -> c-colouring of G[H].
TransformResult lexicographic_coloring(const QuantumGraph& g, const ColoringCertificate& cert_g,
                                       const QuantumGraph& h, const ColoringCertificate& cert_h,
                                       double tol = kDefaultTol);
/// R_(a,b) = P_a ⊙ P_b, colour a * c_H + b; verified on both the strong
/// and the Cartesian product.
TransformResult strong_coloring(const QuantumGraph& g, const ColoringCertificate& cert_g,
                                const QuantumGraph& h, const ColoringCertificate& cert_h,
                                double tol = kDefaultTol);
/// P_a ⊙ I_{n_H} on G × H; the fold is preserved.
TransformResult categorical_lift(const QuantumGraph& g, const ColoringCertificate& cert_g,
                                 const QuantumGraph& h, double tol = kDefaultTol);

/// n² rank-one projections onto (I ⊗ X^j Z^k)|Ω⟩ (colour j n + k),
/// ancilla dimension n.
ColoringCertificate bell_coloring(std::size_t n);

/// For M = C·I_d ⊗ M_k (one block): R_a = (k/d) Tr_H(P_a) in the standard
/// frame, with idempotency, self-adjointness, Σ R_a = b k² I and the count
/// c >= b k². Throws InvalidInput for multi-block algebras.
VerificationReport complete_lower_bound_extract(const QuantumGraph& g, const ColoringCertificate& cert,
                                                double tol = kDefaultTol);

// --- homomorphisms

enum class Factor { first, second };

/// Σ F*F = I, F_i (S_src ⊗ I) F_j* ⊆ S_dst and F_i (M_src' ⊗ I) F_j* ⊆ M_dst'.
VerificationReport verify_homomorphism(const QuantumGraph& src, const QuantumGraph& dst,
                                       const HomomorphismCertificate& cert, double tol = kDefaultTol);
/// A single isometry embedding the chosen factor into G □ H: the other
/// factor's leg receives the range of a minimal projection of its
/// commutant, so the ancilla is that block's size (1 for classical graphs).
HomomorphismCertificate sabidussi_witness(const QuantumGraph& g, const QuantumGraph& h,
                                          Factor source = Factor::first);
/// Partial-trace family G × H -> chosen factor: {I ⊗ e_j*} or {e_j* ⊗ I}.
HomomorphismCertificate hedetniemi_witness(const QuantumGraph& g, const QuantumGraph& h,
                                           Factor target = Factor::first);

// --- classical bridge

/// Diagonal projections with (P_a)_vv = 1 iff a ∈ φ(v).
ColoringCertificate to_local_cert(const ClassicalGraph& g, const BFoldAssignment& w);
/// Inverse of to_local_cert. Throws InvalidInput for a non-diagonal or
/// non-local certificate, or when the recovered assignment is invalid.
BFoldAssignment from_local_cert(const ClassicalGraph& g, const ColoringCertificate& cert,
                                double tol = kDefaultTol);

}  // namespace qgc
