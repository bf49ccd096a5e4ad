#pragma once

// The four quantum graph products and the classical identification check.
//
// Every product acts on H_G ⊗ H_H with M = M_G ⊗ M_H. Writing A' for the
// span of the commutant of A:
//   cartesian      S_G ⊗ M_H' + M_G' ⊗ S_H
//   categorical    S_G ⊗ S_H
//   lexicographic  S_G ⊗ M_{n_H} + M_G' ⊗ S_H
//   strong         S_G ⊗ M_H' + M_G' ⊗ S_H + S_G ⊗ S_H

#include <string_view>

#include "qgc/classical.hpp"
#include "qgc/qgraph.hpp"

namespace qgc {

/// Printed by the CLI whenever a lexicographic product is built.
inline constexpr std::string_view kLexicographicNotice =
    "note: the lexicographic product is built as S_G (x) B(H_H) + M_G' (x) S_H. The commonly "
    "quoted definition puts M_H' on the left leg of the second summand, which does not fit the "
    "ambient space; M_G' is the reading under which classical graphs embed correctly.";

/// Throws InvalidInput when an input fails verify_quantum_graph.
QuantumGraph cartesian(const QuantumGraph& g, const QuantumGraph& h, double tol = kDefaultTol);
QuantumGraph categorical(const QuantumGraph& g, const QuantumGraph& h, double tol = kDefaultTol);
QuantumGraph lexicographic(const QuantumGraph& g, const QuantumGraph& h, double tol = kDefaultTol);
QuantumGraph strong(const QuantumGraph& g, const QuantumGraph& h, double tol = kDefaultTol);
QuantumGraph product(const QuantumGraph& g, const QuantumGraph& h, ProductKind kind,
                     double tol = kDefaultTol);

/// Compares the embedding of the classical product with the quantum product
/// of the embeddings, after the identification δ_(v,w) ↦ δ_v ⊗ δ_w.
VerificationReport classical_crosscheck(const ClassicalGraph& g, const ClassicalGraph& h,
                                        ProductKind kind, double tol = kDefaultTol);

/// The identification unitary: column v * n_H + w holds δ_v ⊗ δ_w.
Matrix identification_unitary(std::size_t n_g, std::size_t n_h);

}  // namespace qgc
