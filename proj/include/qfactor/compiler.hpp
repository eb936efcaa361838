#pragma once

#include <span>

#include "qfactor/circuit.hpp"
#include "qfactor/pauli_expansion.hpp"

namespace qfactor {

/// CNOTs needed per layer under the ladder cost model: a weight-k Z term
/// (k >= 2) costs 2(k-1) CNOTs.
int cnot_count(const PauliZExpansion& pauli);

/// Appends exp(-i gamma H) followed by the transverse mixer exp(-i beta X)
/// on every qubit. Each weight-k Z term becomes a parity ladder onto its
/// highest qubit, rz(2 gamma c), and the mirrored ladder; the identity term
/// is dropped into Circuit::dropped_phase.
void append_layer(Circuit& circuit, const PauliZExpansion& pauli, double gamma, double beta);

Circuit synthesize_layer(const PauliZExpansion& pauli, double gamma, double beta,
                         Model model = Model::qubo);

Circuit synthesize_ansatz(const PauliZExpansion& pauli, std::span<const double> gammas,
                          std::span<const double> betas, Model model = Model::qubo);

}  // namespace qfactor
