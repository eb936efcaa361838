#include "qfactor/compiler.hpp"

#include <bit>
#include <stdexcept>

namespace qfactor {

namespace {

constexpr int kMaxWeight = 4;

// 1-based qubit indices of a subset mask, ascending
std::vector<int> subset_qubits(std::uint32_t mask) {
  std::vector<int> qubits;
  while (mask) {
    qubits.push_back(std::countr_zero(mask) + 1);
    mask &= mask - 1;
  }
  return qubits;
}

}  // namespace

int cnot_count(const PauliZExpansion& pauli) {
  int total = 0;
  for (const auto& [mask, coeff] : pauli.terms) {
    const int w = std::popcount(mask);
    if (w >= 2) total += 2 * (w - 1);
  }
  return total;
}

void append_layer(Circuit& circuit, const PauliZExpansion& pauli, double gamma, double beta) {
  if (circuit.n == 0) circuit.n = pauli.n;
  if (circuit.n != pauli.n) throw std::invalid_argument("qubit count mismatch");
  for (const auto& [mask, coeff] : pauli.terms) {
    const int w = std::popcount(mask);
    if (w > kMaxWeight) throw std::invalid_argument("Z term weight exceeds 4");
    if (w == 0) {
      circuit.dropped_phase += -gamma * coeff;
      continue;
    }
    const auto qubits = subset_qubits(mask);
    if (w == 1) {
      circuit.gates.push_back(Gate::rz(qubits[0], 2.0 * gamma * coeff));
      continue;
    }
    for (int k = 0; k + 1 < w; ++k) {
      circuit.gates.push_back(Gate::cnot(qubits[k], qubits[k + 1]));
    }
    circuit.gates.push_back(Gate::rz(qubits[w - 1], 2.0 * gamma * coeff));
    for (int k = w - 2; k >= 0; --k) {
      circuit.gates.push_back(Gate::cnot(qubits[k], qubits[k + 1]));
    }
  }
  for (int q = 1; q <= circuit.n; ++q) {
    circuit.gates.push_back(Gate::rx(q, 2.0 * beta));
  }
  ++circuit.layers;
}

Circuit synthesize_layer(const PauliZExpansion& pauli, double gamma, double beta, Model model) {
  Circuit circuit;
  circuit.n = pauli.n;
  circuit.model = model;
  append_layer(circuit, pauli, gamma, beta);
  return circuit;
}

Circuit synthesize_ansatz(const PauliZExpansion& pauli, std::span<const double> gammas,
                          std::span<const double> betas, Model model) {
  if (gammas.size() != betas.size()) throw std::invalid_argument("parameter length mismatch");
  Circuit circuit;
  circuit.n = pauli.n;
  circuit.model = model;
  for (std::size_t l = 0; l < gammas.size(); ++l) {
    append_layer(circuit, pauli, gammas[l], betas[l]);
  }
  return circuit;
}

}  // namespace qfactor
