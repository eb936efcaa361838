#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qfactor/diagonal.hpp"

namespace qfactor {

enum class GateKind { rz, rx, cnot };

/// One native gate. Qubits are 1-based. Rotation convention:
/// rz(t) = exp(-i t Z / 2), rx(t) = exp(-i t X / 2).
struct Gate {
  GateKind kind;
  int target;
  int control = 0;     // cnot only
  double angle = 0.0;  // rotations only

  static Gate rz(int qubit, double angle) { return {GateKind::rz, qubit, 0, angle}; }
  static Gate rx(int qubit, double angle) { return {GateKind::rx, qubit, 0, angle}; }
  static Gate cnot(int control, int target) { return {GateKind::cnot, target, control, 0.0}; }
};

struct Circuit {
  int n = 0;
  int layers = 0;
  Model model = Model::qubo;
  double dropped_phase = 0.0;  // identity-term phase omitted from the gate list
  std::vector<Gate> gates;

  std::size_t cnot_count() const;
  std::size_t rz_count() const;
  std::size_t rx_count() const;
};

/// OpenQASM 2.0 text: gates rz/rx/cx on a single register q[n], angles
/// printed with 17 significant digits.
std::string emit_qasm(const Circuit& circuit);
void emit_qasm(const Circuit& circuit, std::ostream& out);

}  // namespace qfactor
