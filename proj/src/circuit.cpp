#include "qfactor/circuit.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qfactor {

namespace {

std::size_t count_kind(const Circuit& c, GateKind kind) {
  std::size_t count = 0;
  for (const Gate& g : c.gates) {
    if (g.kind == kind) ++count;
  }
  return count;
}

std::string format_angle(double angle) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", angle);
  return buf;
}

}  // namespace

std::size_t Circuit::cnot_count() const { return count_kind(*this, GateKind::cnot); }
std::size_t Circuit::rz_count() const { return count_kind(*this, GateKind::rz); }
std::size_t Circuit::rx_count() const { return count_kind(*this, GateKind::rx); }

void emit_qasm(const Circuit& circuit, std::ostream& out) {
  if (circuit.n < 1) throw std::invalid_argument("circuit has no qubits");
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  out << "qreg q[" << circuit.n << "];\n";
  for (const Gate& g : circuit.gates) {
    switch (g.kind) {
      case GateKind::rz:
        out << "rz(" << format_angle(g.angle) << ") q[" << g.target - 1 << "];\n";
        break;
      case GateKind::rx:
        out << "rx(" << format_angle(g.angle) << ") q[" << g.target - 1 << "];\n";
        break;
      case GateKind::cnot:
        out << "cx q[" << g.control - 1 << "],q[" << g.target - 1 << "];\n";
        break;
    }
  }
}

std::string emit_qasm(const Circuit& circuit) {
  std::ostringstream out;
  emit_qasm(circuit, out);
  return out.str();
}

}  // namespace qfactor
