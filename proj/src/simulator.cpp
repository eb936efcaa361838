#include "qfactor/simulator.hpp"

#include <cmath>
#include <stdexcept>

namespace qfactor {

namespace {

constexpr std::int64_t kParallelCutoff = 1 << 14;
constexpr std::size_t kChunk = 1 << 12;

// a0' = c a0 - i s a1, a1' = c a1 - i s a0
inline void butterfly(std::complex<double>& a0, std::complex<double>& a1, double c, double s) {
  const std::complex<double> t0 = a0;
  const std::complex<double> t1 = a1;
  a0 = {c * t0.real() + s * t1.imag(), c * t0.imag() - s * t1.real()};
  a1 = {c * t1.real() + s * t0.imag(), c * t1.imag() - s * t0.real()};
}

void apply_x_rotation(StateVector& state, int qubit, double theta) {
  if (qubit < 1 || qubit > state.n) throw std::invalid_argument("qubit index out of range");
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const std::size_t bit = std::size_t{1} << (qubit - 1);
  const std::size_t lo_mask = bit - 1;
  const std::size_t hi_mask = ~lo_mask;
  const std::int64_t half = static_cast<std::int64_t>(state.dim() >> 1);
#pragma omp parallel for schedule(static) if (half >= kParallelCutoff)
  for (std::int64_t i = 0; i < half; ++i) {
    const std::size_t u = static_cast<std::size_t>(i);
    const std::size_t i0 = ((u & hi_mask) << 1) | (u & lo_mask);
    const std::size_t i1 = i0 | bit;
    butterfly(state.amps[i0], state.amps[i1], c, s);
  }
}

}  // namespace

void apply_phase_separator(StateVector& state, const DiagonalHamiltonian& d, double gamma) {
  if (state.dim() != d.dim()) throw std::invalid_argument("dimension mismatch");
  const std::int64_t dim = static_cast<std::int64_t>(state.dim());
#pragma omp parallel for schedule(static) if (dim >= kParallelCutoff)
  for (std::int64_t b = 0; b < dim; ++b) {
    const std::size_t u = static_cast<std::size_t>(b);
    const double phase = -gamma * d.energies[u];
    state.amps[u] *= std::complex<double>{std::cos(phase), std::sin(phase)};
  }
}

void apply_single_qubit_mixer(StateVector& state, int qubit, double theta) {
  apply_x_rotation(state, qubit, theta);
}

void apply_mixer(StateVector& state, double beta, MixerSpec mixer) {
  if (mixer.omega <= 0.0) throw std::invalid_argument("mixer omega must be positive");
  for (int q = 1; q <= state.n; ++q) {
    apply_x_rotation(state, q, beta * mixer.omega);
  }
}

double expectation(const StateVector& state, const DiagonalHamiltonian& d) {
  if (state.dim() != d.dim()) throw std::invalid_argument("dimension mismatch");
  const std::size_t dim = state.dim();
  const std::size_t nchunks = (dim + kChunk - 1) / kChunk;
  std::vector<double> partial(nchunks, 0.0);
#pragma omp parallel for schedule(static) if (static_cast<std::int64_t>(dim) >= kParallelCutoff)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(nchunks); ++c) {
    const std::size_t lo = static_cast<std::size_t>(c) * kChunk;
    const std::size_t hi = std::min(dim, lo + kChunk);
    double sum = 0.0;
    for (std::size_t b = lo; b < hi; ++b) {
      sum += std::norm(state.amps[b]) * d.energies[b];
    }
    partial[static_cast<std::size_t>(c)] = sum;
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

void apply_gate(StateVector& state, const Gate& gate) {
  switch (gate.kind) {
    case GateKind::rz: {
      if (gate.target < 1 || gate.target > state.n) {
        throw std::invalid_argument("qubit index out of range");
      }
      const std::size_t bit = std::size_t{1} << (gate.target - 1);
      const double half_angle = 0.5 * gate.angle;
      const std::complex<double> phase0{std::cos(half_angle), -std::sin(half_angle)};
      const std::complex<double> phase1 = std::conj(phase0);
      const std::int64_t dim = static_cast<std::int64_t>(state.dim());
#pragma omp parallel for schedule(static) if (dim >= kParallelCutoff)
      for (std::int64_t b = 0; b < dim; ++b) {
        const std::size_t u = static_cast<std::size_t>(b);
        state.amps[u] *= (u & bit) ? phase1 : phase0;
      }
      break;
    }
    case GateKind::rx:
      apply_x_rotation(state, gate.target, 0.5 * gate.angle);
      break;
    case GateKind::cnot: {
      if (gate.target < 1 || gate.target > state.n || gate.control < 1 ||
          gate.control > state.n || gate.control == gate.target) {
        throw std::invalid_argument("bad cnot operands");
      }
      const std::size_t cbit = std::size_t{1} << (gate.control - 1);
      const std::size_t tbit = std::size_t{1} << (gate.target - 1);
      const std::int64_t dim = static_cast<std::int64_t>(state.dim());
#pragma omp parallel for schedule(static) if (dim >= kParallelCutoff)
      for (std::int64_t b = 0; b < dim; ++b) {
        const std::size_t u = static_cast<std::size_t>(b);
        if ((u & cbit) && !(u & tbit)) {
          std::swap(state.amps[u], state.amps[u | tbit]);
        }
      }
      break;
    }
  }
}

void apply_circuit(StateVector& state, const Circuit& circuit) {
  if (circuit.n != state.n) throw std::invalid_argument("qubit count mismatch");
  for (const Gate& g : circuit.gates) {
    apply_gate(state, g);
  }
}

void run_ansatz_into(StateVector& state, const DiagonalHamiltonian& generator,
                     std::span<const double> gammas, std::span<const double> betas,
                     InitPattern pattern, MixerSpec mixer) {
  if (gammas.size() != betas.size()) throw std::invalid_argument("parameter length mismatch");
  initial_state_into(state, generator.n, pattern);
  for (std::size_t l = 0; l < gammas.size(); ++l) {
    apply_phase_separator(state, generator, gammas[l]);
    apply_mixer(state, betas[l], mixer);
  }
}

StateVector run_ansatz(const DiagonalHamiltonian& generator, std::span<const double> gammas,
                       std::span<const double> betas, InitPattern pattern, MixerSpec mixer) {
  StateVector state;
  run_ansatz_into(state, generator, gammas, betas, pattern, mixer);
  return state;
}

}  // namespace qfactor
