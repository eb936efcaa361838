#pragma once

#include <span>

#include "qfactor/circuit.hpp"
#include "qfactor/diagonal.hpp"
#include "qfactor/statevector.hpp"

namespace qfactor {

/// Transverse-field coupling strength; only the product beta * omega enters
/// the dynamics.
struct MixerSpec {
  double omega = 1.0;
};

/// amp_b *= exp(-i gamma E_b). Populations are untouched.
void apply_phase_separator(StateVector& state, const DiagonalHamiltonian& d, double gamma);

/// exp(-i beta omega X) on every qubit.
void apply_mixer(StateVector& state, double beta, MixerSpec mixer = {});

/// exp(-i theta X) on one qubit (1-based).
void apply_single_qubit_mixer(StateVector& state, int qubit, double theta);

/// <state| diag |state>, deterministic regardless of thread count.
double expectation(const StateVector& state, const DiagonalHamiltonian& d);

void apply_gate(StateVector& state, const Gate& gate);
void apply_circuit(StateVector& state, const Circuit& circuit);

/// Initial state, then per layer the phase separator with `generator`
/// followed by the mixer. run_ansatz_into reuses the caller's buffer.
StateVector run_ansatz(const DiagonalHamiltonian& generator, std::span<const double> gammas,
                       std::span<const double> betas, InitPattern pattern,
                       MixerSpec mixer = {});
void run_ansatz_into(StateVector& state, const DiagonalHamiltonian& generator,
                     std::span<const double> gammas, std::span<const double> betas,
                     InitPattern pattern, MixerSpec mixer = {});

namespace serial {
/// Reference kernels: straight loops, no OpenMP. Kept to cross-check the
/// parallel path.
void apply_phase_separator(StateVector& state, const DiagonalHamiltonian& d, double gamma);
void apply_mixer(StateVector& state, double beta, MixerSpec mixer = {});
double expectation(const StateVector& state, const DiagonalHamiltonian& d);
}  // namespace serial

}  // namespace qfactor
