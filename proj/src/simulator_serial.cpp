#include <cmath>
#include <stdexcept>

#include "qfactor/simulator.hpp"

namespace qfactor::serial {

void apply_phase_separator(StateVector& state, const DiagonalHamiltonian& d, double gamma) {
  if (state.dim() != d.dim()) throw std::invalid_argument("dimension mismatch");
  for (std::size_t b = 0; b < state.dim(); ++b) {
    const double phase = -gamma * d.energies[b];
    state.amps[b] *= std::complex<double>{std::cos(phase), std::sin(phase)};
  }
}

void apply_mixer(StateVector& state, double beta, MixerSpec mixer) {
  if (mixer.omega <= 0.0) throw std::invalid_argument("mixer omega must be positive");
  const double c = std::cos(beta * mixer.omega);
  const double s = std::sin(beta * mixer.omega);
  for (int q = 1; q <= state.n; ++q) {
    const std::size_t bit = std::size_t{1} << (q - 1);
    for (std::size_t i0 = 0; i0 < state.dim(); ++i0) {
      if (i0 & bit) continue;
      const std::size_t i1 = i0 | bit;
      const std::complex<double> a0 = state.amps[i0];
      const std::complex<double> a1 = state.amps[i1];
      state.amps[i0] = {c * a0.real() + s * a1.imag(), c * a0.imag() - s * a1.real()};
      state.amps[i1] = {c * a1.real() + s * a0.imag(), c * a1.imag() - s * a0.real()};
    }
  }
}

double expectation(const StateVector& state, const DiagonalHamiltonian& d) {
  if (state.dim() != d.dim()) throw std::invalid_argument("dimension mismatch");
  double total = 0.0;
  for (std::size_t b = 0; b < state.dim(); ++b) {
    total += std::norm(state.amps[b]) * d.energies[b];
  }
  return total;
}

}  // namespace qfactor::serial
