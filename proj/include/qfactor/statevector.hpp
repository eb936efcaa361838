#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace qfactor {

/// Dense statevector over 2^n amplitudes; amplitude index doubles as the
/// basis index (qubit i in bit i-1). Hard cap n <= 24.
struct StateVector {
  int n = 0;
  std::vector<std::complex<double>> amps;

  std::size_t dim() const { return amps.size(); }

  static StateVector zeros(int n);
};

enum class InitPattern { plus, alternating };

std::string_view pattern_name(InitPattern pattern);
InitPattern parse_pattern(std::string_view name);

/// plus: uniform superposition |+>^n. alternating: |+>|->|+>... with the
/// odd-n tail ending in |+>.
StateVector initial_state(int n, InitPattern pattern);
void initial_state_into(StateVector& state, int n, InitPattern pattern);

/// Sum of squared magnitudes via a fixed-chunk deterministic reduction.
double norm_squared(const StateVector& state);

std::vector<double> populations(const StateVector& state);

/// Largest elementwise distance between a and b after aligning the global
/// phase of b to a at a's dominant amplitude.
double phase_aligned_distance(const StateVector& a, const StateVector& b);

}  // namespace qfactor
