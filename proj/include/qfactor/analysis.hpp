#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qfactor/diagonal.hpp"
#include "qfactor/instance.hpp"
#include "qfactor/statevector.hpp"

namespace qfactor {

/// Summed squared overlap with the (possibly degenerate) solution set.
double fidelity(const StateVector& state, const Instance& inst);

/// 1 - H / H_max with Shannon entropy H in natural log and H_max the
/// entropy of the uniform distribution. Rejects unnormalized input.
double confidence(std::span<const double> populations);

struct SpectrumEntry {
  std::uint32_t index;
  double energy;
  double abs_normalized;  // |E| / max |E|
  bool is_solution;
};

/// Energies in basis order plus the ordering sorted by |E~| (ties broken by
/// ascending basis index).
struct SpectrumReport {
  double e_max = 0.0;
  std::vector<SpectrumEntry> entries;        // by basis index
  std::vector<std::uint32_t> sorted_order;   // basis indices, |E~| ascending
  std::vector<std::uint32_t> sorted_rank;    // rank of each basis index (0-based)
};

SpectrumReport spectrum_report(const DiagonalHamiltonian& d, const Instance& inst);

/// Fraction of basis states with |E~| strictly below delta; delta above 1 is
/// clamped to 1.
double near_zero_density(const DiagonalHamiltonian& d, double delta);

struct PopulationEntry {
  std::uint32_t index;
  double probability;
  bool is_solution;
};

/// Top-k populations sorted descending with the rest aggregated.
struct PopulationReport {
  std::vector<PopulationEntry> top;
  double others = 0.0;
  bool solution_first = false;
};

PopulationReport population_report(const StateVector& state, const Instance& inst, int top_k);

/// 1-based rank of the best-populated solution state.
int solution_rank(const StateVector& state, const Instance& inst);

}  // namespace qfactor
