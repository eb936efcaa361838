#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "qfactor/binary_polynomial.hpp"

namespace qfactor {

/// Which encoding generated a Hamiltonian: the two-body kernel-subspace
/// form (qubo) or the squared ground-state form (pubo).
enum class Model { qubo, pubo };

std::string_view model_name(Model model);
Model parse_model(std::string_view name);

/// Energies of a diagonal Hamiltonian over the full computational basis.
struct DiagonalHamiltonian {
  Model model = Model::qubo;
  int n = 0;
  std::vector<double> energies;  // 2^n entries, indexed by basis state

  std::size_t dim() const { return energies.size(); }
};

/// Evaluates poly on every basis state. OpenMP-parallel over indices.
DiagonalHamiltonian diagonal(const BinaryPolynomial& poly, Model model);

/// Elementwise absolute value; model tag preserved.
DiagonalHamiltonian abs_diagonal(const DiagonalHamiltonian& d);

namespace serial {
/// Reference implementation used to validate the parallel kernel.
DiagonalHamiltonian diagonal(const BinaryPolynomial& poly, Model model);
}  // namespace serial

}  // namespace qfactor
