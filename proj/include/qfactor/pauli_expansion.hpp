#pragma once

#include <cstdint>
#include <map>

#include "qfactor/binary_polynomial.hpp"

namespace qfactor {

/// Real-coefficient expansion over products of Pauli-Z operators, keyed by
/// qubit-subset bitmask. Diagonal in the computational basis.
struct PauliZExpansion {
  int n = 0;
  std::map<std::uint32_t, double> terms;

  /// Eigenvalue on basis state b: sum of c_T * (-1)^|T & b|.
  double evaluate(std::uint32_t b) const;

  int max_weight() const;
  std::size_t weight_count(int weight) const;
};

/// Exact expansion via x_i = (1 - Z_i) / 2; zero coefficients dropped.
PauliZExpansion to_pauli(const BinaryPolynomial& poly);

}  // namespace qfactor
