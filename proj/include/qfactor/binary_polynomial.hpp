#pragma once

#include <cstdint>
#include <map>

#include "qfactor/instance.hpp"

namespace qfactor {

/// Integer-coefficient polynomial over idempotent binary variables
/// (x^2 = x). Keys are variable-subset bitmasks over the global qubit
/// ordering; no zero coefficients are stored.
struct BinaryPolynomial {
  int n = 0;
  std::map<std::uint32_t, std::int64_t> terms;

  /// Value at basis state b: sum of coefficients whose subset is set in b.
  std::int64_t evaluate(std::uint32_t b) const;

  std::int64_t constant() const;
  int degree() const;
  std::size_t term_count() const { return terms.size(); }

  void add_term(std::uint32_t mask, std::int64_t coeff);
};

/// F = N - (1 + sum_l 2^l x_l)(1 + sum_m 2^m y_m), the residual whose zeros
/// are exactly the factorizations of N.
BinaryPolynomial build_F(const Instance& inst);

/// Product with idempotent reduction; square(F) is the ground-state-encoding
/// generator.
BinaryPolynomial multiply(const BinaryPolynomial& a, const BinaryPolynomial& b);
BinaryPolynomial square(const BinaryPolynomial& f);

}  // namespace qfactor
