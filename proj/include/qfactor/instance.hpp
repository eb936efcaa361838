#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qfactor {

/// Register sizes for an odd composite N: n_p bits encode p' and n_q bits
/// encode q' in p = 2p' + 1, q = 2q' + 1.
struct QubitSizing {
  int n_p;
  int n_q;
};

/// A factorization instance. Qubit i (1-based) lives in bit i-1 of a basis
/// index; qubits 1..n_p are the x register, qubits n_p+1..n the y register.
/// Immutable after construction.
struct Instance {
  std::uint64_t N = 0;
  int n_p = 0;
  int n_q = 0;
  int n = 0;
  std::vector<std::uint32_t> solutions;  // ascending basis index, F = 0

  std::size_t dim() const { return std::size_t{1} << n; }

  /// Validates N (odd, >= 15, composite), sizes the registers and
  /// enumerates the solution set. Throws std::invalid_argument otherwise.
  static Instance make(std::uint64_t N);
};

/// Smallest register sizes covering all candidate factor pairs of N.
/// Throws std::invalid_argument for even, prime or too-small N.
QubitSizing qubit_sizing(std::uint64_t N);

/// Reads (p, q) from the bits of a basis index.
std::pair<std::uint64_t, std::uint64_t> decode_state(std::uint32_t b, int n_p, int n_q);
std::pair<std::uint64_t, std::uint64_t> decode_state(std::uint32_t b, const Instance& inst);

/// All basis indices with p(b) * q(b) == N, ascending. Includes both factor
/// orderings when both fit the registers.
std::vector<std::uint32_t> enumerate_solutions(std::uint64_t N, int n_p, int n_q);

/// Renders b with the qubit-k value at character k (left to right).
std::string bitstring(std::uint32_t b, int n);

/// Inverse of bitstring().
std::uint32_t parse_bitstring(const std::string& bits);

/// Canonical factor pair (p, q) with p <= q.
std::pair<std::uint64_t, std::uint64_t> canonical_factors(const Instance& inst);

/// Solution indices ordered by decoded p ascending (presentation order).
std::vector<std::uint32_t> solutions_by_factor(const Instance& inst);

/// The bundled corpus of semiprimes used throughout tests and `--all` runs.
const std::vector<std::uint64_t>& semiprime_corpus();

}  // namespace qfactor
