#include "qfactor/instance.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace qfactor {

namespace {

constexpr int kMaxQubits = 24;

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// ceil(log2 x) for x >= 1
int ceil_log2(std::uint64_t x) {
  if (x <= 1) return 0;
  return std::bit_width(x - 1);
}

void validate(std::uint64_t N) {
  if (N % 2 == 0) throw std::invalid_argument("N must be odd");
  if (N < 15) throw std::invalid_argument("N must be >= 15");
  if (is_prime(N)) throw std::invalid_argument("N must not be prime");
}

}  // namespace

QubitSizing qubit_sizing(std::uint64_t N) {
  validate(N);
  std::uint64_t root = isqrt(N);
  std::uint64_t odd_root = (root % 2 == 0) ? root - 1 : root;
  int n_p = ceil_log2(odd_root) - 1;
  int n_q = ceil_log2(N / 3) - 1;
  return {n_p, n_q};
}

std::pair<std::uint64_t, std::uint64_t> decode_state(std::uint32_t b, int n_p, int n_q) {
  std::uint64_t p_prime = b & ((std::uint32_t{1} << n_p) - 1);
  std::uint64_t q_prime = (b >> n_p) & ((std::uint32_t{1} << n_q) - 1);
  return {2 * p_prime + 1, 2 * q_prime + 1};
}

std::pair<std::uint64_t, std::uint64_t> decode_state(std::uint32_t b, const Instance& inst) {
  if (b >= inst.dim()) throw std::invalid_argument("basis index out of range");
  return decode_state(b, inst.n_p, inst.n_q);
}

std::vector<std::uint32_t> enumerate_solutions(std::uint64_t N, int n_p, int n_q) {
  int n = n_p + n_q;
  if (n > kMaxQubits) throw std::invalid_argument("instance requires n <= 24 qubits");
  std::vector<std::uint32_t> sols;
  const std::uint32_t dim = std::uint32_t{1} << n;
  for (std::uint32_t b = 0; b < dim; ++b) {
    auto [p, q] = decode_state(b, n_p, n_q);
    if (p * q == N) sols.push_back(b);
  }
  return sols;
}

Instance Instance::make(std::uint64_t N) {
  auto [n_p, n_q] = qubit_sizing(N);
  Instance inst;
  inst.N = N;
  inst.n_p = n_p;
  inst.n_q = n_q;
  inst.n = n_p + n_q;
  inst.solutions = enumerate_solutions(N, n_p, n_q);
  if (inst.solutions.empty()) {
    throw std::runtime_error("no solution state fits the register sizing");
  }
  return inst;
}

std::string bitstring(std::uint32_t b, int n) {
  if (n < 1 || (n < 32 && b >= (std::uint32_t{1} << n))) {
    throw std::invalid_argument("basis index out of range");
  }
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if (b & (std::uint32_t{1} << i)) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

std::uint32_t parse_bitstring(const std::string& bits) {
  if (bits.empty() || bits.size() > 32) throw std::invalid_argument("bad bitstring");
  std::uint32_t b = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      b |= std::uint32_t{1} << i;
    } else if (bits[i] != '0') {
      throw std::invalid_argument("bad bitstring");
    }
  }
  return b;
}

std::pair<std::uint64_t, std::uint64_t> canonical_factors(const Instance& inst) {
  auto [p, q] = decode_state(inst.solutions.front(), inst);
  if (p > q) std::swap(p, q);
  return {p, q};
}

std::vector<std::uint32_t> solutions_by_factor(const Instance& inst) {
  std::vector<std::uint32_t> order = inst.solutions;
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    auto pa = decode_state(a, inst).first;
    auto pb = decode_state(b, inst).first;
    if (pa != pb) return pa < pb;
    return a < b;
  });
  return order;
}

const std::vector<std::uint64_t>& semiprime_corpus() {
  static const std::vector<std::uint64_t> corpus = {15, 21,  25,  35,  39,  51,
                                                    77, 87,  95,  115, 119, 143};
  return corpus;
}

}  // namespace qfactor
