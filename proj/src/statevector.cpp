#include "qfactor/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string_view>

namespace qfactor {

namespace {
constexpr int kMaxQubits = 24;
constexpr std::int64_t kParallelCutoff = 1 << 14;
constexpr std::size_t kChunk = 1 << 12;
}  // namespace

StateVector StateVector::zeros(int n) {
  if (n < 1 || n > kMaxQubits) throw std::invalid_argument("qubit count must be in [1, 24]");
  StateVector s;
  s.n = n;
  s.amps.assign(std::size_t{1} << n, {0.0, 0.0});
  return s;
}

std::string_view pattern_name(InitPattern pattern) {
  return pattern == InitPattern::plus ? "plus" : "alternating";
}

InitPattern parse_pattern(std::string_view name) {
  if (name == "plus") return InitPattern::plus;
  if (name == "alternating") return InitPattern::alternating;
  throw std::invalid_argument("init pattern must be 'plus' or 'alternating'");
}

void initial_state_into(StateVector& s, int n, InitPattern pattern) {
  if (n < 1 || n > kMaxQubits) throw std::invalid_argument("qubit count must be in [1, 24]");
  s.n = n;
  s.amps.resize(std::size_t{1} << n);
  const std::int64_t dim = static_cast<std::int64_t>(s.dim());
  const double a = 1.0 / std::sqrt(static_cast<double>(dim));
  if (pattern == InitPattern::plus) {
#pragma omp parallel for schedule(static) if (dim >= kParallelCutoff)
    for (std::int64_t b = 0; b < dim; ++b) {
      s.amps[static_cast<std::size_t>(b)] = {a, 0.0};
    }
    return;
  }
  // |-> lives on the even-position qubits: bits 1, 3, 5, ...
  const auto minus_mask = static_cast<std::uint32_t>(0xAAAAAAAAu & (s.dim() - 1));
#pragma omp parallel for schedule(static) if (dim >= kParallelCutoff)
  for (std::int64_t b = 0; b < dim; ++b) {
    const bool flip = std::popcount(static_cast<std::uint32_t>(b) & minus_mask) & 1;
    s.amps[static_cast<std::size_t>(b)] = {flip ? -a : a, 0.0};
  }
}

StateVector initial_state(int n, InitPattern pattern) {
  StateVector s;
  initial_state_into(s, n, pattern);
  return s;
}

double norm_squared(const StateVector& state) {
  const std::size_t dim = state.dim();
  const std::size_t nchunks = (dim + kChunk - 1) / kChunk;
  std::vector<double> partial(nchunks, 0.0);
#pragma omp parallel for schedule(static) if (static_cast<std::int64_t>(dim) >= kParallelCutoff)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(nchunks); ++c) {
    const std::size_t lo = static_cast<std::size_t>(c) * kChunk;
    const std::size_t hi = std::min(dim, lo + kChunk);
    double sum = 0.0;
    for (std::size_t b = lo; b < hi; ++b) {
      sum += std::norm(state.amps[b]);
    }
    partial[static_cast<std::size_t>(c)] = sum;
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

std::vector<double> populations(const StateVector& state) {
  std::vector<double> probs(state.dim());
  const std::int64_t dim = static_cast<std::int64_t>(state.dim());
#pragma omp parallel for schedule(static) if (dim >= kParallelCutoff)
  for (std::int64_t b = 0; b < dim; ++b) {
    probs[static_cast<std::size_t>(b)] = std::norm(state.amps[static_cast<std::size_t>(b)]);
  }
  return probs;
}

double phase_aligned_distance(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  std::size_t ref = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const double mag = std::norm(a.amps[i]);
    if (mag > best) {
      best = mag;
      ref = i;
    }
  }
  std::complex<double> phase{1.0, 0.0};
  if (std::abs(b.amps[ref]) > 0.0) {
    phase = a.amps[ref] / b.amps[ref];
    phase /= std::abs(phase);
  }
  double dist = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    dist = std::max(dist, std::abs(a.amps[i] - phase * b.amps[i]));
  }
  return dist;
}

}  // namespace qfactor
