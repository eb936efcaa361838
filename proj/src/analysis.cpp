#include "qfactor/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qfactor {

double fidelity(const StateVector& state, const Instance& inst) {
  double total = 0.0;
  for (const std::uint32_t b : inst.solutions) {
    total += std::norm(state.amps[b]);
  }
  return total;
}

double confidence(std::span<const double> populations) {
  if (populations.empty()) throw std::invalid_argument("empty distribution");
  double sum = 0.0;
  double entropy = 0.0;
  for (const double p : populations) {
    if (p < -1e-12) throw std::invalid_argument("negative probability");
    sum += p;
    if (p > 0.0) entropy -= p * std::log(p);
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw std::invalid_argument("distribution is not normalized");
  }
  const double h_max = std::log(static_cast<double>(populations.size()));
  if (h_max == 0.0) return 1.0;
  return 1.0 - entropy / h_max;
}

SpectrumReport spectrum_report(const DiagonalHamiltonian& d, const Instance& inst) {
  const std::uint64_t dim = d.dim();
  SpectrumReport report;
  report.entries.reserve(dim);

  double e_max = 0.0;
  for (const double e : d.energies) e_max = std::max(e_max, std::abs(e));
  if (e_max == 0.0) throw std::invalid_argument("spectrum is identically zero");
  report.e_max = e_max;

  for (std::uint64_t b = 0; b < dim; ++b) {
    const double e = d.energies[b];
    const double scaled = std::abs(e) / e_max;
    const bool sol = std::binary_search(inst.solutions.begin(), inst.solutions.end(),
                                        static_cast<std::uint32_t>(b));
    report.entries.push_back({static_cast<std::uint32_t>(b), e, scaled, sol});
  }

  report.sorted_order.resize(dim);
  std::iota(report.sorted_order.begin(), report.sorted_order.end(), 0u);
  std::stable_sort(report.sorted_order.begin(), report.sorted_order.end(),
                   [&](std::uint32_t a, std::uint32_t b) {
                     const double ea = report.entries[a].abs_normalized;
                     const double eb = report.entries[b].abs_normalized;
                     if (ea != eb) return ea < eb;
                     return a < b;
                   });
  report.sorted_rank.resize(dim);
  for (std::uint64_t r = 0; r < dim; ++r) {
    report.sorted_rank[report.sorted_order[r]] = static_cast<std::uint32_t>(r);
  }
  return report;
}

double near_zero_density(const DiagonalHamiltonian& d, double delta) {
  if (delta <= 0.0) throw std::invalid_argument("delta must be positive");
  delta = std::min(delta, 1.0);
  double e_max = 0.0;
  for (const double e : d.energies) e_max = std::max(e_max, std::abs(e));
  if (e_max == 0.0) throw std::invalid_argument("spectrum is identically zero");
  std::uint64_t count = 0;
  for (const double e : d.energies) {
    if (std::abs(e) / e_max < delta) ++count;
  }
  return static_cast<double>(count) / static_cast<double>(d.dim());
}

PopulationReport population_report(const StateVector& state, const Instance& inst, int top_k) {
  if (top_k < 0) throw std::invalid_argument("top_k must be non-negative");
  const std::vector<double> probs = populations(state);
  std::vector<std::uint32_t> order(probs.size());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (probs[a] != probs[b]) return probs[a] > probs[b];
    return a < b;
  });

  PopulationReport report;
  const std::size_t keep = std::min<std::size_t>(top_k, order.size());
  double kept = 0.0;
  for (std::size_t i = 0; i < keep; ++i) {
    const std::uint32_t b = order[i];
    const bool sol = std::binary_search(inst.solutions.begin(), inst.solutions.end(), b);
    report.top.push_back({b, probs[b], sol});
    kept += probs[b];
  }
  report.others = std::max(0.0, 1.0 - kept);
  report.solution_first = !report.top.empty() && report.top.front().is_solution;
  return report;
}

int solution_rank(const StateVector& state, const Instance& inst) {
  const std::vector<double> probs = populations(state);
  // highest-populated solution state
  std::uint32_t best_sol = inst.solutions.front();
  for (const std::uint32_t s : inst.solutions) {
    if (probs[s] > probs[best_sol]) best_sol = s;
  }
  // rank = 1 + number of states strictly more populated, plus ties on
  // lower basis index so the rank matches the descending stable sort
  int rank = 1;
  for (std::uint32_t b = 0; b < probs.size(); ++b) {
    if (b == best_sol) continue;
    if (probs[b] > probs[best_sol] || (probs[b] == probs[best_sol] && b < best_sol)) {
      ++rank;
    }
  }
  return rank;
}

}  // namespace qfactor
