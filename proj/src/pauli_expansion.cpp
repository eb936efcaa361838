#include "qfactor/pauli_expansion.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qfactor {

double PauliZExpansion::evaluate(std::uint32_t b) const {
  double value = 0.0;
  for (const auto& [mask, coeff] : terms) {
    value += (std::popcount(mask & b) & 1) ? -coeff : coeff;
  }
  return value;
}

int PauliZExpansion::max_weight() const {
  int w = 0;
  for (const auto& [mask, coeff] : terms) {
    w = std::max(w, std::popcount(mask));
  }
  return w;
}

std::size_t PauliZExpansion::weight_count(int weight) const {
  std::size_t count = 0;
  for (const auto& [mask, coeff] : terms) {
    if (std::popcount(mask) == weight) ++count;
  }
  return count;
}

PauliZExpansion to_pauli(const BinaryPolynomial& poly) {
  if (poly.n > 24) throw std::invalid_argument("expansion requires n <= 24 qubits");
  PauliZExpansion out;
  out.n = poly.n;
  for (const auto& [vars, coeff] : poly.terms) {
    const int w = std::popcount(vars);
    const double scale = static_cast<double>(coeff) / static_cast<double>(std::uint64_t{1} << w);
    // prod_{i in vars} (1 - Z_i)/2 expands over all subsets of vars
    std::uint32_t sub = vars;
    while (true) {
      const double signed_c = (std::popcount(sub) & 1) ? -scale : scale;
      auto [it, inserted] = out.terms.emplace(sub, signed_c);
      if (!inserted) it->second += signed_c;
      if (sub == 0) break;
      sub = (sub - 1) & vars;
    }
  }
  std::erase_if(out.terms, [](const auto& kv) { return kv.second == 0.0; });
  return out;
}

}  // namespace qfactor
