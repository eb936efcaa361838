#include "qfactor/diagonal.hpp"

#include <cmath>
#include <stdexcept>

namespace qfactor {

namespace {
constexpr int kMaxQubits = 24;
constexpr std::int64_t kParallelCutoff = 1 << 14;
}  // namespace

std::string_view model_name(Model model) {
  return model == Model::qubo ? "qubo" : "pubo";
}

Model parse_model(std::string_view name) {
  if (name == "qubo") return Model::qubo;
  if (name == "pubo") return Model::pubo;
  throw std::invalid_argument("model must be 'qubo' or 'pubo'");
}

DiagonalHamiltonian diagonal(const BinaryPolynomial& poly, Model model) {
  if (poly.n > kMaxQubits) throw std::invalid_argument("diagonal requires n <= 24 qubits");
  DiagonalHamiltonian d;
  d.model = model;
  d.n = poly.n;
  const std::int64_t dim = std::int64_t{1} << poly.n;
  d.energies.resize(static_cast<std::size_t>(dim));
#pragma omp parallel for schedule(static) if (dim >= kParallelCutoff)
  for (std::int64_t b = 0; b < dim; ++b) {
    d.energies[static_cast<std::size_t>(b)] =
        static_cast<double>(poly.evaluate(static_cast<std::uint32_t>(b)));
  }
  return d;
}

DiagonalHamiltonian abs_diagonal(const DiagonalHamiltonian& d) {
  DiagonalHamiltonian out;
  out.model = d.model;
  out.n = d.n;
  out.energies.resize(d.energies.size());
  const std::int64_t dim = static_cast<std::int64_t>(d.energies.size());
#pragma omp parallel for schedule(static) if (dim >= kParallelCutoff)
  for (std::int64_t b = 0; b < dim; ++b) {
    out.energies[static_cast<std::size_t>(b)] = std::abs(d.energies[static_cast<std::size_t>(b)]);
  }
  return out;
}

namespace serial {

DiagonalHamiltonian diagonal(const BinaryPolynomial& poly, Model model) {
  if (poly.n > kMaxQubits) throw std::invalid_argument("diagonal requires n <= 24 qubits");
  DiagonalHamiltonian d;
  d.model = model;
  d.n = poly.n;
  const std::uint64_t dim = std::uint64_t{1} << poly.n;
  d.energies.resize(dim);
  for (std::uint64_t b = 0; b < dim; ++b) {
    d.energies[b] = static_cast<double>(poly.evaluate(static_cast<std::uint32_t>(b)));
  }
  return d;
}

}  // namespace serial

}  // namespace qfactor
