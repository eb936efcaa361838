#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "qfactor/analysis.hpp"
#include "qfactor/instance.hpp"

using namespace qfactor;

namespace {

DiagonalHamiltonian model_diagonal(const Instance& inst, Model model) {
  BinaryPolynomial f = build_F(inst);
  if (model == Model::pubo) f = square(f);
  return diagonal(f, model);
}

StateVector basis_state(int n, std::uint32_t b) {
  StateVector state = StateVector::zeros(n);
  state.amps[b] = 1.0;
  return state;
}

}  // namespace

TEST_CASE("fidelity sums squared overlap over the solution set") {
  const Instance inst25 = Instance::make(25);
  CHECK(fidelity(basis_state(4, inst25.solutions[0]), inst25) == 1.0);
  CHECK(fidelity(initial_state(4, InitPattern::plus), inst25) ==
        doctest::Approx(1.0 / 16.0).epsilon(1e-12));

  const Instance inst35 = Instance::make(35);
  CHECK(fidelity(initial_state(5, InitPattern::plus), inst35) ==
        doctest::Approx(2.0 / 32.0).epsilon(1e-12));

  // invariant under a global phase
  StateVector rotated = basis_state(4, inst25.solutions[0]);
  rotated.amps[inst25.solutions[0]] = std::polar(1.0, 1.234);
  CHECK(fidelity(rotated, inst25) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("confidence is the normalized entropy complement") {
  std::vector<double> uniform(16, 1.0 / 16.0);
  CHECK(confidence(uniform) == doctest::Approx(0.0));

  std::vector<double> delta(16, 0.0);
  delta[3] = 1.0;
  CHECK(confidence(delta) == doctest::Approx(1.0));

  std::vector<double> half(16, 0.0);
  half[0] = 0.5;
  half[5] = 0.5;
  CHECK(confidence(half) == doctest::Approx(0.75).epsilon(1e-12));

  std::vector<double> unnormalized(16, 0.25);
  CHECK_THROWS_AS(confidence(unnormalized), std::invalid_argument);
  std::vector<double> negative(4, 0.5);
  negative[0] = -0.5;
  CHECK_THROWS_AS(confidence(negative), std::invalid_argument);
}

TEST_CASE("spectrum_report normalizes by the largest magnitude") {
  const Instance inst = Instance::make(25);
  const SpectrumReport qubo = spectrum_report(model_diagonal(inst, Model::qubo), inst);
  CHECK(qubo.e_max == 24.0);
  CHECK(qubo.entries[0].energy == 24.0);
  CHECK(qubo.entries[0].abs_normalized == 1.0);
  CHECK(qubo.entries[15].energy == -24.0);
  CHECK(qubo.entries[15].abs_normalized == 1.0);

  const SpectrumReport pubo = spectrum_report(model_diagonal(inst, Model::pubo), inst);
  CHECK(pubo.e_max == 576.0);

  for (const SpectrumEntry& e : qubo.entries) {
    CHECK(e.abs_normalized >= 0.0);
    CHECK(e.abs_normalized <= 1.0);
    CHECK((e.abs_normalized == 0.0) == e.is_solution);
  }

  // the sorted view is a permutation with ties broken by ascending index
  std::vector<std::uint32_t> sorted = qubo.sorted_order;
  std::sort(sorted.begin(), sorted.end());
  for (std::uint32_t i = 0; i < sorted.size(); ++i) CHECK(sorted[i] == i);
  for (std::size_t r = 1; r < qubo.sorted_order.size(); ++r) {
    const std::uint32_t a = qubo.sorted_order[r - 1];
    const std::uint32_t b = qubo.sorted_order[r];
    const double ea = qubo.entries[a].abs_normalized;
    const double eb = qubo.entries[b].abs_normalized;
    CHECK(ea <= eb);
    if (ea == eb) CHECK(a < b);
  }
  for (std::uint32_t b = 0; b < qubo.sorted_rank.size(); ++b) {
    CHECK(qubo.sorted_order[qubo.sorted_rank[b]] == b);
  }
  // the solution occupies rank 0: it is the unique zero of the spectrum
  CHECK(qubo.sorted_order[0] == inst.solutions[0]);
}

TEST_CASE("near_zero_density separates the two encodings") {
  for (const std::uint64_t N : {std::uint64_t{119}, std::uint64_t{143}}) {
    CAPTURE(N);
    const Instance inst = Instance::make(N);
    const DiagonalHamiltonian qubo = model_diagonal(inst, Model::qubo);
    const DiagonalHamiltonian pubo = model_diagonal(inst, Model::pubo);
    double prev_q = 0.0, prev_p = 0.0;
    for (const double delta : {0.01, 0.02, 0.05, 0.1}) {
      const double dq = near_zero_density(qubo, delta);
      const double dp = near_zero_density(pubo, delta);
      CHECK(dp > dq);        // the squared form piles states near zero
      CHECK(dq >= prev_q);   // monotone in delta
      CHECK(dp >= prev_p);
      prev_q = dq;
      prev_p = dp;
    }
  }
}

TEST_CASE("near_zero_density clamps and validates delta") {
  const Instance inst = Instance::make(25);
  const DiagonalHamiltonian d = model_diagonal(inst, Model::qubo);
  CHECK(near_zero_density(d, 2.0) == near_zero_density(d, 1.0));
  // delta = 1 counts everything below the extremes
  const double density = near_zero_density(d, 1.0);
  CHECK(density == doctest::Approx(14.0 / 16.0));  // +24 and -24 are excluded
  CHECK_THROWS_AS(near_zero_density(d, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(near_zero_density(d, -0.3), std::invalid_argument);

  DiagonalHamiltonian flat{Model::qubo, 1, {0.0, 0.0}};
  CHECK_THROWS_AS(near_zero_density(flat, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(spectrum_report(flat, inst), std::invalid_argument);
}

TEST_CASE("population_report ranks, annotates and aggregates") {
  const Instance inst = Instance::make(25);
  const std::uint32_t sol = inst.solutions[0];

  const PopulationReport one = population_report(basis_state(4, sol), inst, 1);
  REQUIRE(one.top.size() == 1);
  CHECK(one.top[0].index == sol);
  CHECK(one.top[0].probability == 1.0);
  CHECK(one.top[0].is_solution);
  CHECK(one.others == 0.0);
  CHECK(one.solution_first);

  const PopulationReport uni = population_report(initial_state(4, InitPattern::plus), inst, 4);
  REQUIRE(uni.top.size() == 4);
  double shown = 0.0;
  for (const PopulationEntry& e : uni.top) {
    CHECK(e.probability == doctest::Approx(1.0 / 16.0).epsilon(1e-12));
    shown += e.probability;
  }
  CHECK(uni.others == doctest::Approx(12.0 / 16.0).epsilon(1e-12));
  CHECK(shown + uni.others == doctest::Approx(1.0).epsilon(1e-10));
  // ties resolve by ascending basis index, so ranks are deterministic
  CHECK(uni.top[0].index == 0);
  CHECK(uni.top[3].index == 3);
}

TEST_CASE("solution_rank counts strictly better-populated states") {
  const Instance inst = Instance::make(25);
  const std::uint32_t sol = inst.solutions[0];
  CHECK(solution_rank(basis_state(4, sol), inst) == 1);

  StateVector skewed = StateVector::zeros(4);
  skewed.amps[0] = std::sqrt(0.5);
  skewed.amps[1] = std::sqrt(0.3);
  skewed.amps[sol] = std::sqrt(0.2);
  CHECK(solution_rank(skewed, inst) == 3);

  // uniform: ties ahead of the solution index count against it
  CHECK(solution_rank(initial_state(4, InitPattern::plus), inst) ==
        static_cast<int>(sol) + 1);
}
