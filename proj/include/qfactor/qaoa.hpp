#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qfactor/analysis.hpp"
#include "qfactor/diagonal.hpp"
#include "qfactor/instance.hpp"
#include "qfactor/simulator.hpp"
#include "qfactor/statevector.hpp"

namespace qfactor {

/// Entries shown individually in per-depth population reports.
inline constexpr int kTopPopulations = 8;

struct QaoaParams {
  std::vector<double> gammas;
  std::vector<double> betas;
};

/// Flat optimizer layout: gammas block then betas block, so a flat vector of
/// size 2l splits into two spans without copying.
std::vector<double> flatten(const QaoaParams& params);
QaoaParams unflatten(std::span<const double> flat);

/// Angles folded into [-pi, pi] by 2*pi periodicity.
QaoaParams canonicalized(const QaoaParams& params);

/// Everything one variational run needs. `generator` drives the phase
/// separator (the signed two-body Hamiltonian for qubo, its square for
/// pubo); `objective` drives the cost (elementwise |.| of the generator for
/// qubo, the generator itself for pubo).
struct QaoaProblem {
  Instance inst;
  Model model = Model::qubo;
  InitPattern init = InitPattern::alternating;
  MixerSpec mixer;
  DiagonalHamiltonian generator;
  DiagonalHamiltonian objective;
};

/// alternating for qubo, plus for pubo.
InitPattern default_pattern(Model model);

QaoaProblem make_problem(const Instance& inst, Model model, InitPattern init);
QaoaProblem make_problem(const Instance& inst, Model model);

/// The model's cost function evaluated on a prepared state.
double cost(const StateVector& state, const QaoaProblem& problem);

StateVector run_ansatz(const QaoaProblem& problem, const QaoaParams& params);

/// Result of one multi-start optimization at fixed depth.
struct DepthOptimum {
  int layers = 0;
  std::vector<double> raw;  // uncanonicalized optimum; seeds the next depth
  QaoaParams params;        // canonicalized copy for reporting
  double c_min = 0.0;
  bool converged = false;
  int best_restart = 0;
  std::int64_t evals = 0;
};

/// Multi-start simplex descent over 2*layers angles. Start 0 is the warm
/// start extended by one zero layer pair (or the all-zero point when no warm
/// start is given); starts 1..restarts-1 are uniform draws in [-pi, pi]
/// derived from (seed, layers, restart). Deterministic regardless of how
/// restarts are scheduled.
DepthOptimum optimize_depth(const QaoaProblem& problem, int layers, std::uint64_t seed,
                            int restarts, std::span<const double> warm = {});

struct DepthRecord {
  int layers = 0;
  double c_min = 0.0;
  QaoaParams params;
  double fidelity = 0.0;
  double confidence = 0.0;
  PopulationReport populations;
  double cost_ratio_prev = 1.0;   // C_l / C_{l-1}; 1 when the previous cost is 0
  double cost_ratio_first = 1.0;  // C_l / C_{l=1}
  bool converged = false;
};

struct RunRecord {
  Model model = Model::qubo;
  InitPattern init = InitPattern::alternating;
  std::uint64_t seed = 0;
  int restarts = 0;
  std::vector<DepthRecord> depths;
};

/// Optimizes depth 1..max_layers, warm-starting each depth from the
/// previous raw optimum; C_min is therefore non-increasing in the depth.
RunRecord depth_sweep(const QaoaProblem& problem, int max_layers, std::uint64_t seed,
                      int restarts);

}  // namespace qfactor
