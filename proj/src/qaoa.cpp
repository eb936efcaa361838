#include "qfactor/qaoa.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qfactor/nelder_mead.hpp"
#include "qfactor/rng.hpp"

namespace qfactor {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::span<const double> gammas_of(std::span<const double> flat, int layers) {
  return flat.subspan(0, static_cast<std::size_t>(layers));
}

std::span<const double> betas_of(std::span<const double> flat, int layers) {
  return flat.subspan(static_cast<std::size_t>(layers), static_cast<std::size_t>(layers));
}

}  // namespace

std::vector<double> flatten(const QaoaParams& params) {
  if (params.gammas.size() != params.betas.size()) {
    throw std::invalid_argument("gamma/beta length mismatch");
  }
  std::vector<double> flat;
  flat.reserve(2 * params.gammas.size());
  flat.insert(flat.end(), params.gammas.begin(), params.gammas.end());
  flat.insert(flat.end(), params.betas.begin(), params.betas.end());
  return flat;
}

QaoaParams unflatten(std::span<const double> flat) {
  if (flat.size() % 2 != 0) throw std::invalid_argument("odd flat parameter count");
  const std::size_t l = flat.size() / 2;
  QaoaParams params;
  params.gammas.assign(flat.begin(), flat.begin() + l);
  params.betas.assign(flat.begin() + l, flat.end());
  return params;
}

QaoaParams canonicalized(const QaoaParams& params) {
  QaoaParams out = params;
  for (double& g : out.gammas) g = std::remainder(g, kTwoPi);
  for (double& b : out.betas) b = std::remainder(b, kTwoPi);
  return out;
}

InitPattern default_pattern(Model model) {
  return model == Model::qubo ? InitPattern::alternating : InitPattern::plus;
}

QaoaProblem make_problem(const Instance& inst, Model model, InitPattern init) {
  QaoaProblem problem;
  problem.inst = inst;
  problem.model = model;
  problem.init = init;
  const BinaryPolynomial f = build_F(inst);
  if (model == Model::pubo) {
    problem.generator = diagonal(square(f), model);
    problem.objective = problem.generator;
  } else {
    problem.generator = diagonal(f, model);
    problem.objective = abs_diagonal(problem.generator);
  }
  return problem;
}

QaoaProblem make_problem(const Instance& inst, Model model) {
  return make_problem(inst, model, default_pattern(model));
}

double cost(const StateVector& state, const QaoaProblem& problem) {
  return expectation(state, problem.objective);
}

StateVector run_ansatz(const QaoaProblem& problem, const QaoaParams& params) {
  if (params.gammas.size() != params.betas.size()) {
    throw std::invalid_argument("gamma/beta length mismatch");
  }
  return qfactor::run_ansatz(problem.generator, params.gammas, params.betas, problem.init,
                             problem.mixer);
}

DepthOptimum optimize_depth(const QaoaProblem& problem, int layers, std::uint64_t seed,
                            int restarts, std::span<const double> warm) {
  if (layers < 1) throw std::invalid_argument("layers must be >= 1");
  if (restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  const std::size_t d = 2 * static_cast<std::size_t>(layers);
  if (!warm.empty() && warm.size() != d - 2) {
    throw std::invalid_argument("warm start must carry exactly one layer less");
  }

  // All start points are fixed up front so the restart loop can run in any
  // order. Start 0 reproduces the previous circuit exactly: the appended
  // zero layer is a bit-exact identity, which makes the depth sweep's cost
  // sequence non-increasing by construction.
  std::vector<std::vector<double>> starts(static_cast<std::size_t>(restarts));
  starts[0].assign(d, 0.0);
  if (!warm.empty()) {
    const std::size_t lp = warm.size() / 2;
    for (std::size_t i = 0; i < lp; ++i) {
      starts[0][i] = warm[i];
      starts[0][static_cast<std::size_t>(layers) + i] = warm[lp + i];
    }
  }
  for (int r = 1; r < restarts; ++r) {
    SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(layers),
                               static_cast<std::uint64_t>(r)));
    auto& start = starts[static_cast<std::size_t>(r)];
    start.resize(d);
    for (double& x : start) x = rng.uniform(-kPi, kPi);
  }

  const int budget = 500 * layers;
  NelderMeadOptions opts;
  opts.tolerance = 1e-8;
  opts.max_evals = budget;

  std::vector<NelderMeadResult> results(static_cast<std::size_t>(restarts));
#pragma omp parallel for schedule(dynamic) if (restarts > 1)
  for (int r = 0; r < restarts; ++r) {
    StateVector scratch = StateVector::zeros(problem.inst.n);
    const ObjectiveFn objective = [&](std::span<const double> x) {
      run_ansatz_into(scratch, problem.generator, gammas_of(x, layers), betas_of(x, layers),
                      problem.init, problem.mixer);
      return expectation(scratch, problem.objective);
    };
    NelderMeadResult acc = nelder_mead(objective, starts[static_cast<std::size_t>(r)], opts);
    // A collapsed simplex that met the tolerance may still have budget left;
    // re-seeding a full-size simplex at the incumbent escapes the collapse
    // and spends the whole per-start allowance. A restart that fails to
    // improve would repeat itself verbatim, so stop there.
    while (acc.evals + static_cast<int>(d) + 2 <= budget) {
      NelderMeadOptions remaining = opts;
      remaining.max_evals = budget - acc.evals;
      const NelderMeadResult next = nelder_mead(objective, acc.x, remaining);
      acc.evals += next.evals;
      acc.converged = next.converged;
      if (next.fx < acc.fx) {
        acc.x = next.x;
        acc.fx = next.fx;
      } else {
        break;
      }
    }
    results[static_cast<std::size_t>(r)] = std::move(acc);
  }

  // Serial reduction: lowest cost wins, ties go to the lower restart index.
  std::size_t best = 0;
  std::int64_t evals = results[0].evals;
  for (std::size_t r = 1; r < results.size(); ++r) {
    evals += results[r].evals;
    if (results[r].fx < results[best].fx) best = r;
  }

  DepthOptimum out;
  out.layers = layers;
  out.raw = results[best].x;
  out.params = canonicalized(unflatten(out.raw));
  out.c_min = results[best].fx;
  out.converged = results[best].converged;
  out.best_restart = static_cast<int>(best);
  out.evals = evals;
  return out;
}

RunRecord depth_sweep(const QaoaProblem& problem, int max_layers, std::uint64_t seed,
                      int restarts) {
  if (max_layers < 1) throw std::invalid_argument("layers must be >= 1");

  RunRecord record;
  record.model = problem.model;
  record.init = problem.init;
  record.seed = seed;
  record.restarts = restarts;
  record.depths.reserve(static_cast<std::size_t>(max_layers));

  std::vector<double> warm;
  StateVector state = StateVector::zeros(problem.inst.n);
  double first_cost = 0.0;
  double prev_cost = 0.0;

  for (int l = 1; l <= max_layers; ++l) {
    const DepthOptimum opt = optimize_depth(problem, l, seed, restarts, warm);

    run_ansatz_into(state, problem.generator, gammas_of(opt.raw, l), betas_of(opt.raw, l),
                    problem.init, problem.mixer);

    DepthRecord depth;
    depth.layers = l;
    depth.c_min = opt.c_min;
    depth.params = opt.params;
    depth.fidelity = fidelity(state, problem.inst);
    depth.confidence = confidence(populations(state));
    depth.populations = population_report(state, problem.inst, kTopPopulations);
    depth.converged = opt.converged;
    if (l == 1) {
      first_cost = opt.c_min;
      depth.cost_ratio_prev = 1.0;
      depth.cost_ratio_first = 1.0;
    } else {
      // A zero denominator forces a zero numerator (costs are nonnegative
      // and non-increasing), so the ratio degenerates to 1.
      depth.cost_ratio_prev = prev_cost > 0.0 ? opt.c_min / prev_cost : 1.0;
      depth.cost_ratio_first = first_cost > 0.0 ? opt.c_min / first_cost : 1.0;
    }
    prev_cost = opt.c_min;
    warm = opt.raw;
    record.depths.push_back(std::move(depth));
  }
  return record;
}

}  // namespace qfactor
