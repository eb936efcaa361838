#pragma once

#include <functional>
#include <span>
#include <vector>

namespace qfactor {

struct NelderMeadOptions {
  double tolerance = 1e-8;    // stop when the simplex f-spread falls below this
  int max_evals = 1000;       // hard budget, counting the initial simplex
  double initial_step = 0.25; // per-coordinate offset of the starting simplex
};

struct NelderMeadResult {
  std::vector<double> x;
  double fx = 0.0;
  int evals = 0;
  bool converged = false;
};

using ObjectiveFn = std::function<double(std::span<const double>)>;

/// Downhill simplex minimization with dimension-adaptive expansion,
/// contraction, and shrink coefficients (the classic constants at d = 2).
/// Deterministic for a given start; never returns a point worse than the
/// initial one.
NelderMeadResult nelder_mead(const ObjectiveFn& f, std::vector<double> x0,
                             const NelderMeadOptions& opts);

}  // namespace qfactor
