#include "qfactor/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qfactor {

NelderMeadResult nelder_mead(const ObjectiveFn& f, std::vector<double> x0,
                             const NelderMeadOptions& opts) {
  const std::size_t d = x0.size();
  if (d == 0) throw std::invalid_argument("empty parameter vector");
  if (opts.max_evals < static_cast<int>(d) + 1) {
    throw std::invalid_argument("evaluation budget below initial simplex size");
  }

  // Dimension-adaptive coefficients: the classic 1/2/0.5/0.5 values at d = 2,
  // progressively gentler expansion and contraction as d grows, which keeps
  // the simplex from collapsing prematurely in high-dimensional searches.
  const double dd = static_cast<double>(d);
  const double kReflect = 1.0;
  const double kExpand = 1.0 + 2.0 / dd;
  const double kContract = 0.75 - 1.0 / (2.0 * dd);
  const double kShrink = 1.0 - 1.0 / dd;

  std::vector<std::vector<double>> pts(d + 1, x0);
  std::vector<double> vals(d + 1);
  int evals = 0;
  for (std::size_t i = 1; i <= d; ++i) pts[i][i - 1] += opts.initial_step;
  for (std::size_t i = 0; i <= d; ++i) {
    vals[i] = f(pts[i]);
    ++evals;
  }

  std::vector<std::size_t> order(d + 1);
  std::iota(order.begin(), order.end(), 0);
  auto sort_simplex = [&] {
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (vals[a] != vals[b]) return vals[a] < vals[b];
      return a < b;  // deterministic tie-break
    });
  };

  bool converged = false;
  std::vector<double> centroid(d), xr(d), xe(d), xc(d);
  while (evals < opts.max_evals) {
    sort_simplex();
    const std::size_t best = order[0];
    const std::size_t second_worst = order[d - 1];
    const std::size_t worst = order[d];
    if (vals[worst] - vals[best] <= opts.tolerance) {
      converged = true;
      break;
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t i = 0; i < d; ++i) centroid[i] += pts[order[k]][i];
    }
    for (double& c : centroid) c /= static_cast<double>(d);

    for (std::size_t i = 0; i < d; ++i) {
      xr[i] = centroid[i] + kReflect * (centroid[i] - pts[worst][i]);
    }
    const double fr = f(xr);
    ++evals;

    if (fr < vals[best]) {
      if (evals >= opts.max_evals) {
        pts[worst] = xr;
        vals[worst] = fr;
        break;
      }
      for (std::size_t i = 0; i < d; ++i) {
        xe[i] = centroid[i] + kExpand * (xr[i] - centroid[i]);
      }
      const double fe = f(xe);
      ++evals;
      if (fe < fr) {
        pts[worst] = xe;
        vals[worst] = fe;
      } else {
        pts[worst] = xr;
        vals[worst] = fr;
      }
      continue;
    }
    if (fr < vals[second_worst]) {
      pts[worst] = xr;
      vals[worst] = fr;
      continue;
    }

    const bool outside = fr < vals[worst];
    if (evals >= opts.max_evals) break;
    if (outside) {
      for (std::size_t i = 0; i < d; ++i) {
        xc[i] = centroid[i] + kContract * (xr[i] - centroid[i]);
      }
    } else {
      for (std::size_t i = 0; i < d; ++i) {
        xc[i] = centroid[i] + kContract * (pts[worst][i] - centroid[i]);
      }
    }
    const double fc = f(xc);
    ++evals;
    if (fc < (outside ? fr : vals[worst])) {
      pts[worst] = xc;
      vals[worst] = fc;
      continue;
    }

    // shrink toward the best vertex; vertices left unevaluated by the
    // budget stay where they were so pts and vals agree
    for (std::size_t k = 1; k <= d; ++k) {
      if (evals >= opts.max_evals) break;
      const std::size_t idx = order[k];
      for (std::size_t i = 0; i < d; ++i) {
        pts[idx][i] = pts[best][i] + kShrink * (pts[idx][i] - pts[best][i]);
      }
      vals[idx] = f(pts[idx]);
      ++evals;
    }
  }

  sort_simplex();
  NelderMeadResult result;
  result.x = pts[order[0]];
  result.fx = vals[order[0]];
  result.evals = evals;
  result.converged = converged;
  return result;
}

}  // namespace qfactor
