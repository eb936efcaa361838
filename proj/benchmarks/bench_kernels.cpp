// Times the OpenMP kernels against the serial reference implementations on a
// register large enough for parallelism to matter, and cross-checks that the
// two paths agree. Build target only; not part of the test suite.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "qfactor/diagonal.hpp"
#include "qfactor/instance.hpp"
#include "qfactor/simulator.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace qfactor;

double now_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

template <typename Fn>
double time_best_of(int reps, Fn&& fn) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const double t0 = now_seconds();
    fn();
    best = std::min(best, now_seconds() - t0);
  }
  return best;
}

void report(const std::string& name, double serial_s, double parallel_s, double max_diff) {
  std::printf("%-18s %10.3f ms %10.3f ms %8.2fx   max|diff| %.3g\n", name.c_str(),
              serial_s * 1e3, parallel_s * 1e3, serial_s / parallel_s, max_diff);
}

double max_abs_diff(const StateVector& a, const StateVector& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.amps.size(); ++i) {
    m = std::max(m, std::abs(a.amps[i] - b.amps[i]));
  }
  return m;
}

}  // namespace

int main() {
  // 59989 = 239 * 251 sizes to 21 qubits: 2M amplitudes, enough work per
  // kernel for the parallel cutoff to engage.
  const Instance inst = Instance::make(59989);
  const BinaryPolynomial f = build_F(inst);

#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled; both columns run the same serial code\n");
#endif
  std::printf("instance N=%llu, n=%d qubits, dim=%zu\n\n",
              static_cast<unsigned long long>(inst.N), inst.n, inst.dim());
  std::printf("%-18s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

  const int reps = 3;

  DiagonalHamiltonian d_serial;
  DiagonalHamiltonian d_parallel;
  const double t_diag_serial =
      time_best_of(reps, [&] { d_serial = serial::diagonal(f, Model::qubo); });
  const double t_diag_parallel =
      time_best_of(reps, [&] { d_parallel = diagonal(f, Model::qubo); });
  double diag_diff = 0.0;
  for (std::size_t i = 0; i < d_serial.energies.size(); ++i) {
    diag_diff = std::max(diag_diff, std::abs(d_serial.energies[i] - d_parallel.energies[i]));
  }
  report("diagonal", t_diag_serial, t_diag_parallel, diag_diff);

  const StateVector base = initial_state(inst.n, InitPattern::alternating);

  StateVector a = base;
  StateVector b = base;
  const double t_phase_serial =
      time_best_of(reps, [&] { serial::apply_phase_separator(a, d_serial, 0.37); });
  const double t_phase_parallel =
      time_best_of(reps, [&] { apply_phase_separator(b, d_parallel, 0.37); });
  report("phase separator", t_phase_serial, t_phase_parallel, max_abs_diff(a, b));

  a = base;
  b = base;
  const double t_mixer_serial = time_best_of(reps, [&] { serial::apply_mixer(a, 0.21); });
  const double t_mixer_parallel = time_best_of(reps, [&] { apply_mixer(b, 0.21); });
  report("mixer", t_mixer_serial, t_mixer_parallel, max_abs_diff(a, b));

  double e_serial = 0.0;
  double e_parallel = 0.0;
  const double t_exp_serial = time_best_of(reps, [&] { e_serial = serial::expectation(a, d_serial); });
  const double t_exp_parallel = time_best_of(reps, [&] { e_parallel = expectation(b, d_parallel); });
  report("expectation", t_exp_serial, t_exp_parallel, std::abs(e_serial - e_parallel));

  return 0;
}
