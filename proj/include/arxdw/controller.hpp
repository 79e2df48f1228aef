#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "arxdw/estimator.hpp"
#include "arxdw/model.hpp"
#include "arxdw/rng.hpp"

namespace arxdw::controller {

// Yields the reference value x_{n+1} when called with n.
using ReferenceFn = std::function<double(std::int64_t)>;

ReferenceFn reference_zero();

// Cycles through the given values: x_{n+1} = values[n mod size]. The caller
// is responsible for keeping the sequence bounded.
ReferenceFn reference_bounded(std::vector<double> values);

// Noise wiring for one closed-loop run. The innovation stream and the
// excitation stream carry their own seeds so either can be re-rolled
// without disturbing the other.
struct NoiseConfig {
  NoiseDist v_dist{NoiseKind::gaussian, 1.0};
  NoiseDist xi_dist{NoiseKind::gaussian, 4.0};
  std::uint64_t seed_v = 1;
  std::uint64_t seed_xi = 2;

  // Gaussian streams with the spec's variances, seeded from two disjoint
  // sub-streams of the master seed.
  static NoiseConfig from_master(std::uint64_t master, const model::SystemSpec& spec);
};

// Time-indexed record of one run over burn-in plus evaluation steps.
struct SimulationTrace {
  std::vector<double> x_out;  // X_0 .. X_N
  std::vector<double> u;      // U_0 .. U_{N-1}
  std::vector<double> x_ref;  // x_1 .. x_N
  std::vector<double> xi;     // xi_1 .. xi_N
  int burn_in = 0;
  model::SystemSpec spec;

  std::int64_t steps() const { return static_cast<std::int64_t>(u.size()); }

  // The last n steps: outputs X_burn .. X_N and controls U_burn .. U_{N-1}.
  std::span<const double> window_outputs() const;
  std::span<const double> window_controls() const;

  // Columns k, x, u, x_ref, xi, burn_in with a header row; the flag column
  // is 1 for rows before the evaluation window. Cells that do not exist at
  // a given k (u at the final row, x_ref/xi at k = 0) are left empty.
  void write_csv(std::ostream& os) const;
};

struct RunOptions {
  double x0 = 0.0;
  double eps0 = 0.0;
  // Fail loudly instead of emitting overflowed series.
  double overflow_limit = 1e12;
};

struct RunResult {
  SimulationTrace trace;
  estimator::RlsState rls;
};

// U_n = x_ref_next - <vartheta_hat, phi> + xi_next.
double control_step(std::span<const double> vartheta_hat, std::span<const double> phi,
                    double x_ref_next, double xi_next);

// Runs burn_in + n steps of the excited adaptive tracking loop: form the
// regression vector, apply the control, advance noise and plant, update the
// least squares state. Throws std::runtime_error naming the step if the
// output leaves [-overflow_limit, overflow_limit] or turns non-finite.
RunResult run_closed_loop(const model::SystemSpec& spec, const NoiseConfig& noise,
                          const ReferenceFn& x_ref, int burn_in, int n,
                          const RunOptions& opts = {});

}  // namespace arxdw::controller
