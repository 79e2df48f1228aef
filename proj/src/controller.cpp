#include "arxdw/controller.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace arxdw::controller {

ReferenceFn reference_zero() {
  return [](std::int64_t) { return 0.0; };
}

ReferenceFn reference_bounded(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("reference_bounded: empty sequence");
  return [values = std::move(values)](std::int64_t n) {
    return values[static_cast<std::size_t>(n) % values.size()];
  };
}

NoiseConfig NoiseConfig::from_master(std::uint64_t master, const model::SystemSpec& spec) {
  NoiseConfig cfg;
  cfg.v_dist = {NoiseKind::gaussian, spec.sigma2};
  cfg.xi_dist = {NoiseKind::gaussian, spec.nu2};
  cfg.seed_v = derive_seed(master, {0x56});
  cfg.seed_xi = derive_seed(master, {0x58});
  return cfg;
}

std::span<const double> SimulationTrace::window_outputs() const {
  return std::span<const double>(x_out).subspan(static_cast<std::size_t>(burn_in));
}

std::span<const double> SimulationTrace::window_controls() const {
  return std::span<const double>(u).subspan(static_cast<std::size_t>(burn_in));
}

void SimulationTrace::write_csv(std::ostream& os) const {
  os.precision(17);
  os << "k,x,u,x_ref,xi,burn_in\n";
  const std::size_t total = x_out.size();
  for (std::size_t k = 0; k < total; ++k) {
    os << k << ',' << x_out[k] << ',';
    if (k < u.size()) os << u[k];
    os << ',';
    if (k >= 1) os << x_ref[k - 1];
    os << ',';
    if (k >= 1) os << xi[k - 1];
    os << ',' << (static_cast<int>(k) < burn_in ? 1 : 0) << '\n';
  }
}

double control_step(std::span<const double> vartheta_hat, std::span<const double> phi,
                    double x_ref_next, double xi_next) {
  if (vartheta_hat.size() != phi.size())
    throw std::invalid_argument("control_step: dimension mismatch");
  double predicted = 0.0;
  for (std::size_t i = 0; i < phi.size(); ++i) predicted += vartheta_hat[i] * phi[i];
  return x_ref_next - predicted + xi_next;
}

RunResult run_closed_loop(const model::SystemSpec& spec, const NoiseConfig& noise,
                          const ReferenceFn& x_ref, int burn_in, int n,
                          const RunOptions& opts) {
  spec.validate();
  if (burn_in < 0) throw std::invalid_argument("run_closed_loop: burn_in must be >= 0");
  if (n < 1) throw std::invalid_argument("run_closed_loop: n must be >= 1");
  if (!x_ref) throw std::invalid_argument("run_closed_loop: missing reference generator");

  const std::int64_t total = static_cast<std::int64_t>(burn_in) + n;
  NoiseStream v_stream(noise.v_dist, noise.seed_v);
  NoiseStream xi_stream(noise.xi_dist, noise.seed_xi);
  model::LoopState state(spec.p, opts.x0, opts.eps0);
  estimator::RlsState rls(spec.p);

  SimulationTrace trace;
  trace.burn_in = burn_in;
  trace.spec = spec;
  trace.x_out.reserve(static_cast<std::size_t>(total) + 1);
  trace.u.reserve(static_cast<std::size_t>(total));
  trace.x_ref.reserve(static_cast<std::size_t>(total));
  trace.xi.reserve(static_cast<std::size_t>(total));
  trace.x_out.push_back(opts.x0);

  for (std::int64_t k = 0; k < total; ++k) {
    const std::vector<double> phi = state.regression_vector();
    const double ref_next = x_ref(k);
    const double xi_next = xi_stream.next();
    const double u = control_step(rls.vartheta_hat(), phi, ref_next, xi_next);

    const double v = v_stream.next();
    const double eps_next = model::noise_step(state.eps(), spec.rho, v);
    const double x_next = model::plant_step(state, spec, u, eps_next);
    if (!std::isfinite(x_next) || std::abs(x_next) > opts.overflow_limit)
      throw std::runtime_error("run_closed_loop: output overflow at step " + std::to_string(k));

    estimator::rls_update(rls, phi, x_next, u);
    state.advance(x_next, u, eps_next);

    trace.u.push_back(u);
    trace.x_ref.push_back(ref_next);
    trace.xi.push_back(xi_next);
    trace.x_out.push_back(x_next);
  }

  return RunResult{std::move(trace), std::move(rls)};
}

}  // namespace arxdw::controller
