#pragma once

// Shared fixtures for the unit and acceptance suites: regression-vector
// reconstruction from traces, preset specs, and a memoized replication
// collector so several statistical checks can share one simulation batch.

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "arxdw/config.hpp"
#include "arxdw/controller.hpp"
#include "arxdw/matrix.hpp"
#include "arxdw/montecarlo.hpp"

namespace testing_support {

inline arxdw::model::SystemSpec preset(const std::string& name, double rho, double sigma2,
                                       double nu2) {
  arxdw::montecarlo::ExperimentConfig cfg = arxdw::cli::default_config();
  arxdw::cli::apply_model_preset(cfg, name);
  arxdw::model::SystemSpec spec = cfg.spec;
  spec.rho = rho;
  spec.sigma2 = sigma2;
  spec.nu2 = nu2;
  spec.validate();
  return spec;
}

// Regression vector at step k rebuilt from the trace record, matching the
// loop's conventions (zeros before time zero).
inline std::vector<double> phi_at(const arxdw::controller::SimulationTrace& trace,
                                  std::int64_t k) {
  const int p = trace.spec.p;
  std::vector<double> phi(static_cast<std::size_t>(p) + 2, 0.0);
  for (int lag = 0; lag <= p; ++lag) {
    const std::int64_t idx = k - lag;
    if (idx >= 0) phi[static_cast<std::size_t>(lag)] = trace.x_out[static_cast<std::size_t>(idx)];
  }
  if (k >= 1) phi[static_cast<std::size_t>(p) + 1] = trace.u[static_cast<std::size_t>(k - 1)];
  return phi;
}

// Identity plus the sum of phi phi^t over every step of the trace.
inline arxdw::Matrix gram_plus_identity(const arxdw::controller::SimulationTrace& trace) {
  const std::size_t dim = static_cast<std::size_t>(trace.spec.p) + 2;
  arxdw::Matrix s = arxdw::Matrix::identity(dim);
  for (std::int64_t k = 0; k < trace.steps(); ++k) {
    const std::vector<double> phi = phi_at(trace, k);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) s(i, j) += phi[i] * phi[j];
  }
  return s;
}

// Replication batch for (model, rho, n), memoized per process.
inline const std::vector<arxdw::dwtest::TestReport>& cached_reports(const std::string& model,
                                                                    double rho, int n, int reps,
                                                                    std::uint64_t seed) {
  using Key = std::tuple<std::string, double, int, int, std::uint64_t>;
  static std::map<Key, std::vector<arxdw::dwtest::TestReport>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  const Key key{model, rho, n, reps, seed};
  auto it = cache.find(key);
  if (it == cache.end()) {
    arxdw::montecarlo::ExperimentConfig cfg = arxdw::cli::default_config();
    arxdw::cli::apply_model_preset(cfg, model);
    cfg.replications = reps;
    cfg.master_seed = seed;
    it = cache.emplace(key, arxdw::montecarlo::collect_reports(cfg, rho, n)).first;
  }
  return it->second;
}

}  // namespace testing_support
