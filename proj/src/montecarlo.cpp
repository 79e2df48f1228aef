#include "arxdw/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "arxdw/controller.hpp"
#include "arxdw/rng.hpp"
#include "arxdw/stats.hpp"

namespace arxdw::montecarlo {
namespace {

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

// Index-parallel loop with deterministic output: every worker writes only
// its own slots. The first captured exception is rethrown after the join.
template <typename Fn>
void parallel_for(int count, int threads, Fn&& fn) {
  threads = std::min(resolve_threads(threads), count);
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const int i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

struct Outcome {
  bool valid = false;
  bool reject_t = false;
  bool reject_t_simple = false;
};

RateCell fold_cell(double rho, int n, dwtest::StatisticKind kind,
                   const std::vector<Outcome>& outcomes) {
  RateCell cell;
  cell.rho = rho;
  cell.n = n;
  cell.statistic = kind;
  cell.replications = static_cast<int>(outcomes.size());
  for (const Outcome& o : outcomes) {
    if (!o.valid) {
      ++cell.invalid;
      continue;
    }
    const bool rejected = kind == dwtest::StatisticKind::t ? o.reject_t : o.reject_t_simple;
    if (rejected) ++cell.rejections;
  }
  const int valid_count = cell.replications - cell.invalid;
  cell.rate = valid_count > 0 ? static_cast<double>(cell.rejections) / valid_count : 0.0;
  cell.ci_halfwidth =
      valid_count > 0 ? 1.96 * std::sqrt(cell.rate * (1.0 - cell.rate) / valid_count) : 0.0;
  return cell;
}

std::string format_percent(double rate) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f%%", 100.0 * rate);
  return buf;
}

}  // namespace

void ExperimentConfig::validate() const {
  model::SystemSpec probe = spec;
  for (double rho : rho_grid) {
    probe.rho = rho;
    probe.validate();
  }
  if (rho_grid.empty()) throw std::invalid_argument("ExperimentConfig: empty rho grid");
  if (n_grid.empty()) throw std::invalid_argument("ExperimentConfig: empty n grid");
  for (int n : n_grid)
    if (n < 10) throw std::invalid_argument("ExperimentConfig: every n must be >= 10");
  if (replications < 1) throw std::invalid_argument("ExperimentConfig: replications must be >= 1");
  if (burn_in < 0) throw std::invalid_argument("ExperimentConfig: burn_in must be >= 0");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("ExperimentConfig: alpha must be in (0,1)");
}

const RateCell* RateTable::find(double rho, int n, dwtest::StatisticKind k) const {
  for (const RateCell& c : cells) {
    if (c.n == n && c.statistic == k && c.rho == rho) return &c;
  }
  return nullptr;
}

dwtest::TestReport run_replication(model::SystemSpec spec, int burn_in, int n, double alpha,
                                   std::uint64_t seed, bool paper_literal_tn2,
                                   dwtest::StatisticKind decide_with) {
  const controller::NoiseConfig noise = controller::NoiseConfig::from_master(seed, spec);
  const controller::RunResult run =
      controller::run_closed_loop(spec, noise, controller::reference_zero(), burn_in, n);
  const std::vector<double> theta = estimator::theta_hat(run.rls, spec.p);
  dwtest::TestOptions opts;
  opts.alpha = alpha;
  opts.statistic = decide_with;
  opts.paper_literal_tn2 = paper_literal_tn2;
  return dwtest::run_test(run.trace.window_outputs(), run.trace.window_controls(), theta,
                          spec.nu2, opts);
}

RateTable run_grid(const ExperimentConfig& config, int threads) {
  config.validate();
  const double critical = stats::chi2_quantile_1df(config.alpha);

  RateTable table;
  for (std::size_t ir = 0; ir < config.rho_grid.size(); ++ir) {
    const double rho = config.rho_grid[ir];
    for (std::size_t in = 0; in < config.n_grid.size(); ++in) {
      const int n = config.n_grid[in];
      std::vector<Outcome> outcomes(static_cast<std::size_t>(config.replications));
      try {
        parallel_for(config.replications, threads, [&](int r) {
          const std::uint64_t seed = derive_seed(
              config.master_seed,
              {static_cast<std::uint64_t>(ir), static_cast<std::uint64_t>(in),
               static_cast<std::uint64_t>(r)});
          model::SystemSpec cell_spec = config.spec;
          cell_spec.rho = rho;
          const dwtest::TestReport report = run_replication(
              cell_spec, config.burn_in, n, config.alpha, seed, config.paper_literal_tn2);
          Outcome& o = outcomes[static_cast<std::size_t>(r)];
          o.valid = report.valid;
          if (report.valid) {
            o.reject_t = report.t_n > critical;
            o.reject_t_simple = report.t_simple > critical;
          }
        });
      } catch (const std::exception& e) {
        std::ostringstream msg;
        msg << "run_grid: cell rho=" << rho << " n=" << n << ": " << e.what();
        throw std::runtime_error(msg.str());
      }
      if (config.statistic != Statistic::t_simple)
        table.cells.push_back(fold_cell(rho, n, dwtest::StatisticKind::t, outcomes));
      if (config.statistic != Statistic::t)
        table.cells.push_back(fold_cell(rho, n, dwtest::StatisticKind::t_simple, outcomes));
    }
  }
  return table;
}

std::vector<dwtest::TestReport> collect_reports(const ExperimentConfig& config, double rho,
                                                int n, int threads) {
  config.validate();
  model::SystemSpec spec = config.spec;
  spec.rho = rho;
  spec.validate();
  std::vector<dwtest::TestReport> reports(static_cast<std::size_t>(config.replications));
  parallel_for(config.replications, threads, [&](int r) {
    const std::uint64_t seed =
        derive_seed(config.master_seed,
                    {std::bit_cast<std::uint64_t>(rho), static_cast<std::uint64_t>(n),
                     static_cast<std::uint64_t>(r)});
    reports[static_cast<std::size_t>(r)] = run_replication(
        spec, config.burn_in, n, config.alpha, seed, config.paper_literal_tn2);
  });
  return reports;
}

double ks_distance(std::vector<double> samples, ReferenceCdf reference) {
  if (samples.size() < 30) throw std::invalid_argument("ks_distance: need at least 30 samples");
  std::sort(samples.begin(), samples.end());
  const double count = static_cast<double>(samples.size());
  double sup = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double cdf = reference == ReferenceCdf::chi2_1df ? stats::chi2_cdf_1df(samples[i])
                                                           : stats::normal_cdf(samples[i]);
    const double below = static_cast<double>(i) / count;
    const double above = static_cast<double>(i + 1) / count;
    sup = std::max(sup, std::max(cdf - below, above - cdf));
  }
  return sup;
}

std::string render_table(const RateTable& table, TableFormat format) {
  std::ostringstream os;
  if (format == TableFormat::csv) {
    os << "rho,n,statistic,rejections,invalid,replications,rate,ci_halfwidth\n";
    os.precision(17);
    for (const RateCell& c : table.cells) {
      os << c.rho << ',' << c.n << ',' << dwtest::statistic_name(c.statistic) << ','
         << c.rejections << ',' << c.invalid << ',' << c.replications << ',' << c.rate << ','
         << c.ci_halfwidth << '\n';
    }
    return os.str();
  }

  // Markdown: one column per n, one row per (rho, statistic).
  std::vector<int> ns;
  std::vector<std::pair<double, dwtest::StatisticKind>> rows;
  for (const RateCell& c : table.cells) {
    if (std::find(ns.begin(), ns.end(), c.n) == ns.end()) ns.push_back(c.n);
    const auto row = std::make_pair(c.rho, c.statistic);
    if (std::find(rows.begin(), rows.end(), row) == rows.end()) rows.push_back(row);
  }
  os << "| rho | statistic |";
  for (int n : ns) os << " n=" << n << " |";
  os << '\n';
  os << "|---|---|";
  for (std::size_t i = 0; i < ns.size(); ++i) os << "---|";
  os << '\n';
  for (const auto& [rho, kind] : rows) {
    os << "| " << rho << " | " << dwtest::statistic_name(kind) << " |";
    for (int n : ns) {
      const RateCell* c = table.find(rho, n, kind);
      if (c)
        os << ' ' << format_percent(c->rate) << " |";
      else
        os << "  |";
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace arxdw::montecarlo
