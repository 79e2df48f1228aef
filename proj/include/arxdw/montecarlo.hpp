#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arxdw/dwtest.hpp"
#include "arxdw/model.hpp"

namespace arxdw::montecarlo {

enum class Statistic { t, t_simple, both };

struct ExperimentConfig {
  model::SystemSpec spec;  // rho is overridden cell by cell from rho_grid
  std::vector<double> rho_grid{0.0};
  std::vector<int> n_grid{50, 100, 200, 500, 1000, 2000};
  int replications = 1000;
  int burn_in = 100;
  double alpha = 0.05;
  Statistic statistic = Statistic::both;
  std::uint64_t master_seed = 1;
  bool paper_literal_tn2 = false;

  // Throws std::invalid_argument on replications < 1, any n < 10,
  // alpha outside (0,1), or an invalid system spec.
  void validate() const;
};

struct RateCell {
  double rho = 0.0;
  int n = 0;
  dwtest::StatisticKind statistic = dwtest::StatisticKind::t;
  int rejections = 0;
  int invalid = 0;
  int replications = 0;
  double rate = 0.0;          // rejections / (replications - invalid)
  double ci_halfwidth = 0.0;  // 1.96 sqrt(rate (1-rate) / valid count)
};

struct RateTable {
  std::vector<RateCell> cells;  // rho-major, then n, then statistic

  const RateCell* find(double rho, int n, dwtest::StatisticKind k) const;
};

// One replication: a seeded closed-loop run followed by the serial
// correlation test on its evaluation window. Both statistics are filled in;
// the report's decision fields follow `decide_with`.
dwtest::TestReport run_replication(model::SystemSpec spec, int burn_in, int n, double alpha,
                                   std::uint64_t seed, bool paper_literal_tn2 = false,
                                   dwtest::StatisticKind decide_with = dwtest::StatisticKind::t);

// Full grid of (rho, n) cells, `replications` independent loops per cell.
// Replication r of cell (i, j) is seeded from (master_seed, i, j, r), so the
// table is identical for any thread count. threads = 0 picks the hardware
// concurrency. Simulation overflow is rethrown with the cell coordinates.
RateTable run_grid(const ExperimentConfig& config, int threads = 0);

// All replication reports for a single (rho, n) cell of the config; seeds
// are derived from the value pair rather than grid indices. Used by the
// distribution diagnostics.
std::vector<dwtest::TestReport> collect_reports(const ExperimentConfig& config, double rho,
                                                int n, int threads = 0);

enum class ReferenceCdf { chi2_1df, std_normal };

// Kolmogorov-Smirnov sup-distance between the sample and the reference
// distribution. Requires at least 30 samples.
double ks_distance(std::vector<double> samples, ReferenceCdf reference);

enum class TableFormat { csv, markdown };

// csv: rho,n,statistic,rejections,invalid,replications,rate,ci_halfwidth.
// markdown: n across columns, (rho, statistic) down rows, rates as percent.
std::string render_table(const RateTable& table, TableFormat format);

}  // namespace arxdw::montecarlo
