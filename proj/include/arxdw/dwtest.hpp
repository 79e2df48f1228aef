#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "arxdw/stats.hpp"

namespace arxdw::dwtest {

// Critical values and p-values for the bilateral test live here too.
using stats::chi2_quantile_1df;
using stats::chi2_sf_1df;

// Residuals eps_hat_0 .. eps_hat_n of an evaluation window; the first entry
// is the window's first output by convention.
struct ResidualSeries {
  std::vector<double> eps_hat;
};

enum class StatisticKind { t, t_simple };

const char* statistic_name(StatisticKind k);

// Everything the bilateral test produces for one window. When valid is
// false, reject is undefined and reason says which quantity degenerated.
struct TestReport {
  double d_hat = 0.0;
  double rho_bar = 0.0;
  double sigma2_hat = 0.0;
  double tau2_hat = 0.0;
  double t_n = 0.0;
  double t_simple = 0.0;
  double p_value = 0.0;
  bool reject = false;
  bool valid = true;
  std::string reason;
  StatisticKind used = StatisticKind::t;

  static const char* csv_header();
  void write_csv_row(std::ostream& os) const;
};

// eps_hat_0 = X_0; for k >= 1,
//   eps_hat_k = X_k - U_{k-1} - <theta_hat, (X_{k-1}, ..., X_{k-p})>
// with entries from before the window start taken as zero.
// Requires x.size() == u.size() + 1.
ResidualSeries residuals(std::span<const double> x, std::span<const double> u,
                         std::span<const double> theta_hat);

// Ratio of summed squared residual differences to the summed squared
// residuals; throws std::domain_error when the denominator vanishes.
double dw_statistic(const ResidualSeries& res);

// Lag-one least squares coefficient of the residuals; throws
// std::domain_error when the lagged denominator vanishes.
double rho_bar(const ResidualSeries& res);

struct Sigma2Hat {
  double value = 0.0;
  bool clamped = false;  // true when the raw estimate was <= 0
};

// (1/n) sum of X_k^2 over the window's X_1 .. X_n minus the known nu2,
// clamped to 1e-8 (and flagged) when nonpositive.
Sigma2Hat sigma2_hat(std::span<const double> x_eval, double nu2);

// Plug-in variance: the theoretical expression evaluated at the estimates.
// Invalid when |rho_bar| >= 1 or the value is nonpositive.
struct Tau2Hat {
  double value = 0.0;
  bool valid = true;
};
Tau2Hat tau2_hat(double rho_bar, double sigma2_hat, double nu2, int p);

struct TestStatistics {
  double t_n = 0.0;
  double t_simple = 0.0;
};

// t_n       = n (d_hat - 2)^2 / (4 tau2_hat)
// t_simple  = n nu2 (d_hat - 2)^2 / (4 (sigma2_hat + nu2))
// paper_literal_tn2 swaps the n in t_simple for n^2 (kept for comparison
// runs; with it the simple statistic has no chi-square limit).
TestStatistics test_statistics(double d_hat, double tau2_hat, double sigma2_hat, double nu2,
                               std::int64_t n, bool paper_literal_tn2 = false);

struct TestOptions {
  double alpha = 0.05;
  StatisticKind statistic = StatisticKind::t;
  bool paper_literal_tn2 = false;
};

// Full pipeline on one evaluation window: residuals, statistics, decision
// at level alpha against the chi-square(1) critical value. Degenerate
// intermediate quantities mark the report invalid instead of throwing.
TestReport run_test(std::span<const double> x_window, std::span<const double> u_window,
                    std::span<const double> theta_hat, double nu2,
                    const TestOptions& opts = {});

}  // namespace arxdw::dwtest
