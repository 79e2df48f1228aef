#include "arxdw/dwtest.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "arxdw/asymptotics.hpp"
#include "arxdw/kernels.hpp"

namespace arxdw::dwtest {
namespace {

constexpr double kSigma2Floor = 1e-8;
const double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

const char* statistic_name(StatisticKind k) {
  return k == StatisticKind::t ? "T_n" : "T_simple";
}

const char* TestReport::csv_header() {
  return "d_hat,rho_bar,sigma2_hat,tau2_hat,t_n,t_simple,p_value,reject,valid";
}

void TestReport::write_csv_row(std::ostream& os) const {
  const auto put = [&os](double v) { os << v << ','; };
  os.precision(17);
  put(d_hat);
  put(rho_bar);
  put(sigma2_hat);
  put(tau2_hat);
  put(t_n);
  put(t_simple);
  put(p_value);
  if (valid)
    os << (reject ? 1 : 0) << ',';
  else
    os << "NA,";
  os << (valid ? 1 : 0) << '\n';
}

ResidualSeries residuals(std::span<const double> x, std::span<const double> u,
                         std::span<const double> theta_hat) {
  if (x.size() != u.size() + 1)
    throw std::invalid_argument("residuals: need one more output than controls");
  if (u.empty()) throw std::invalid_argument("residuals: window must cover at least one step");
  const std::size_t n = u.size();
  const std::size_t p = theta_hat.size();

  ResidualSeries res;
  res.eps_hat.resize(n + 1);
  double* eps = res.eps_hat.data();
  eps[0] = x[0];
  kernels::sub(x.data() + 1, u.data(), eps + 1, n);
  for (std::size_t j = 1; j <= p && j <= n; ++j) {
    kernels::axpy(-theta_hat[j - 1], x.data(), eps + j, n - j + 1);
  }
  return res;
}

double dw_statistic(const ResidualSeries& res) {
  const std::size_t m = res.eps_hat.size();
  if (m < 2) throw std::invalid_argument("dw_statistic: need at least two residuals");
  const double den = kernels::sum_squares(res.eps_hat.data(), m);
  if (!(den > 0.0)) throw std::domain_error("dw_statistic: residual energy is zero");
  return kernels::sum_sq_diff(res.eps_hat.data(), m) / den;
}

double rho_bar(const ResidualSeries& res) {
  const std::size_t m = res.eps_hat.size();
  if (m < 2) throw std::invalid_argument("rho_bar: need at least two residuals");
  const double den = kernels::sum_squares(res.eps_hat.data(), m - 1);
  if (!(den > 0.0)) throw std::domain_error("rho_bar: lagged residual energy is zero");
  return kernels::dot(res.eps_hat.data() + 1, res.eps_hat.data(), m - 1) / den;
}

Sigma2Hat sigma2_hat(std::span<const double> x_eval, double nu2) {
  if (x_eval.empty()) throw std::invalid_argument("sigma2_hat: empty window");
  const double mean_square =
      kernels::sum_squares(x_eval.data(), x_eval.size()) / static_cast<double>(x_eval.size());
  const double raw = mean_square - nu2;
  if (raw <= 0.0) return {kSigma2Floor, true};
  return {raw, false};
}

Tau2Hat tau2_hat(double rho_bar_value, double sigma2_hat_value, double nu2, int p) {
  if (!(std::abs(rho_bar_value) < 1.0)) return {kNaN, false};
  const double v = asymptotics::tau2_theoretical(rho_bar_value, sigma2_hat_value, nu2, p);
  if (!(v > 0.0) || !std::isfinite(v)) return {kNaN, false};
  return {v, true};
}

TestStatistics test_statistics(double d_hat, double tau2_hat_value, double sigma2_hat_value,
                               double nu2, std::int64_t n, bool paper_literal_tn2) {
  if (n < 1) throw std::invalid_argument("test_statistics: n must be >= 1");
  const double dev = d_hat - 2.0;
  const double dev2 = dev * dev;
  TestStatistics out;
  out.t_n = tau2_hat_value > 0.0 ? static_cast<double>(n) * dev2 / (4.0 * tau2_hat_value) : kNaN;
  const double simple_den = 4.0 * (sigma2_hat_value + nu2);
  const double scale = paper_literal_tn2
                           ? static_cast<double>(n) * static_cast<double>(n)
                           : static_cast<double>(n);
  out.t_simple = simple_den > 0.0 ? scale * nu2 * dev2 / simple_den : kNaN;
  return out;
}

TestReport run_test(std::span<const double> x_window, std::span<const double> u_window,
                    std::span<const double> theta_hat, double nu2, const TestOptions& opts) {
  if (!(opts.alpha > 0.0 && opts.alpha < 1.0))
    throw std::invalid_argument("run_test: alpha must be in (0,1)");
  const std::int64_t n = static_cast<std::int64_t>(u_window.size());
  const int p = static_cast<int>(theta_hat.size());

  TestReport report;
  report.used = opts.statistic;
  report.d_hat = report.rho_bar = report.sigma2_hat = report.tau2_hat = kNaN;
  report.t_n = report.t_simple = report.p_value = kNaN;

  const auto invalidate = [&report](const char* why) {
    report.valid = false;
    if (report.reason.empty()) report.reason = why;
  };

  const ResidualSeries res = residuals(x_window, u_window, theta_hat);
  const std::size_t m = res.eps_hat.size();
  const double energy = kernels::sum_squares(res.eps_hat.data(), m);
  const double lag_energy = kernels::sum_squares(res.eps_hat.data(), m - 1);
  if (!(energy > 0.0) || !(lag_energy > 0.0)) {
    invalidate("zero residual energy");
    return report;
  }

  report.d_hat = dw_statistic(res);
  report.rho_bar = rho_bar(res);

  const Sigma2Hat s2 = sigma2_hat(x_window.subspan(1), nu2);
  report.sigma2_hat = s2.value;
  if (s2.clamped) invalidate("sigma2_hat clamped to floor");

  const Tau2Hat t2 = tau2_hat(report.rho_bar, report.sigma2_hat, nu2, p);
  report.tau2_hat = t2.value;
  if (!t2.valid) invalidate("degenerate tau2_hat");

  const TestStatistics ts = test_statistics(report.d_hat, t2.valid ? t2.value : kNaN,
                                            report.sigma2_hat, nu2, n, opts.paper_literal_tn2);
  report.t_n = ts.t_n;
  report.t_simple = ts.t_simple;

  const double chosen = opts.statistic == StatisticKind::t ? report.t_n : report.t_simple;
  if (report.valid && std::isfinite(chosen)) {
    report.p_value = chi2_sf_1df(chosen);
    report.reject = chosen > chi2_quantile_1df(opts.alpha);
  } else if (report.valid) {
    invalidate("non-finite test statistic");
  }
  return report;
}

}  // namespace arxdw::dwtest
