#include "arxdw/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "arxdw/asymptotics.hpp"
#include "arxdw/config.hpp"
#include "arxdw/controller.hpp"
#include "arxdw/montecarlo.hpp"
#include "arxdw/rng.hpp"

namespace arxdw::cli {
namespace {

struct Flags {
  std::string config_path;
  std::string model = "arx1";
  std::vector<double> theta;
  std::vector<double> rho;
  std::vector<int> n;
  double sigma = 1.0;
  double nu = 2.0;
  double alpha = 0.05;
  double x0 = 0.0;
  double eps0 = 0.0;
  int reps = 1000;
  int burn_in = 100;
  int threads = 0;
  std::uint64_t seed = 1;
  std::string statistic = "both";
  std::string format = "csv";
  std::string out;
  bool paper_literal = false;

  bool rho_given = false;  // via flag or config file
};

void add_common_options(CLI::App* sub, Flags& f, bool simulation_extras) {
  sub->add_option("--config", f.config_path, "key = value config file; flags override it");
  sub->add_option("--model", f.model, "system preset: arx1, arx2, arx3 or custom")
      ->check(CLI::IsMember({"arx1", "arx2", "arx3", "custom"}));
  sub->add_option("--theta", f.theta, "coefficients for --model custom")->delimiter(',');
  sub->add_option("--rho", f.rho, "serial correlation value(s)")->delimiter(',');
  sub->add_option("--n", f.n, "evaluation sample size(s)")->delimiter(',');
  sub->add_option("--sigma", f.sigma, "innovation standard deviation");
  sub->add_option("--nu", f.nu, "excitation standard deviation");
  sub->add_option("--alpha", f.alpha, "significance level");
  sub->add_option("--reps", f.reps, "replications per cell");
  sub->add_option("--burn-in", f.burn_in, "learning period before the evaluation window");
  sub->add_option("--threads", f.threads, "worker threads (0 = hardware)");
  sub->add_option("--seed", f.seed, "master seed");
  sub->add_option("--statistic", f.statistic, "decision statistic: t, tsimple or both")
      ->check(CLI::IsMember({"t", "tsimple", "both"}));
  sub->add_option("--format", f.format, "table output format")
      ->check(CLI::IsMember({"csv", "markdown"}));
  sub->add_option("--out", f.out, "output path (default stdout)");
  sub->add_flag("--paper-literal-tn2", f.paper_literal,
                "use the n^2 scaling in the simple statistic");
  if (simulation_extras) {
    sub->add_option("--x0", f.x0, "initial output value");
    sub->add_option("--eps0", f.eps0, "initial noise value");
  }
}

montecarlo::ExperimentConfig assemble(const CLI::App* sub, Flags& f) {
  montecarlo::ExperimentConfig cfg = default_config();
  if (!f.config_path.empty()) {
    const std::vector<std::string> keys = apply_config_file(f.config_path, cfg);
    if (std::find(keys.begin(), keys.end(), "rho") != keys.end()) f.rho_given = true;
  }
  if (sub->count("--model")) apply_model_preset(cfg, f.model);
  if (sub->count("--theta")) {
    cfg.spec.theta = f.theta;
    cfg.spec.p = static_cast<int>(f.theta.size());
  }
  if (sub->count("--sigma")) cfg.spec.sigma2 = f.sigma * f.sigma;
  if (sub->count("--nu")) cfg.spec.nu2 = f.nu * f.nu;
  if (sub->count("--rho")) {
    cfg.rho_grid = f.rho;
    f.rho_given = true;
  }
  if (sub->count("--n")) cfg.n_grid = f.n;
  if (sub->count("--reps")) cfg.replications = f.reps;
  if (sub->count("--burn-in")) cfg.burn_in = f.burn_in;
  if (sub->count("--alpha")) cfg.alpha = f.alpha;
  if (sub->count("--seed")) cfg.master_seed = f.seed;
  if (sub->count("--paper-literal-tn2")) cfg.paper_literal_tn2 = f.paper_literal;
  if (sub->count("--statistic")) {
    if (f.statistic == "t")
      cfg.statistic = montecarlo::Statistic::t;
    else if (f.statistic == "tsimple")
      cfg.statistic = montecarlo::Statistic::t_simple;
    else
      cfg.statistic = montecarlo::Statistic::both;
  }
  return cfg;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_path);
  if (!os) throw std::runtime_error("cannot open output file '" + out_path + "'");
  os << text;
}

dwtest::StatisticKind decide_kind(const montecarlo::ExperimentConfig& cfg) {
  return cfg.statistic == montecarlo::Statistic::t_simple ? dwtest::StatisticKind::t_simple
                                                          : dwtest::StatisticKind::t;
}

int cmd_simulate(const montecarlo::ExperimentConfig& cfg, const Flags& f) {
  model::SystemSpec spec = cfg.spec;
  spec.rho = cfg.rho_grid.front();
  const controller::NoiseConfig noise = controller::NoiseConfig::from_master(cfg.master_seed, spec);
  controller::RunOptions opts;
  opts.x0 = f.x0;
  opts.eps0 = f.eps0;
  const controller::RunResult run = controller::run_closed_loop(
      spec, noise, controller::reference_zero(), cfg.burn_in, cfg.n_grid.front(), opts);
  std::ostringstream os;
  run.trace.write_csv(os);
  emit(os.str(), f.out);
  return 0;
}

int cmd_test(const montecarlo::ExperimentConfig& cfg, const Flags& f) {
  model::SystemSpec spec = cfg.spec;
  spec.rho = cfg.rho_grid.front();
  const dwtest::TestReport report =
      montecarlo::run_replication(spec, cfg.burn_in, cfg.n_grid.front(), cfg.alpha,
                                  cfg.master_seed, cfg.paper_literal_tn2, decide_kind(cfg));
  std::ostringstream os;
  os << dwtest::TestReport::csv_header() << '\n';
  report.write_csv_row(os);
  emit(os.str(), f.out);
  return 0;
}

int cmd_rates(const montecarlo::ExperimentConfig& cfg, const Flags& f) {
  const montecarlo::RateTable table = montecarlo::run_grid(cfg, f.threads);
  const montecarlo::TableFormat fmt =
      f.format == "markdown" ? montecarlo::TableFormat::markdown : montecarlo::TableFormat::csv;
  emit(montecarlo::render_table(table, fmt), f.out);
  return 0;
}

int cmd_normality(const montecarlo::ExperimentConfig& cfg, const Flags& f) {
  const double rho = cfg.rho_grid.front();
  const int n = cfg.n_grid.front();
  const std::vector<dwtest::TestReport> reports = montecarlo::collect_reports(cfg, rho, n, f.threads);

  std::vector<double> t_samples;
  std::vector<double> standardized;
  const double tau2 = asymptotics::tau2_theoretical(rho, cfg.spec.sigma2, cfg.spec.nu2, cfg.spec.p);
  const double tau = std::sqrt(tau2);
  const double root_n = std::sqrt(static_cast<double>(n));
  int invalid = 0;
  double var_acc = 0.0, mean_acc = 0.0;
  for (const dwtest::TestReport& r : reports) {
    if (!r.valid) {
      ++invalid;
      continue;
    }
    t_samples.push_back(r.t_n);
    standardized.push_back(root_n * (r.rho_bar - rho) / tau);
    mean_acc += root_n * (r.rho_bar - rho);
  }
  const double count = static_cast<double>(standardized.size());
  if (count < 30) throw std::runtime_error("normality: too few valid replications");
  mean_acc /= count;
  for (double s : standardized) {
    const double centered = s * tau - mean_acc;
    var_acc += centered * centered;
  }
  const double sample_var = var_acc / (count - 1.0);

  std::ostringstream os;
  const bool markdown = f.format == "markdown";
  const auto put = [&os, markdown](const std::string& metric, double value) {
    if (markdown)
      os << "| " << metric << " | " << value << " |\n";
    else
      os << metric << ',' << value << '\n';
  };
  os.precision(10);
  if (markdown)
    os << "| metric | value |\n|---|---|\n";
  else
    os << "metric,value\n";
  if (rho == 0.0)
    put("ks_tn_chi2_1df", montecarlo::ks_distance(t_samples, montecarlo::ReferenceCdf::chi2_1df));
  put("ks_rhobar_std_normal",
      montecarlo::ks_distance(standardized, montecarlo::ReferenceCdf::std_normal));
  put("sample_var_sqrt_n_rhobar", sample_var);
  put("tau2_theoretical", tau2);
  put("variance_ratio", sample_var / tau2);
  put("invalid_replications", invalid);
  put("replications", reports.size());
  emit(os.str(), f.out);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"ARX adaptive-tracking simulation and serial correlation testing"};
  app.require_subcommand(1);

  Flags f_sim, f_test, f_level, f_power, f_norm;
  CLI::App* sim = app.add_subcommand("simulate", "run one closed loop and emit the trace CSV");
  add_common_options(sim, f_sim, true);
  CLI::App* test = app.add_subcommand("test", "run one closed loop and emit a test report row");
  add_common_options(test, f_test, false);
  CLI::App* level =
      app.add_subcommand("level", "empirical level table under rho = 0 (columns by n)");
  add_common_options(level, f_level, false);
  CLI::App* power = app.add_subcommand("power", "empirical power table over a rho grid");
  add_common_options(power, f_power, false);
  CLI::App* norm =
      app.add_subcommand("normality", "distribution diagnostics at one (rho, n) cell");
  add_common_options(norm, f_norm, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sim->parsed()) return cmd_simulate(assemble(sim, f_sim), f_sim);
    if (test->parsed()) return cmd_test(assemble(test, f_test), f_test);
    if (level->parsed()) return cmd_rates(assemble(level, f_level), f_level);
    if (power->parsed()) {
      montecarlo::ExperimentConfig cfg = assemble(power, f_power);
      if (!f_power.rho_given) cfg.rho_grid = {0.05, 0.1, 0.2, 0.3, 0.4};
      return cmd_rates(cfg, f_power);
    }
    if (norm->parsed()) return cmd_normality(assemble(norm, f_norm), f_norm);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  args.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args);
}

}  // namespace arxdw::cli
