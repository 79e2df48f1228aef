#include "arxdw/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace arxdw::cli {
namespace {

std::string trim(const std::string& s) {
  const std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, sep)) out.push_back(trim(item));
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value) {
  throw std::runtime_error("config: bad value '" + value + "' for key '" + key + "'");
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) bad_value(key, value);
    return v;
  } catch (const std::runtime_error&) {
    throw;
  } catch (...) {
    bad_value(key, value);
  }
}

long long parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(value, &pos);
    if (pos != value.size()) bad_value(key, value);
    return v;
  } catch (const std::runtime_error&) {
    throw;
  } catch (...) {
    bad_value(key, value);
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  bad_value(key, value);
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string join_doubles(const std::vector<double>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ',';
    out += format_double(vs[i]);
  }
  return out;
}

const char* detect_preset(const model::SystemSpec& spec) {
  if (spec.p == 1 && spec.theta == std::vector<double>{1.5}) return "arx1";
  if (spec.p == 2 && spec.theta == std::vector<double>{-1.0, 2.0}) return "arx2";
  if (spec.p == 3 && spec.theta == std::vector<double>{1.0, 0.5, 0.25}) return "arx3";
  return "custom";
}

const char* statistic_key(montecarlo::Statistic s) {
  switch (s) {
    case montecarlo::Statistic::t:
      return "t";
    case montecarlo::Statistic::t_simple:
      return "tsimple";
    default:
      return "both";
  }
}

}  // namespace

montecarlo::ExperimentConfig default_config() {
  montecarlo::ExperimentConfig cfg;
  cfg.spec = model::SystemSpec(1, {1.5}, 0.0, 1.0, 4.0);
  return cfg;
}

void apply_model_preset(montecarlo::ExperimentConfig& cfg, const std::string& name) {
  if (name == "arx1") {
    cfg.spec.p = 1;
    cfg.spec.theta = {1.5};
  } else if (name == "arx2") {
    cfg.spec.p = 2;
    cfg.spec.theta = {-1.0, 2.0};
  } else if (name == "arx3") {
    cfg.spec.p = 3;
    cfg.spec.theta = {1.0, 0.5, 0.25};
  } else if (name != "custom") {
    throw std::runtime_error("config: unknown model '" + name + "'");
  }
}

std::vector<std::string> apply_config_file(const std::string& path,
                                           montecarlo::ExperimentConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open '" + path + "'");

  std::vector<std::string> keys;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config: line " + std::to_string(line_no) +
                               ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw std::runtime_error("config: line " + std::to_string(line_no) +
                               ": empty key or value");

    if (key == "model") {
      apply_model_preset(cfg, value);
    } else if (key == "theta") {
      std::vector<double> theta;
      for (const std::string& item : split(value, ',')) theta.push_back(parse_double(key, item));
      cfg.spec.theta = theta;
      cfg.spec.p = static_cast<int>(theta.size());
    } else if (key == "rho") {
      cfg.rho_grid.clear();
      for (const std::string& item : split(value, ',')) cfg.rho_grid.push_back(parse_double(key, item));
    } else if (key == "n") {
      cfg.n_grid.clear();
      for (const std::string& item : split(value, ','))
        cfg.n_grid.push_back(static_cast<int>(parse_int(key, item)));
    } else if (key == "sigma") {
      const double s = parse_double(key, value);
      cfg.spec.sigma2 = s * s;
    } else if (key == "nu") {
      const double nu = parse_double(key, value);
      cfg.spec.nu2 = nu * nu;
    } else if (key == "reps") {
      cfg.replications = static_cast<int>(parse_int(key, value));
    } else if (key == "burn_in") {
      cfg.burn_in = static_cast<int>(parse_int(key, value));
    } else if (key == "alpha") {
      cfg.alpha = parse_double(key, value);
    } else if (key == "statistic") {
      if (value == "t")
        cfg.statistic = montecarlo::Statistic::t;
      else if (value == "tsimple")
        cfg.statistic = montecarlo::Statistic::t_simple;
      else if (value == "both")
        cfg.statistic = montecarlo::Statistic::both;
      else
        bad_value(key, value);
    } else if (key == "seed") {
      cfg.master_seed = static_cast<std::uint64_t>(parse_int(key, value));
    } else if (key == "paper_literal_tn2") {
      cfg.paper_literal_tn2 = parse_bool(key, value);
    } else {
      throw std::runtime_error("config: unknown key '" + key + "'");
    }
    keys.push_back(key);
  }
  return keys;
}

montecarlo::ExperimentConfig load_config(const std::string& path) {
  montecarlo::ExperimentConfig cfg = default_config();
  apply_config_file(path, cfg);
  return cfg;
}

std::string dump_config(const montecarlo::ExperimentConfig& cfg) {
  std::ostringstream os;
  const std::string preset = detect_preset(cfg.spec);
  os << "model = " << preset << '\n';
  if (preset == "custom") os << "theta = " << join_doubles(cfg.spec.theta) << '\n';
  os << "sigma = " << format_double(std::sqrt(cfg.spec.sigma2)) << '\n';
  os << "nu = " << format_double(std::sqrt(cfg.spec.nu2)) << '\n';
  os << "rho = " << join_doubles(cfg.rho_grid) << '\n';
  os << "n = ";
  for (std::size_t i = 0; i < cfg.n_grid.size(); ++i) {
    if (i) os << ',';
    os << cfg.n_grid[i];
  }
  os << '\n';
  os << "reps = " << cfg.replications << '\n';
  os << "burn_in = " << cfg.burn_in << '\n';
  os << "alpha = " << format_double(cfg.alpha) << '\n';
  os << "statistic = " << statistic_key(cfg.statistic) << '\n';
  os << "seed = " << cfg.master_seed << '\n';
  os << "paper_literal_tn2 = " << (cfg.paper_literal_tn2 ? "true" : "false") << '\n';
  return os.str();
}

}  // namespace arxdw::cli
