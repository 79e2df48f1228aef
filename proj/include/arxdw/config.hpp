#pragma once

#include <string>
#include <vector>

#include "arxdw/montecarlo.hpp"

namespace arxdw::cli {

// Experiment defaults: the arx1 preset with sigma = 1, nu = 2, alpha = 5%,
// 1000 replications, a 100-step learning period and the standard n grid.
montecarlo::ExperimentConfig default_config();

// p and theta for the named preset (arx1, arx2, arx3); other fields are left
// at the given config's values. Throws on unknown names.
void apply_model_preset(montecarlo::ExperimentConfig& cfg, const std::string& name);

// Flat `key = value` text with '#' comments. Unknown keys, repeated '='-less
// lines or unparsable values raise std::runtime_error naming the key.
// Returns the keys that were set.
std::vector<std::string> apply_config_file(const std::string& path,
                                           montecarlo::ExperimentConfig& cfg);

// default_config() overlaid with the file.
montecarlo::ExperimentConfig load_config(const std::string& path);

// Canonical text form: fixed key order, shortest round-trip numerals.
// dump_config(load_config(p)) is a fixed point.
std::string dump_config(const montecarlo::ExperimentConfig& cfg);

}  // namespace arxdw::cli
