#ifndef SUBMAX_CONFIG_HPP
#define SUBMAX_CONFIG_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "submax/environment.hpp"
#include "submax/set_function.hpp"

namespace submax {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FunctionDescriptor {
  std::string family = "separable";
  std::vector<double> xi;
  double nu = 1.0;
  std::vector<int> permutation;  // empty = identity
};

SetFunction build_function(const FunctionDescriptor& desc);

// One experiment: function, noise channel, algorithm, horizon, replications.
// Config files are flat `key = value` lines ('#' starts a comment); lists are
// comma-separated. See README for the key reference.
struct ExperimentConfig {
  FunctionDescriptor function;
  NoiseModel noise = NoiseModel::gaussian(0.1);
  std::string algorithm = "dgetc";  // dgetc | rgl | dg_offline_repeated

  std::int64_t T = 1;
  int replications = 1;
  std::uint64_t seed = 0;
  double delta = 0.05;
  int repeats = 100;  // dg_offline_repeated only

  // NaN = derive: c from the function's declared bound, sigma from the noise
  // model's declared scale, astar by brute force (d <= 25).
  double c = std::nan("");
  double sigma = std::nan("");
  double astar = std::nan("");

  double effective_c() const;
  double effective_sigma() const;
};

ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);

// `--set key=value` style override.
void apply_override(ExperimentConfig& cfg, const std::string& key,
                    const std::string& value);

// Canonical serialization (fixed key order); basis of the config hash.
std::string serialize_config(const ExperimentConfig& cfg);
std::uint64_t config_hash(const ExperimentConfig& cfg);

// Sweep grids use the same format with ';' separating alternatives inside a
// value; the grid is the cartesian product, expanded in file order.
struct SweepCell {
  std::string id;  // cell-<n> plus the varying key=value assignments
  ExperimentConfig config;
};
std::vector<SweepCell> expand_sweep_text(const std::string& text);
std::vector<SweepCell> expand_sweep_file(const std::string& path);

}  // namespace submax

#endif
