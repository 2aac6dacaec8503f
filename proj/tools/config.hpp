// Flat key=value experiment configuration shared by the CLI subcommands.
#ifndef GKSS_TOOLS_CONFIG_HPP
#define GKSS_TOOLS_CONFIG_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gkss/generators.hpp"
#include "gkss/kernels.hpp"
#include "gkss/mc_test.hpp"

namespace gkss::tools {

struct ExperimentConfig {
  std::string experiment;  // power-curve | assess-samples | runtime-bench
  std::uint64_t seed = 0;
  int n = 20;
  int resample_count = 200;    // key B
  int null_simulations = 200;  // key l
  double level = 0.05;
  int trials = 100;
  Convention convention = Convention::FlipFeature;

  // power-curve: empty means exact ERGM conditionals.
  std::optional<StatisticKind> statistic;
  // assess-samples runs one test per statistic x kernel.
  std::vector<StatisticKind> statistics;

  std::vector<KernelSpec> kernels;
  std::optional<GeneratorSpec> null_model;

  std::string alt_param;
  std::vector<double> alt_grid;
  int estimator_samples = 100;

  std::string observed;  // graph file assessed against the samples

  std::vector<int> n_list{20};                       // runtime-bench sizes
  std::vector<std::string> regimes{"sparse", "dense"};
  int bench_graphs = 100;  // key graphs
  int bench_reps = 10;     // key reps
  bool fast_grw = true;
};

// Grammar: one `key = value` per line, '#' starts a comment, lists are
// comma-separated. Unknown keys, duplicate null models and malformed values
// raise ConfigError naming the line.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig parse_config_file(const std::string& path);

// Builds a generator from "e2s b1 b2", "edge b", "grg-torus r",
// "grg-square r", "ba m alpha" (each on `n` vertices) or "samples <dir>".
GeneratorSpec generator_from_text(const std::string& text, int n);

// Copy of `base` with one scalar overridden: beta1/beta2 (ERGM), radius
// (geometric), m/alpha (preferential attachment).
GeneratorSpec with_parameter(const GeneratorSpec& base, const std::string& param,
                             double value);

}  // namespace gkss::tools

#endif
