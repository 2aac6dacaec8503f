// CLI subcommand implementations: power curves over a parameter sweep,
// assessment of an observed graph against generator samples, and kernel
// runtime benchmarks. All emit resumable CSV files.
#ifndef GKSS_TOOLS_EXPERIMENTS_HPP
#define GKSS_TOOLS_EXPERIMENTS_HPP

#include <string>

#include "config.hpp"

namespace gkss::tools {

void cmd_power_curve(const ExperimentConfig& cfg, const std::string& out_path);
void cmd_assess_samples(const ExperimentConfig& cfg, const std::string& out_path);
void cmd_runtime_bench(const ExperimentConfig& cfg, const std::string& out_path);

}  // namespace gkss::tools

#endif
