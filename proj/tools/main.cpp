#include <omp.h>

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "experiments.hpp"
#include "gkss/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Goodness-of-fit testing for random graph models"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::uint64_t seed_override = 0;
  int workers = 0;

  CLI::App* power = app.add_subcommand("power-curve", "rejection rates over a parameter sweep");
  CLI::App* assess = app.add_subcommand("assess-samples", "test an observed graph against generator samples");
  CLI::App* bench = app.add_subcommand("runtime-bench", "kernel runtime medians on sparse/dense graphs");
  for (CLI::App* sub : {power, assess, bench}) {
    sub->add_option("--config", config_path, "experiment config file")->required();
    sub->add_option("--out", out_path, "output CSV path")->required();
    sub->add_option("--seed", seed_override, "override the config seed");
    sub->add_option("--workers", workers, "worker thread count (0 = default)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (workers > 0) omp_set_num_threads(workers);
  CLI::App* sub = app.get_subcommands().front();

  try {
    gkss::tools::ExperimentConfig cfg = gkss::tools::parse_config_file(config_path);
    if (sub->count("--seed") > 0) cfg.seed = seed_override;
    if (!cfg.experiment.empty() && cfg.experiment != sub->get_name()) {
      throw gkss::ConfigError("config is for experiment '" + cfg.experiment +
                              "', subcommand is '" + sub->get_name() + "'");
    }
    cfg.experiment = sub->get_name();

    if (sub == power) {
      gkss::tools::cmd_power_curve(cfg, out_path);
    } else if (sub == assess) {
      gkss::tools::cmd_assess_samples(cfg, out_path);
    } else {
      gkss::tools::cmd_runtime_bench(cfg, out_path);
    }
    return 0;
  } catch (const gkss::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const gkss::IngestError& e) {
    std::cerr << "ingest error: " << e.what() << "\n";
    return 3;
  } catch (const gkss::ParseError& e) {
    std::cerr << "ingest error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
