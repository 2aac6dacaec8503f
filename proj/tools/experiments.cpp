#include "experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "gkss/errors.hpp"
#include "gkss/rng.hpp"
#include "gkss/stein.hpp"

namespace gkss::tools {

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string format_fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  const auto d = std::chrono::steady_clock::now() - start;
  return std::chrono::duration<double, std::milli>(d).count();
}

// Append-mode CSV keyed on its leading columns; rows already present are
// skipped on rerun, so interrupted sweeps resume where they stopped.
class ResumableCsv {
 public:
  ResumableCsv(const std::string& path, const std::string& header, int key_columns) {
    {
      std::ifstream in(path);
      if (in) {
        std::string line;
        int line_no = 0;
        while (std::getline(in, line)) {
          ++line_no;
          if (!line.empty() && line.back() == '\r') line.pop_back();
          if (line.empty()) continue;
          if (line_no == 1) {
            if (line != header) {
              throw ConfigError("output '" + path + "' holds a different table (header '" +
                                line + "')");
            }
            continue;
          }
          keys_.insert(key_of(line, key_columns));
        }
      }
    }
    const bool fresh = keys_.empty();
    out_.open(path, std::ios::app);
    if (!out_) throw ConfigError("cannot write output '" + path + "'");
    if (fresh) {
      std::ifstream probe(path);
      std::string first;
      if (!std::getline(probe, first)) out_ << header << '\n' << std::flush;
    }
  }

  bool done(const std::string& key) const { return keys_.count(key) > 0; }

  void append(const std::string& key, const std::string& rest) {
    out_ << key << ',' << rest << '\n' << std::flush;
    keys_.insert(key);
  }

 private:
  static std::string key_of(const std::string& line, int key_columns) {
    std::size_t pos = 0;
    for (int c = 0; c < key_columns; ++c) {
      pos = line.find(',', pos);
      if (pos == std::string::npos) return line;
      ++pos;
    }
    return line.substr(0, pos - 1);
  }

  std::ofstream out_;
  std::set<std::string> keys_;
};

TestConfig base_test_config(const ExperimentConfig& cfg) {
  TestConfig tc;
  tc.null_model = *cfg.null_model;
  tc.convention = cfg.convention;
  tc.estimator_samples = cfg.estimator_samples;
  tc.resample_count = cfg.resample_count;
  tc.null_simulations = cfg.null_simulations;
  tc.level = cfg.level;
  tc.fast_grw = cfg.fast_grw;
  return tc;
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t m = values.size() / 2;
  if (values.size() % 2 == 1) return values[m];
  return 0.5 * (values[m - 1] + values[m]);
}

}  // namespace

void cmd_power_curve(const ExperimentConfig& cfg, const std::string& out_path) {
  if (!cfg.null_model) throw ConfigError("power-curve needs a null model (key 'null')");
  if (cfg.kernels.empty()) throw ConfigError("power-curve needs a kernel list");
  if (cfg.alt_param.empty()) throw ConfigError("power-curve needs 'alt_param'");
  if (cfg.alt_grid.empty()) throw ConfigError("power-curve needs a nonempty 'alt_grid'");
  if (cfg.trials < 1) throw ConfigError("power-curve needs trials >= 1");
  if (!cfg.statistic && cfg.null_model->kind != GeneratorSpec::Kind::Ergm) {
    throw ConfigError("exact conditionals need an ERGM null; set 'statistic'");
  }
  for (const double v : cfg.alt_grid) with_parameter(*cfg.null_model, cfg.alt_param, v);

  const std::string stat_name =
      cfg.statistic ? statistic_kind_name(*cfg.statistic) : "exact";
  ResumableCsv csv(out_path, "experiment,kernel,param,statistic,alt_value,rate,stderr,trials,elapsed_ms",
                   5);

  for (const KernelSpec& kernel : cfg.kernels) {
    for (const double alt_value : cfg.alt_grid) {
      const std::string key = "power-curve," + kernel.name() + ',' + cfg.alt_param + ',' +
                              stat_name + ',' + format_double(alt_value);
      if (csv.done(key)) continue;

      TestConfig tc = base_test_config(cfg);
      tc.kernel = kernel;
      tc.estimator_statistic = cfg.statistic;
      tc.seed = derive_seed(cfg.seed, fnv1a(key));
      const GeneratorSpec alternative =
          with_parameter(*cfg.null_model, cfg.alt_param, alt_value);

      const auto start = std::chrono::steady_clock::now();
      const RejectionRate rate = rejection_rate(tc, alternative, cfg.trials);
      csv.append(key, format_fixed(rate.rate, 6) + ',' + format_fixed(rate.stderr_, 6) + ',' +
                          std::to_string(rate.trials) + ',' +
                          format_fixed(elapsed_ms(start), 3));
    }
  }
}

void cmd_assess_samples(const ExperimentConfig& cfg, const std::string& out_path) {
  if (!cfg.null_model || cfg.null_model->kind != GeneratorSpec::Kind::SampleDir) {
    throw ConfigError("assess-samples needs a sample directory (key 'samples')");
  }
  if (cfg.observed.empty()) throw ConfigError("assess-samples needs an observed graph file");
  if (cfg.kernels.empty()) throw ConfigError("assess-samples needs a kernel list");
  if (cfg.statistics.empty()) throw ConfigError("assess-samples needs 'statistics'");

  const Graph observed = read_graph_file(cfg.observed);
  ResumableCsv csv(out_path,
                   "experiment,kernel,statistic,value,threshold,p_value,reject,null_sims,elapsed_ms",
                   3);

  for (const StatisticKind statistic : cfg.statistics) {
    for (const KernelSpec& kernel : cfg.kernels) {
      const std::string key =
          "assess-samples," + kernel.name() + ',' + statistic_kind_name(statistic);
      if (csv.done(key)) continue;

      TestConfig tc = base_test_config(cfg);
      tc.kernel = kernel;
      tc.estimator_statistic = statistic;
      tc.seed = derive_seed(cfg.seed, fnv1a(key));

      const auto start = std::chrono::steady_clock::now();
      const TestOutcome outcome = run_test(tc, observed);
      csv.append(key, format_value(outcome.statistic) + ',' + format_value(outcome.threshold) +
                          ',' + format_fixed(outcome.p_value, 6) + ',' +
                          (outcome.reject ? "1" : "0") + ',' +
                          std::to_string(outcome.null_simulations) + ',' +
                          format_fixed(elapsed_ms(start), 3));
    }
  }
}

void cmd_runtime_bench(const ExperimentConfig& cfg, const std::string& out_path) {
  if (cfg.kernels.empty()) throw ConfigError("runtime-bench needs a kernel list");
  if (cfg.n_list.empty()) throw ConfigError("runtime-bench needs 'n_list'");
  if (cfg.regimes.empty()) throw ConfigError("runtime-bench needs 'regimes'");
  if (cfg.bench_graphs < 1 || cfg.bench_reps < 1) {
    throw ConfigError("runtime-bench needs positive 'graphs' and 'reps'");
  }

  ResumableCsv csv(out_path, "experiment,kernel,regime,n,graphs,reps,min_ms,avg_ms,max_ms", 4);

  for (const std::string& regime : cfg.regimes) {
    const ErgmModel model = ErgmModel::e2s(regime == "sparse" ? -2.0 : 1.0, 0.0);
    for (const int n : cfg.n_list) {
      std::vector<Graph> graphs;
      graphs.reserve(static_cast<std::size_t>(cfg.bench_graphs));
      const std::uint64_t draw_seed =
          derive_seed(cfg.seed, fnv1a("bench-graphs," + regime + ',' + std::to_string(n)));
      for (int i = 0; i < cfg.bench_graphs; ++i) {
        graphs.push_back(gibbs_sample(model, n, default_gibbs_steps(n), derive_seed(draw_seed, 1, i)));
      }
      const ScoreSource score = ScoreSource::exact(model);

      for (const KernelSpec& kernel : cfg.kernels) {
        const std::string key =
            "runtime-bench," + kernel.name() + ',' + regime + ',' + std::to_string(n);
        if (csv.done(key)) continue;

        std::vector<double> medians;
        medians.reserve(graphs.size());
        for (std::size_t g = 0; g < graphs.size(); ++g) {
          const PairSelection selection = PairSelection::resample(
              cfg.resample_count, derive_seed(cfg.seed, fnv1a(key), g));
          std::vector<double> times;
          // One warm-up run, then `reps` timed repetitions of the same
          // statistic; the median largely removes scheduling noise.
          for (int r = 0; r <= cfg.bench_reps; ++r) {
            const auto start = std::chrono::steady_clock::now();
            kss_squared(score, graphs[g], kernel, cfg.convention, selection, cfg.fast_grw);
            const double ms = elapsed_ms(start);
            if (r > 0) times.push_back(ms);
          }
          medians.push_back(median(times));
        }
        double lo = medians.front(), hi = medians.front(), sum = 0.0;
        for (const double m : medians) {
          lo = std::min(lo, m);
          hi = std::max(hi, m);
          sum += m;
        }
        csv.append(key, std::to_string(cfg.bench_graphs) + ',' + std::to_string(cfg.bench_reps) +
                            ',' + format_fixed(lo, 3) + ',' +
                            format_fixed(sum / static_cast<double>(medians.size()), 3) + ',' +
                            format_fixed(hi, 3));
      }
    }
  }
}

}  // namespace gkss::tools
