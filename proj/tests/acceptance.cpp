// End-to-end acceptance checks; one PASS/FAIL line per criterion, exit code
// counts the failures.
#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "../tools/config.hpp"
#include "../tools/experiments.hpp"
#include "gkss/ergm.hpp"
#include "gkss/errors.hpp"
#include "gkss/generators.hpp"
#include "gkss/graph.hpp"
#include "gkss/kernels.hpp"
#include "gkss/linalg.hpp"
#include "gkss/mc_test.hpp"
#include "gkss/reference.hpp"
#include "gkss/rng.hpp"
#include "gkss/stein.hpp"
#include "support.hpp"

using namespace gkss;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::uint64_t edge_mask(const Graph& x) {
  std::uint64_t mask = 0;
  for (PairIndex s = 0; s < pair_count(x.vertex_count()); ++s) {
    if (x.has_edge(s)) mask |= std::uint64_t{1} << s;
  }
  return mask;
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t m = values.size();
  return m % 2 == 1 ? values[m / 2] : 0.5 * (values[m / 2 - 1] + values[m / 2]);
}

// ---- criterion 1: exact Stein identity under enumeration ----

bool stein_identity() {
  const auto t0 = Clock::now();
  const std::vector<std::array<double, 2>> betas = {
      {-2.0, 0.0}, {1.0, 0.2}, {0.5, -0.3}};
  Rng rng(11);
  double worst = 0.0;
  for (const auto& beta : betas) {
    const ErgmModel m = ErgmModel::e2s(beta[0], beta[1]);
    const ScoreSource score = ScoreSource::exact(m);
    const auto dist = enumerate_distribution(m, 4);
    for (int f = 0; f < 10; ++f) {
      std::map<std::uint64_t, double> fn;
      for (const auto& [graph, prob] : dist) fn[edge_mask(graph)] = rng.next_double();
      double averaged = 0.0;
      for (PairIndex s = 0; s < pair_count(4); ++s) {
        const std::uint64_t bit = std::uint64_t{1} << s;
        for (const auto& [graph, prob] : dist) {
          const std::uint64_t mask = edge_mask(graph);
          averaged += prob * stein_coefficient(score, graph, s) *
                      (fn.at(mask | bit) - fn.at(mask & ~bit));
        }
      }
      worst = std::max(worst, std::abs(averaged / pair_count(4)));
    }
  }
  const double elapsed = seconds_since(t0);
  std::printf("  max |E[averaged Stein operator]| = %.3g, %.2f s\n", worst, elapsed);
  return worst <= 1e-10 && elapsed < 5.0;
}

// ---- criterion 2: rank-2 inverse updates ----

Eigen::MatrixXd random_dominant(int n, Rng& rng) {
  Eigen::MatrixXd b(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      b(i, j) = b(j, i) = 2.0 * rng.next_double() - 1.0;
    }
  }
  for (int i = 0; i < n; ++i) {
    double off = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j != i) off += std::abs(b(i, j));
    }
    b(i, i) = off + 1.0 + rng.next_double();
  }
  return b;
}

bool rank2_updates() {
  const auto t0 = Clock::now();
  Rng rng(7);
  double worst_entry = 0.0;
  double worst_sum = 0.0;
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(39));
    const Eigen::MatrixXd b = random_dominant(n, rng);
    const InverseState state = make_inverse_state(b);
    const int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
    if (j >= i) ++j;
    const double mu = 4.0 * rng.next_double() - 2.0;
    Eigen::MatrixXd m = b;
    m(i, j) += mu;
    m(j, i) += mu;
    InverseState updated;
    double sum = 0.0;
    try {
      updated = rank2_update(state, i, j, mu);
      sum = toggled_grw_sum(state, i, j, mu);
    } catch (const SingularUpdate&) {
      continue;
    }
    const Eigen::MatrixXd direct = m.fullPivLu().inverse();
    worst_entry = std::max(worst_entry, (updated.inv - direct).cwiseAbs().maxCoeff());
    worst_sum = std::max(worst_sum, std::abs(sum - direct.sum()));
    ++checked;
  }

  bool counterexample_ok = false;
  {
    Eigen::MatrixXd b(2, 2);
    b << 1.0, 1.0, 1.0, 2.0;
    const InverseState state = make_inverse_state(b);
    bool update_threw = false;
    bool sum_threw = false;
    try {
      rank2_update(state, 0, 1, 1.0);
    } catch (const SingularUpdate&) {
      update_threw = true;
    }
    try {
      toggled_grw_sum(state, 0, 1, 1.0);
    } catch (const SingularUpdate&) {
      sum_threw = true;
    }
    Eigen::MatrixXd m = b;
    m(0, 1) += 1.0;
    m(1, 0) += 1.0;
    Eigen::MatrixXd expected(2, 2);
    expected << -1.0, 1.0, 1.0, -0.5;
    const Eigen::MatrixXd direct = m.fullPivLu().inverse();
    counterexample_ok =
        update_threw && sum_threw && (direct - expected).cwiseAbs().maxCoeff() <= 1e-12;
  }

  const double elapsed = seconds_since(t0);
  std::printf("  %d updates checked, worst entry %.3g, worst sum %.3g, %.2f s\n", checked,
              worst_entry, worst_sum, elapsed);
  return checked >= 190 && worst_entry <= 1e-8 && worst_sum <= 1e-8 &&
         counterexample_ok && elapsed < 30.0;
}

// ---- criterion 3: kernel oracles ----

bool kernel_oracles() {
  const auto t0 = Clock::now();
  bool ok = true;

  std::vector<Graph> graphs;
  for (int g = 0; g < 10; ++g) graphs.push_back(test_support::random_graph(10, 0.4, 300 + g));
  int dmax = 1;
  for (const Graph& g : graphs) dmax = std::max(dmax, g.max_degree());
  const std::vector<KernelSpec> specs = {
      KernelSpec::constant(),
      KernelSpec::vertex_edge_histogram(1.0),
      KernelSpec::k_step_random_walk(3),
      KernelSpec::geometric_random_walk(0.5 / (dmax * dmax)),
      KernelSpec::shortest_path(),
      KernelSpec::weisfeiler_lehman(1),
      KernelSpec::weisfeiler_lehman(3),
      KernelSpec::graphlet(3),
      KernelSpec::graphlet(4),
      KernelSpec::connected_graphlet(3),
      KernelSpec::connected_graphlet(4)};
  for (const KernelSpec& spec : specs) {
    const Eigen::MatrixXd gram = gram_matrix(spec, graphs);
    if ((gram - gram.transpose()).cwiseAbs().maxCoeff() != 0.0) {
      std::printf("  %s: gram not symmetric\n", spec.name().c_str());
      ok = false;
    }
    const Eigen::VectorXd eig =
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(gram).eigenvalues();
    if (eig.minCoeff() < -1e-8 * eig.maxCoeff()) {
      std::printf("  %s: min eigenvalue %.3g vs max %.3g\n", spec.name().c_str(),
                  eig.minCoeff(), eig.maxCoeff());
      ok = false;
    }
  }

  Rng rng(31);
  double worst_grw = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const Graph x = test_support::random_graph(6, 0.4, 400 + trial);
    const Graph y = test_support::random_graph(7, 0.35, 450 + trial);
    const double lambda =
        0.5 / (std::max(1, x.max_degree()) * std::max(1, y.max_degree()));
    worst_grw = std::max(worst_grw,
                         std::abs(geometric_random_walk_kernel(x, y, lambda) -
                                  ref::grw_power_series(x, y, lambda, 60)));
  }
  if (worst_grw > 1e-6) {
    std::printf("  geometric walk vs series: %.3g\n", worst_grw);
    ok = false;
  }

  double worst_sp = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int na = 4 + static_cast<int>(rng.below(3));
    const int nb = 4 + static_cast<int>(rng.below(3));
    const Graph x = test_support::random_graph(na, 0.45, 500 + trial);
    const Graph y = test_support::random_graph(nb, 0.45, 550 + trial);
    worst_sp = std::max(worst_sp, std::abs(shortest_path_kernel(x, y) -
                                           ref::sp_kernel_bruteforce(x, y)));
  }
  if (worst_sp > 1e-9) {
    std::printf("  shortest path vs brute force: %.3g\n", worst_sp);
    ok = false;
  }

  for (int trial = 0; trial < 50; ++trial) {
    const Graph x = test_support::random_graph(8, 0.45, 600 + trial);
    for (const int size : {3, 4}) {
      const std::vector<long> features = graphlet_features(x, size, false);
      long sum = 0;
      for (const long f : features) sum += f;
      const long expected = size == 3 ? 56 : 70;
      if (sum != expected ||
          features != ref::graphlet_features_bruteforce(x, size, false)) {
        std::printf("  graphlet features wrong on trial %d size %d\n", trial, size);
        ok = false;
      }
    }
  }
  if (graphlet_class_count(4) != 11 || connected_graphlet_class_count(4) != 6) {
    std::printf("  class counts %d / %d\n", graphlet_class_count(4),
                connected_graphlet_class_count(4));
    ok = false;
  }

  const double elapsed = seconds_since(t0);
  std::printf("  worst grw %.3g, worst sp %.3g, %.2f s\n", worst_grw, worst_sp, elapsed);
  return ok && elapsed < 120.0;
}

// ---- criteria 4 and 5: rejection-rate table over the two-star grid ----

struct PowerTable {
  std::array<std::string, 4> kernel_names;
  // rate[kernel][grid]; grid order beta2 = -0.5, 0, +0.5.
  double rate[4][3] = {};
};

const PowerTable& power_table() {
  static std::optional<PowerTable> table;
  static std::exception_ptr failure;
  if (failure) std::rethrow_exception(failure);
  if (!table) {
    try {
      PowerTable t;
      const std::vector<KernelSpec> kernels = {
          KernelSpec::constant(), KernelSpec::weisfeiler_lehman(1),
          KernelSpec::weisfeiler_lehman(3), KernelSpec::graphlet(3)};
      const double grid[3] = {-0.5, 0.0, 0.5};
      for (int ki = 0; ki < 4; ++ki) {
        t.kernel_names[ki] = kernels[ki].name();
        for (int gi = 0; gi < 3; ++gi) {
          TestConfig config;
          config.null_model = GeneratorSpec::ergm(20, ErgmModel::e2s(-2.0, 0.0));
          config.kernel = kernels[ki];
          config.resample_count = 200;
          config.null_simulations = 200;
          config.level = 0.05;
          config.seed = derive_seed(20, ki, gi);
          const RejectionRate r = rejection_rate(
              config, GeneratorSpec::ergm(20, ErgmModel::e2s(-2.0, grid[gi])), 100);
          t.rate[ki][gi] = r.rate;
          std::printf("  %-7s beta2=%+.1f rate=%.2f\n", t.kernel_names[ki].c_str(),
                      grid[gi], r.rate);
          std::fflush(stdout);
        }
      }
      table = t;
    } catch (...) {
      failure = std::current_exception();
      std::rethrow_exception(failure);
    }
  }
  return *table;
}

bool type_one_calibration() {
  const PowerTable& t = power_table();
  bool ok = true;
  for (int ki = 0; ki < 4; ++ki) {
    if (t.rate[ki][1] < 0.013 || t.rate[ki][1] > 0.115) {
      std::printf("  %s null rate %.3f outside [0.013, 0.115]\n",
                  t.kernel_names[ki].c_str(), t.rate[ki][1]);
      ok = false;
    }
  }
  return ok;
}

bool power_monotonicity() {
  const PowerTable& t = power_table();
  bool ok = true;
  for (int ki = 0; ki < 4; ++ki) {
    if (t.rate[ki][1] > t.rate[ki][0] || t.rate[ki][1] > t.rate[ki][2]) {
      std::printf("  %s null rate %.2f not minimal (flanks %.2f / %.2f)\n",
                  t.kernel_names[ki].c_str(), t.rate[ki][1], t.rate[ki][0], t.rate[ki][2]);
      ok = false;
    }
  }
  const double null_rate = t.rate[1][1];
  if (t.rate[1][0] < null_rate + 0.15 || t.rate[1][2] < null_rate + 0.15) {
    std::printf("  wl 1 flanks %.2f / %.2f vs null %.2f lack the 0.15 margin\n",
                t.rate[1][0], t.rate[1][2], null_rate);
    ok = false;
  }
  return ok;
}

// ---- criterion 6: constant-kernel conventions ----

bool constant_kernel_conventions() {
  const ErgmModel m = ErgmModel::e2s(-1.5, 0.1);
  const ScoreSource score = ScoreSource::exact(m);
  const int n = 12;
  bool ok = true;
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const Graph x = gibbs_sample(m, n, default_gibbs_steps(n), 4000 + t);

    const double literal = kss_squared(score, x, KernelSpec::constant(),
                                       Convention::Literal, PairSelection::all());
    if (literal != 0.0) {
      std::printf("  literal statistic %.3g at input %d\n", literal, t);
      ok = false;
    }

    TestConfig config;
    config.null_model = GeneratorSpec::ergm(n, m);
    config.kernel = KernelSpec::constant();
    config.convention = Convention::Literal;
    config.resample_count = 60;
    config.null_simulations = 40;
    config.seed = 600 + t;
    if (run_test(config, x).reject) {
      std::printf("  literal test rejected input %d\n", t);
      ok = false;
    }

    const double flip = kss_squared(score, x, KernelSpec::constant(),
                                    Convention::FlipFeature, PairSelection::all());
    double mean = 0.0;
    for (PairIndex s = 0; s < pair_count(n); ++s) mean += stein_coefficient(score, x, s);
    mean /= static_cast<double>(pair_count(n));
    worst = std::max(worst, std::abs(flip - mean * mean));
  }
  std::printf("  max |flip-feature - squared mean residual| = %.3g\n", worst);
  return ok && worst <= 1e-12;
}

// ---- criterion 7: estimated conditionals converge to the exact ones ----

bool agrasst_consistency() {
  const ErgmModel m = ErgmModel::edge_only(-1.0);
  const ScoreSource score = ScoreSource::exact(m);
  const int n = 15;
  const KernelSpec spec = KernelSpec::weisfeiler_lehman(1);
  const std::array<int, 3> fit_sizes = {50, 500, 5000};

  std::vector<Graph> inputs;
  std::vector<double> exact_stats;
  for (int i = 0; i < 50; ++i) {
    inputs.push_back(gibbs_sample(m, n, default_gibbs_steps(n), 7000 + i));
    exact_stats.push_back(kss_squared(score, inputs.back(), spec,
                                      Convention::FlipFeature, PairSelection::all()));
  }

  std::array<double, 3> medians = {};
  for (std::size_t fi = 0; fi < fit_sizes.size(); ++fi) {
    std::vector<double> diffs;
    for (int i = 0; i < 50; ++i) {
      std::vector<Graph> fit_samples;
      fit_samples.reserve(fit_sizes[fi]);
      for (int k = 0; k < fit_sizes[fi]; ++k) {
        fit_samples.push_back(gibbs_sample(m, n, default_gibbs_steps(n),
                                           derive_seed(8000 + i, fi, k)));
      }
      const ConditionalEstimator est =
          ConditionalEstimator::fit(StatisticKind::Density, fit_samples);
      const double approx = agrasst_squared(est, inputs[i], spec,
                                            Convention::FlipFeature, PairSelection::all());
      diffs.push_back(std::abs(approx - exact_stats[i]));
    }
    medians[fi] = median(diffs);
    std::printf("  fit size %4d: median |agrasst - kss| = %.3g\n", fit_sizes[fi],
                medians[fi]);
    std::fflush(stdout);
  }
  return medians[0] > medians[1] && medians[1] > medians[2];
}

// ---- criterion 8: geometric-torus power is lower at r=0.45 than r=0.60 ----

bool grg_torus_dip() {
  const double grid[3] = {0.30, 0.45, 0.60};
  double rate[3] = {};
  for (int gi = 0; gi < 3; ++gi) {
    TestConfig config;
    config.null_model = GeneratorSpec::grg_torus(20, 0.30);
    config.estimator_statistic = StatisticKind::Bidegree;
    config.estimator_samples = 100;
    config.kernel = KernelSpec::constant();
    config.resample_count = 200;
    config.null_simulations = 100;
    config.level = 0.05;
    config.seed = derive_seed(88, 0, gi);
    rate[gi] =
        rejection_rate(config, GeneratorSpec::grg_torus(20, grid[gi]), 100).rate;
    std::printf("  radius %.2f rate %.2f\n", grid[gi], rate[gi]);
    std::fflush(stdout);
  }
  return rate[1] < rate[2];
}

// ---- criterion 9: preferential attachment structure ----

bool ba_structure() {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const Graph tree = barabasi_albert_sample(20, 1, 1.0, seed);
    if (tree.edge_count() != 19 || !test_support::connected(tree)) {
      std::printf("  m=1 seed %llu not a tree\n", static_cast<unsigned long long>(seed));
      return false;
    }
    if (barabasi_albert_sample(20, 2, 1.0, seed).edge_count() != 1 + 2 * 18) {
      std::printf("  m=2 seed %llu edge count off\n",
                  static_cast<unsigned long long>(seed));
      return false;
    }
  }
  return true;
}

// ---- criterion 10: statistic runtime ordering in the dense regime ----

bool runtime_ordering() {
  const ErgmModel dense = ErgmModel::e2s(1.0, 0.0);
  const ScoreSource score = ScoreSource::exact(dense);
  const int n = 20;
  std::vector<Graph> graphs;
  for (int g = 0; g < 20; ++g) {
    graphs.push_back(gibbs_sample(dense, n, default_gibbs_steps(n), 1500 + g));
  }

  const std::vector<KernelSpec> kernels = {
      KernelSpec::constant(), KernelSpec::weisfeiler_lehman(1), KernelSpec::shortest_path()};
  std::array<double, 3> med = {};
  for (std::size_t ki = 0; ki < kernels.size(); ++ki) {
    std::vector<double> per_graph;
    for (std::size_t g = 0; g < graphs.size(); ++g) {
      const PairSelection selection = PairSelection::resample(200, derive_seed(3000, ki, g));
      std::vector<double> reps;
      for (int r = 0; r < 6; ++r) {
        const auto t0 = Clock::now();
        kss_squared(score, graphs[g], kernels[ki], Convention::FlipFeature, selection);
        const double ms = 1e3 * seconds_since(t0);
        if (r > 0) reps.push_back(ms);
      }
      per_graph.push_back(median(reps));
    }
    med[ki] = median(per_graph);
    std::printf("  %-7s median %.3f ms\n", kernels[ki].name().c_str(), med[ki]);
  }
  return med[0] < med[1] && med[1] < med[2] && med[2] >= 100.0 * med[0];
}

// ---- criterion 11: sample assessment calibration ----

int count_rejections(const std::string& csv_path, std::map<std::string, int>& by_kernel) {
  std::ifstream in(csv_path);
  std::string line;
  std::getline(in, line);  // header
  int rejections = 0;
  while (std::getline(in, line)) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ls(line);
    while (std::getline(ls, field, ',')) fields.push_back(field);
    if (fields.size() < 7) continue;
    const int reject = std::stoi(fields[6]);
    by_kernel[fields[1]] = reject;
    rejections += reject;
  }
  return rejections;
}

std::vector<KernelSpec> assessment_kernels() {
  const std::vector<std::string> names = {
      "const", "gveh 0.1", "gveh 1", "gveh 10", "krw 2",  "krw 3",  "krw 4",
      "krw 5", "grw 0.01", "grw 0.02", "sp",    "wl 1",   "wl 2",   "wl 3",
      "wl 4",  "wl 5",     "wl 6",     "glet 3", "glet 4", "conglet 3", "conglet 4"};
  std::vector<KernelSpec> specs;
  for (const std::string& name : names) specs.push_back(kernel_spec_from_name(name));
  return specs;
}

bool assessment_calibration() {
  test_support::TempDir work;

  // Matched case: observed and samples share one geometric generator.
  const std::string matched_dir = work.str() + "/matched";
  std::filesystem::create_directory(matched_dir);
  const NullSampler grg(GeneratorSpec::grg_torus(20, 0.3));
  for (int i = 0; i < 100; ++i) {
    char name[32];
    std::snprintf(name, sizeof(name), "/s%03d.txt", i);
    write_graph_file(grg.draw(4242, i), matched_dir + name);
  }
  const std::string matched_observed = work.file("matched_observed.txt");
  write_graph_file(grg.draw(4242, 100), matched_observed);

  tools::ExperimentConfig cfg;
  cfg.experiment = "assess-samples";
  cfg.null_model = GeneratorSpec::sample_dir(matched_dir);
  cfg.observed = matched_observed;
  cfg.statistics = {StatisticKind::Bidegree};
  cfg.kernels = assessment_kernels();
  cfg.resample_count = 200;
  cfg.null_simulations = 100;
  cfg.level = 0.05;
  cfg.seed = 2024;
  const std::string matched_csv = work.file("matched.csv");
  tools::cmd_assess_samples(cfg, matched_csv);
  std::map<std::string, int> matched_by_kernel;
  const int matched_rejections = count_rejections(matched_csv, matched_by_kernel);
  std::printf("  matched generator: %d of %zu kernels reject\n", matched_rejections,
              matched_by_kernel.size());
  std::fflush(stdout);

  // Extreme mismatch: a complete observed graph against sparse model samples.
  const std::string sparse_dir = work.str() + "/sparse";
  std::filesystem::create_directory(sparse_dir);
  const ErgmModel sparse = ErgmModel::e2s(-2.0, 0.0);
  for (int i = 0; i < 100; ++i) {
    char name[32];
    std::snprintf(name, sizeof(name), "/s%03d.txt", i);
    write_graph_file(gibbs_sample(sparse, 20, default_gibbs_steps(20), 9000 + i),
                     sparse_dir + name);
  }
  const std::string complete_observed = work.file("complete_observed.txt");
  write_graph_file(test_support::complete_graph(20), complete_observed);

  cfg.null_model = GeneratorSpec::sample_dir(sparse_dir);
  cfg.observed = complete_observed;
  cfg.statistics = {StatisticKind::Density};
  const std::string mismatch_csv = work.file("mismatch.csv");
  tools::cmd_assess_samples(cfg, mismatch_csv);
  std::map<std::string, int> mismatch_by_kernel;
  count_rejections(mismatch_csv, mismatch_by_kernel);

  bool density_sensitive_reject = true;
  for (const auto& [kernel, reject] : mismatch_by_kernel) {
    const bool density_sensitive =
        kernel == "const" || kernel.rfind("gveh", 0) == 0 || kernel.rfind("wl", 0) == 0 ||
        kernel.rfind("glet", 0) == 0 || kernel.rfind("conglet", 0) == 0;
    if (density_sensitive && reject != 1) {
      std::printf("  mismatch: %s failed to reject\n", kernel.c_str());
      density_sensitive_reject = false;
    }
  }

  // The calibration bound realises "about one expected rejection at a=0.05
  // over 21 rows" as at most three at the pinned seed.
  return matched_by_kernel.size() == 21 && matched_rejections <= 3 &&
         mismatch_by_kernel.size() == 21 && density_sensitive_reject;
}

struct Criterion {
  int id;
  const char* label;
  bool (*fn)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "exact Stein identity", stein_identity},
      {2, "rank-2 inverse updates", rank2_updates},
      {3, "kernel oracles", kernel_oracles},
      {4, "type-I calibration", type_one_calibration},
      {5, "power monotonicity", power_monotonicity},
      {6, "constant-kernel conventions", constant_kernel_conventions},
      {7, "estimated-conditional consistency", agrasst_consistency},
      {8, "geometric torus power ordering", grg_torus_dip},
      {9, "preferential attachment structure", ba_structure},
      {10, "statistic runtime ordering", runtime_ordering},
      {11, "sample assessment calibration", assessment_calibration},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    bool pass = false;
    try {
      pass = c.fn();
    } catch (const std::exception& e) {
      std::printf("  exception: %s\n", e.what());
      pass = false;
    }
    std::printf("criterion %d: %s - %s\n", c.id, pass ? "PASS" : "FAIL", c.label);
    std::fflush(stdout);
    if (!pass) ++failures;
  }
  return failures;
}
