#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <omp.h>

#include <vector>

#include "doctest.h"
#include "gkss/mc_test.hpp"
#include "gkss/reference.hpp"
#include "gkss/stein.hpp"
#include "support.hpp"

using namespace gkss;
using test_support::random_graph;

TEST_CASE("gram matrices do not depend on the thread count") {
  std::vector<Graph> graphs;
  for (int t = 0; t < 12; ++t) graphs.push_back(random_graph(9, 0.4, 10 + t));
  for (const KernelSpec& spec :
       {KernelSpec::weisfeiler_lehman(2), KernelSpec::shortest_path(),
        KernelSpec::graphlet(4), KernelSpec::vertex_edge_histogram(1.0)}) {
    omp_set_num_threads(1);
    const Eigen::MatrixXd serial = gram_matrix(spec, graphs);
    omp_set_num_threads(4);
    const Eigen::MatrixXd parallel = gram_matrix(spec, graphs);
    CHECK((serial - parallel).cwiseAbs().maxCoeff() == 0.0);
    CHECK((serial - ref::gram_matrix(spec, graphs)).cwiseAbs().maxCoeff() == 0.0);
  }
  omp_set_num_threads(omp_get_num_procs());
}

TEST_CASE("fast grw matrices do not depend on the thread count") {
  const Graph x = random_graph(10, 0.4, 3);
  const ScoreSource score = ScoreSource::exact(ErgmModel::e2s(-1.0, 0.2));
  const auto pairs = select_pairs(x, PairSelection::resample(40, 5));
  omp_set_num_threads(1);
  const SteinKernelMatrix serial = fast_grw_stein_matrix(score, x, 0.02, pairs);
  omp_set_num_threads(4);
  const SteinKernelMatrix parallel = fast_grw_stein_matrix(score, x, 0.02, pairs);
  CHECK((serial.h - parallel.h).cwiseAbs().maxCoeff() == 0.0);
  omp_set_num_threads(omp_get_num_procs());
}

TEST_CASE("test outcomes do not depend on the thread count") {
  TestConfig config;
  config.null_model = GeneratorSpec::ergm(8, ErgmModel::e2s(-2.0, 0.1));
  config.kernel = KernelSpec::weisfeiler_lehman(1);
  config.resample_count = 50;
  config.null_simulations = 30;
  config.seed = 4;
  const Graph observed = NullSampler(config.null_model).draw(12, 0);

  omp_set_num_threads(1);
  const TestOutcome serial = run_test(config, observed);
  const RejectionRate serial_rate = rejection_rate(config, config.null_model, 8);
  omp_set_num_threads(4);
  const TestOutcome parallel = run_test(config, observed);
  const RejectionRate parallel_rate = rejection_rate(config, config.null_model, 8);
  omp_set_num_threads(omp_get_num_procs());

  CHECK(serial.statistic == parallel.statistic);
  CHECK(serial.threshold == parallel.threshold);
  CHECK(serial.p_value == parallel.p_value);
  CHECK(serial.null_statistics == parallel.null_statistics);
  CHECK(serial_rate.rate == parallel_rate.rate);
  CHECK(serial_rate.stderr_ == parallel_rate.stderr_);
}
