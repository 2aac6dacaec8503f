// Timing harness: OpenMP Gram assembly against the serial reference, and the
// rank-2 geometric random walk path against the dense Kronecker solve.
#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <vector>

#include "CLI11.hpp"
#include "gkss/ergm.hpp"
#include "gkss/kernels.hpp"
#include "gkss/reference.hpp"
#include "gkss/rng.hpp"
#include "gkss/stein.hpp"

namespace {

double now_ms() {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

template <typename F>
double time_ms(F&& fn) {
  const double start = now_ms();
  fn();
  return now_ms() - start;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Timing comparison of parallel and reference code paths"};
  bool full = false;
  std::uint64_t seed = 7;
  app.add_flag("--full", full, "paper-scale sizes (n=20, B=200, 60 graphs)");
  app.add_option("--seed", seed, "graph draw seed");
  CLI11_PARSE(app, argc, argv);

  const int n = full ? 20 : 12;
  const int batch = full ? 60 : 30;
  const int resamples = full ? 200 : 80;

  const gkss::ErgmModel model = gkss::ErgmModel::e2s(-2.0, 0.0);
  std::vector<gkss::Graph> graphs;
  int dmax = 1;
  for (int i = 0; i < batch; ++i) {
    graphs.push_back(gkss::gibbs_sample(model, n, gkss::default_gibbs_steps(n),
                                        gkss::derive_seed(seed, 0xbe, i)));
    dmax = std::max(dmax, graphs.back().max_degree());
  }
  const double lambda = 0.5 / static_cast<double>(dmax + 1);

  std::printf("threads=%d  n=%d  graphs=%d  B=%d  grw lambda=%.4f\n\n", omp_get_max_threads(),
              n, batch, resamples, lambda);
  std::printf("%-12s %12s %12s %9s %12s\n", "kernel", "serial ms", "parallel ms", "speedup",
              "max |diff|");

  const std::vector<gkss::KernelSpec> kernels = {
      gkss::KernelSpec::constant(),
      gkss::KernelSpec::vertex_edge_histogram(1.0),
      gkss::KernelSpec::k_step_random_walk(3),
      gkss::KernelSpec::geometric_random_walk(lambda),
      gkss::KernelSpec::shortest_path(),
      gkss::KernelSpec::weisfeiler_lehman(3),
      gkss::KernelSpec::graphlet(4),
  };
  for (const gkss::KernelSpec& kernel : kernels) {
    Eigen::MatrixXd serial, parallel;
    const double t_serial = time_ms([&] { serial = gkss::ref::gram_matrix(kernel, graphs); });
    const double t_parallel = time_ms([&] { parallel = gkss::gram_matrix(kernel, graphs); });
    const double diff = (serial - parallel).cwiseAbs().maxCoeff();
    std::printf("%-12s %12.2f %12.2f %8.2fx %12.3g\n", kernel.name().c_str(), t_serial,
                t_parallel, t_serial / t_parallel, diff);
  }

  const gkss::Graph& x = graphs.front();
  const gkss::ScoreSource score = gkss::ScoreSource::exact(model);
  const std::vector<gkss::PairIndex> pairs = gkss::select_pairs(
      x, gkss::PairSelection::resample(resamples, gkss::derive_seed(seed, 0x70, 0)));

  gkss::SteinKernelMatrix dense, fast;
  const gkss::KernelSpec grw = gkss::KernelSpec::geometric_random_walk(lambda);
  const double t_dense = time_ms([&] {
    dense = gkss::stein_kernel_matrix(score, x, pairs, grw, gkss::Convention::FlipFeature);
  });
  const double t_fast = time_ms([&] {
    fast = gkss::fast_grw_stein_matrix(score, x, lambda, pairs, gkss::Convention::FlipFeature);
  });
  const double diff = (dense.h - fast.h).cwiseAbs().maxCoeff();
  std::printf("\nStein matrix, geometric random walk (B=%d):\n", resamples);
  std::printf("  dense solve  %10.2f ms\n", t_dense);
  std::printf("  rank-2 path  %10.2f ms   (%.1fx, max |diff| %.3g)\n", t_fast,
              t_dense / t_fast, diff);
  return 0;
}
