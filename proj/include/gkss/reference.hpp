// Slow, independent reference implementations used only by the tests. Each
// routine recomputes its quantity from first principles (explicit Kronecker
// products, string relabelling, subset enumeration) so agreement with the
// library is evidence, not circularity.
#ifndef GKSS_REFERENCE_HPP
#define GKSS_REFERENCE_HPP

#include <Eigen/Dense>
#include <vector>

#include "gkss/graph.hpp"
#include "gkss/kernels.hpp"
#include "gkss/stein.hpp"

namespace gkss::ref {

long two_star_bruteforce(const Graph& x);
long triangle_bruteforce(const Graph& x);

double vertex_edge_histogram_bruteforce(const Graph& x, const Graph& x2, double sigma);

// 1^T (A kron A')^t 1 with the Kronecker matrix materialised.
double walk_count(const Graph& x, const Graph& x2, int steps);

// sum_{t=0}^{terms} lambda^t walk_count(t); converges to the geometric
// random walk kernel when lambda * dmax * dmax' < 1.
double grw_power_series(const Graph& x, const Graph& x2, double lambda, int terms);

double sp_kernel_bruteforce(const Graph& x, const Graph& x2);

// Weisfeiler-Lehman with string labels and a per-round shared dictionary.
double wl_kernel(const Graph& x, const Graph& x2, int rounds);

// Subset enumeration with per-subset isomorphism keys; classes ordered by
// (edge count, sorted degree sequence, triangle count).
std::vector<long> graphlet_features_bruteforce(const Graph& x, int size,
                                               bool connected_only);

// Serial entry-by-entry Gram matrix, no feature caching or batching.
Eigen::MatrixXd gram_matrix(const KernelSpec& spec, const std::vector<Graph>& graphs);

// Quadratic form assembled term by term with fresh kernel evaluations; no
// Gram reuse, no flip deduplication.
double kss_squared_independent(const ScoreSource& score, const Graph& x,
                               const KernelSpec& spec, Convention convention,
                               const std::vector<PairIndex>& pairs);

}  // namespace gkss::ref

#endif
