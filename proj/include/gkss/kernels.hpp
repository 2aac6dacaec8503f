// Graph kernel suite: constant, Gaussian vertex-edge histogram, k-step and
// geometric random walk, shortest path, Weisfeiler-Lehman, and (connected)
// graphlet kernels, plus batched Gram assembly.
#ifndef GKSS_KERNELS_HPP
#define GKSS_KERNELS_HPP

#include <Eigen/Dense>
#include <iosfwd>
#include <string>
#include <vector>

#include "gkss/graph.hpp"

namespace gkss {

enum class KernelKind {
  Constant,
  VertexEdgeHistogram,
  KStepRandomWalk,
  GeometricRandomWalk,
  ShortestPath,
  WeisfeilerLehman,
  Graphlet,
  ConnectedGraphlet,
};

struct KernelSpec {
  KernelKind kind = KernelKind::Constant;
  double sigma = 1.0;        // Gaussian bandwidth
  int walk_length = 3;       // highest power in the k-step walk sum
  double lambda = 1.0 / 3.0; // step weight (k-step) or discount (geometric)
  int rounds = 1;            // Weisfeiler-Lehman refinement rounds
  int graphlet_size = 3;     // 3 or 4

  static KernelSpec constant();
  static KernelSpec vertex_edge_histogram(double sigma);
  static KernelSpec k_step_random_walk(int walk_length, double lambda = 1.0 / 3.0);
  static KernelSpec geometric_random_walk(double lambda);
  static KernelSpec shortest_path();
  static KernelSpec weisfeiler_lehman(int rounds);
  static KernelSpec graphlet(int size);
  static KernelSpec connected_graphlet(int size);

  // "wl 3", "gveh 0.1", "const", ... (family plus parameter).
  std::string name() const;
  std::string family() const;
  std::string parameter() const;
};

// Parses the name() format back into a spec ("krw 3 0.5" sets the weight).
KernelSpec kernel_spec_from_name(const std::string& text);

double kernel_eval(const KernelSpec& spec, const Graph& x, const Graph& x2);

// Dense adjacency copy used by the walk kernels and the Stein fast path.
Eigen::MatrixXd adjacency_matrix(const Graph& x);

double vertex_edge_histogram_kernel(const Graph& x, const Graph& x2, double sigma);
double k_step_random_walk_kernel(const Graph& x, const Graph& x2, int walk_length,
                                 double lambda);
double geometric_random_walk_kernel(const Graph& x, const Graph& x2, double lambda);
double shortest_path_kernel(const Graph& x, const Graph& x2);
double weisfeiler_lehman_kernel(const Graph& x, const Graph& x2, int rounds);
double graphlet_kernel(const Graph& x, const Graph& x2, int size, bool connected_only);

// Number of isomorphism classes of graphs on `size` vertices (4 for size 3,
// 11 for size 4), and of the connected ones (2 and 6).
int graphlet_class_count(int size);
int connected_graphlet_class_count(int size);

// Induced-subgraph counts per isomorphism class, ordered by (edge count,
// sorted degree sequence). Full counts sum to C(n, size).
std::vector<long> graphlet_features(const Graph& x, int size, bool connected_only);

// G[a,b] = kernel_eval(spec, graphs[a], graphs[b]). Entries are filled in
// parallel; WL and graphlet variants compute per-graph features once.
Eigen::MatrixXd gram_matrix(const KernelSpec& spec, const std::vector<Graph>& graphs);

// Row-major CSV dump with a header row of graph ids.
void write_gram_csv(const Eigen::MatrixXd& gram, const std::vector<std::string>& ids,
                    std::ostream& out);

}  // namespace gkss

#endif
