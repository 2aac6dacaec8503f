#include "gkss/kernels.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdio>
#include <exception>
#include <map>
#include <ostream>
#include <sstream>

namespace gkss {

namespace {

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

}  // namespace

KernelSpec KernelSpec::constant() {
  KernelSpec s;
  s.kind = KernelKind::Constant;
  return s;
}

KernelSpec KernelSpec::vertex_edge_histogram(double sigma) {
  if (!(sigma > 0.0)) throw InvalidArgument("vertex_edge_histogram: sigma must be positive");
  KernelSpec s;
  s.kind = KernelKind::VertexEdgeHistogram;
  s.sigma = sigma;
  return s;
}

KernelSpec KernelSpec::k_step_random_walk(int walk_length, double lambda) {
  if (walk_length < 0) throw InvalidArgument("k_step_random_walk: negative walk length");
  if (!(lambda >= 0.0)) throw InvalidArgument("k_step_random_walk: negative weight");
  KernelSpec s;
  s.kind = KernelKind::KStepRandomWalk;
  s.walk_length = walk_length;
  s.lambda = lambda;
  return s;
}

KernelSpec KernelSpec::geometric_random_walk(double lambda) {
  if (!(lambda > 0.0)) throw InvalidArgument("geometric_random_walk: discount must be positive");
  KernelSpec s;
  s.kind = KernelKind::GeometricRandomWalk;
  s.lambda = lambda;
  return s;
}

KernelSpec KernelSpec::shortest_path() {
  KernelSpec s;
  s.kind = KernelKind::ShortestPath;
  return s;
}

KernelSpec KernelSpec::weisfeiler_lehman(int rounds) {
  if (rounds < 0) throw InvalidArgument("weisfeiler_lehman: negative round count");
  KernelSpec s;
  s.kind = KernelKind::WeisfeilerLehman;
  s.rounds = rounds;
  return s;
}

KernelSpec KernelSpec::graphlet(int size) {
  if (size != 3 && size != 4) throw InvalidArgument("graphlet: size must be 3 or 4");
  KernelSpec s;
  s.kind = KernelKind::Graphlet;
  s.graphlet_size = size;
  return s;
}

KernelSpec KernelSpec::connected_graphlet(int size) {
  KernelSpec s = graphlet(size);
  s.kind = KernelKind::ConnectedGraphlet;
  return s;
}

std::string KernelSpec::family() const {
  switch (kind) {
    case KernelKind::Constant: return "const";
    case KernelKind::VertexEdgeHistogram: return "gveh";
    case KernelKind::KStepRandomWalk: return "krw";
    case KernelKind::GeometricRandomWalk: return "grw";
    case KernelKind::ShortestPath: return "sp";
    case KernelKind::WeisfeilerLehman: return "wl";
    case KernelKind::Graphlet: return "glet";
    case KernelKind::ConnectedGraphlet: return "conglet";
  }
  return "?";
}

std::string KernelSpec::parameter() const {
  switch (kind) {
    case KernelKind::Constant:
    case KernelKind::ShortestPath: return "";
    case KernelKind::VertexEdgeHistogram: return format_number(sigma);
    case KernelKind::KStepRandomWalk:
      return lambda == 1.0 / 3.0
                 ? std::to_string(walk_length)
                 : std::to_string(walk_length) + " " + format_number(lambda);
    case KernelKind::GeometricRandomWalk: return format_number(lambda);
    case KernelKind::WeisfeilerLehman: return std::to_string(rounds);
    case KernelKind::Graphlet:
    case KernelKind::ConnectedGraphlet: return std::to_string(graphlet_size);
  }
  return "";
}

std::string KernelSpec::name() const {
  const std::string p = parameter();
  return p.empty() ? family() : family() + " " + p;
}

KernelSpec kernel_spec_from_name(const std::string& text) {
  std::istringstream in(text);
  std::string fam;
  in >> fam;
  auto need_number = [&](const char* what) {
    double v = 0.0;
    if (!(in >> v)) throw InvalidArgument("kernel '" + text + "': missing " + what);
    return v;
  };
  KernelSpec spec;
  if (fam == "const") {
    spec = KernelSpec::constant();
  } else if (fam == "gveh") {
    spec = KernelSpec::vertex_edge_histogram(need_number("bandwidth"));
  } else if (fam == "krw") {
    const int k = static_cast<int>(need_number("walk length"));
    double lam = 1.0 / 3.0;
    in >> lam;
    spec = KernelSpec::k_step_random_walk(k, lam);
  } else if (fam == "grw") {
    spec = KernelSpec::geometric_random_walk(need_number("discount"));
  } else if (fam == "sp") {
    spec = KernelSpec::shortest_path();
  } else if (fam == "wl") {
    spec = KernelSpec::weisfeiler_lehman(static_cast<int>(need_number("round count")));
  } else if (fam == "glet") {
    spec = KernelSpec::graphlet(static_cast<int>(need_number("size")));
  } else if (fam == "conglet") {
    spec = KernelSpec::connected_graphlet(static_cast<int>(need_number("size")));
  } else {
    throw InvalidArgument("unknown kernel '" + text + "'");
  }
  std::string rest;
  if (in >> rest) throw InvalidArgument("kernel '" + text + "': trailing '" + rest + "'");
  return spec;
}

Eigen::MatrixXd adjacency_matrix(const Graph& x) {
  const int n = x.vertex_count();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (x.has_edge(i, j)) a(i, j) = a(j, i) = 1.0;
  return a;
}

double vertex_edge_histogram_kernel(const Graph& x, const Graph& x2, double sigma) {
  if (!(sigma > 0.0)) throw InvalidArgument("vertex_edge_histogram: sigma must be positive");
  if (x.vertex_count() != x2.vertex_count())
    throw IncompatibleGraphs("vertex_edge_histogram: vertex counts differ");
  // With per-vertex index labels the histogram difference reduces to the
  // number of ordered vertex pairs whose edge status differs.
  const int n = x.vertex_count();
  const int words = x.words_per_row();
  long diff = 0;
  for (int v = 0; v < n; ++v) {
    const std::uint64_t* a = x.row(v);
    const std::uint64_t* b = x2.row(v);
    for (int w = 0; w < words; ++w) diff += std::popcount(a[w] ^ b[w]);
  }
  return std::exp(-static_cast<double>(diff) / (2.0 * sigma * sigma));
}

namespace {

// Sum of all entries of (A_x (x) A_x2)^t W computed factor-wise; the walk
// kernels only ever need entry totals, so the product graph stays implicit.
double walk_weight_sum(const Eigen::MatrixXd& ax, const Eigen::MatrixXd& ax2,
                       int steps, double lambda0, double lambda) {
  Eigen::MatrixXd w = Eigen::MatrixXd::Ones(ax.rows(), ax2.rows());
  double total = lambda0 * w.sum();
  for (int t = 1; t <= steps; ++t) {
    w = ax * w * ax2;
    total += lambda * w.sum();
  }
  return total;
}

}  // namespace

double k_step_random_walk_kernel(const Graph& x, const Graph& x2, int walk_length,
                                 double lambda) {
  if (walk_length < 0) throw InvalidArgument("k_step_random_walk: negative walk length");
  if (!(lambda >= 0.0)) throw InvalidArgument("k_step_random_walk: negative weight");
  // The iteration is associativity-sensitive in floating point, so evaluate
  // in a canonical argument order to keep the kernel exactly symmetric.
  const Graph& a = x2.lex_less(x) ? x2 : x;
  const Graph& b = x2.lex_less(x) ? x : x2;
  return walk_weight_sum(adjacency_matrix(a), adjacency_matrix(b), walk_length, 1.0, lambda);
}

double geometric_random_walk_kernel(const Graph& x, const Graph& x2, double lambda) {
  if (!(lambda > 0.0)) throw InvalidArgument("geometric_random_walk: discount must be positive");
  const Graph& a = x2.lex_less(x) ? x2 : x;
  const Graph& b = x2.lex_less(x) ? x : x2;
  const int da = a.max_degree();
  const int db = b.max_degree();
  if (lambda * std::max(da, db) >= 1.0)
    throw DivergentKernel("geometric_random_walk: lambda " + format_number(lambda) +
                          " too large for max degree " + std::to_string(std::max(da, db)));
  const int na = a.vertex_count();
  const int nb = b.vertex_count();
  const Eigen::MatrixXd aa = adjacency_matrix(a);
  const Eigen::MatrixXd ab = adjacency_matrix(b);
  const long dim = static_cast<long>(na) * nb;
  Eigen::MatrixXd system = Eigen::MatrixXd::Identity(dim, dim);
  // Product adjacency in row-major pair order: (u,v) -> u*nb + v.
  for (int u = 0; u < na; ++u)
    for (int u2 = 0; u2 < na; ++u2) {
      if (aa(u, u2) == 0.0) continue;
      for (int v = 0; v < nb; ++v)
        for (int v2 = 0; v2 < nb; ++v2) {
          if (ab(v, v2) == 0.0) continue;
          system(u * nb + v, u2 * nb + v2) -= lambda;
        }
    }
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(dim);
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(system);
  const Eigen::VectorXd solution = lu.solve(ones);
  if (!solution.allFinite() ||
      (system * solution - ones).lpNorm<Eigen::Infinity>() > 1e-6 * dim)
    throw SingularKernel("geometric_random_walk: linear solve failed");
  return solution.sum();
}

namespace {

constexpr int kUnreachable = 1 << 28;

// All-pairs shortest distances by Floyd-Warshall.
std::vector<int> floyd_distances(const Graph& x) {
  const int n = x.vertex_count();
  std::vector<int> d(static_cast<std::size_t>(n) * n, kUnreachable);
  for (int i = 0; i < n; ++i) d[i * n + i] = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (x.has_edge(i, j)) d[i * n + j] = d[j * n + i] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      const int dik = d[i * n + k];
      if (dik >= kUnreachable) continue;
      for (int j = 0; j < n; ++j) {
        const int cand = dik + d[k * n + j];
        if (cand < d[i * n + j]) d[i * n + j] = cand;
      }
    }
  return d;
}

// counts[d] = number of ordered vertex pairs at finite distance d >= 1.
std::vector<long> distance_counts(const Graph& x) {
  const int n = x.vertex_count();
  const std::vector<int> d = floyd_distances(x);
  std::vector<long> counts(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int dij = d[i * n + j];
      if (i != j && dij < kUnreachable) ++counts[dij];
    }
  return counts;
}

}  // namespace

double shortest_path_kernel(const Graph& x, const Graph& x2) {
  const std::vector<long> ca = distance_counts(x);
  const std::vector<long> cb = distance_counts(x2);
  const std::size_t top = std::min(ca.size(), cb.size());
  double total = 0.0;
  for (std::size_t d = 1; d < top; ++d)
    total += static_cast<double>(ca[d]) * static_cast<double>(cb[d]);
  return total;
}

namespace {

// Per-round label counts, sorted by label id. Labels are compressed through a
// dictionary shared across the whole batch, so counts are comparable between
// any two graphs of the batch.
using RoundCounts = std::vector<std::pair<int, long>>;

struct WlFeatures {
  std::vector<RoundCounts> rounds;
};

RoundCounts count_labels(const std::vector<int>& labels) {
  std::map<int, long> tally;
  for (int l : labels) ++tally[l];
  return RoundCounts(tally.begin(), tally.end());
}

std::vector<WlFeatures> wl_batch(const std::vector<const Graph*>& graphs, int rounds) {
  const std::size_t count = graphs.size();
  std::vector<WlFeatures> out(count);
  std::vector<std::vector<int>> labels(count);
  for (std::size_t g = 0; g < count; ++g) {
    labels[g].assign(graphs[g]->vertex_count(), 0);
    out[g].rounds.reserve(rounds + 1);
    out[g].rounds.push_back(count_labels(labels[g]));
  }
  for (int r = 1; r <= rounds; ++r) {
    std::map<std::vector<int>, int> dictionary;
    std::vector<std::vector<int>> next(count);
    for (std::size_t g = 0; g < count; ++g) {
      const Graph& graph = *graphs[g];
      const int n = graph.vertex_count();
      next[g].resize(n);
      for (int v = 0; v < n; ++v) {
        std::vector<int> signature;
        signature.reserve(graph.degree(v) + 1);
        signature.push_back(labels[g][v]);
        for (int u : graph.neighbours(v)) signature.push_back(labels[g][u]);
        std::sort(signature.begin() + 1, signature.end());
        const auto [it, inserted] =
            dictionary.try_emplace(std::move(signature), static_cast<int>(dictionary.size()));
        next[g][v] = it->second;
      }
    }
    labels = std::move(next);
    for (std::size_t g = 0; g < count; ++g) out[g].rounds.push_back(count_labels(labels[g]));
  }
  return out;
}

double wl_dot(const WlFeatures& a, const WlFeatures& b) {
  double total = 0.0;
  for (std::size_t r = 0; r < a.rounds.size(); ++r) {
    const RoundCounts& ra = a.rounds[r];
    const RoundCounts& rb = b.rounds[r];
    std::size_t i = 0, j = 0;
    while (i < ra.size() && j < rb.size()) {
      if (ra[i].first < rb[j].first) ++i;
      else if (rb[j].first < ra[i].first) ++j;
      else total += static_cast<double>(ra[i++].second) * static_cast<double>(rb[j++].second);
    }
  }
  return total;
}

}  // namespace

double weisfeiler_lehman_kernel(const Graph& x, const Graph& x2, int rounds) {
  if (rounds < 0) throw InvalidArgument("weisfeiler_lehman: negative round count");
  const std::vector<WlFeatures> feats = wl_batch({&x, &x2}, rounds);
  return wl_dot(feats[0], feats[1]);
}

namespace {

struct GraphletCatalog {
  std::vector<int> class_of_mask;   // per adjacency bitmask of the small graph
  std::vector<bool> connected;      // per class
  int class_count = 0;
  std::vector<int> connected_index; // class id -> index among connected classes, or -1
  int connected_count = 0;
};

bool mask_connected(int size, int mask) {
  auto edge_bit = [size](int a, int b) { return pair_index(a, b, size); };
  int reached = 1;
  for (int expanded = 0; expanded != reached;) {
    expanded = reached;
    for (int a = 0; a < size; ++a)
      for (int b = a + 1; b < size; ++b)
        if ((mask >> edge_bit(a, b)) & 1) {
          if (reached & (1 << a)) reached |= 1 << b;
          if (reached & (1 << b)) reached |= 1 << a;
        }
  }
  return reached == (1 << size) - 1;
}

GraphletCatalog build_catalog(int size) {
  const int bits = static_cast<int>(pair_count(size));
  const int masks = 1 << bits;
  // Key: edge count, sorted degree sequence, triangle count. Complete for
  // graphs on at most four vertices.
  struct Key {
    int edges;
    std::array<int, 4> degrees;
    int triangles;
    bool operator<(const Key& o) const {
      if (edges != o.edges) return edges < o.edges;
      if (degrees != o.degrees) return degrees < o.degrees;
      return triangles < o.triangles;
    }
  };
  std::vector<Key> keys(masks);
  std::map<Key, std::vector<int>> groups;
  for (int mask = 0; mask < masks; ++mask) {
    Key key{};
    key.degrees.fill(0);
    for (int a = 0; a < size; ++a)
      for (int b = a + 1; b < size; ++b)
        if ((mask >> pair_index(a, b, size)) & 1) {
          ++key.edges;
          ++key.degrees[a];
          ++key.degrees[b];
        }
    std::sort(key.degrees.begin(), key.degrees.begin() + size);
    for (int a = 0; a < size; ++a)
      for (int b = a + 1; b < size; ++b)
        for (int c = b + 1; c < size; ++c)
          if (((mask >> pair_index(a, b, size)) & 1) &&
              ((mask >> pair_index(a, c, size)) & 1) &&
              ((mask >> pair_index(b, c, size)) & 1))
            ++key.triangles;
    keys[mask] = key;
    groups[key].push_back(mask);
  }
  GraphletCatalog catalog;
  catalog.class_of_mask.assign(masks, -1);
  catalog.class_count = static_cast<int>(groups.size());
  catalog.connected.assign(catalog.class_count, false);
  catalog.connected_index.assign(catalog.class_count, -1);
  int id = 0;
  for (const auto& [key, members] : groups) {
    for (int mask : members) catalog.class_of_mask[mask] = id;
    catalog.connected[id] = mask_connected(size, members.front());
    if (catalog.connected[id]) catalog.connected_index[id] = catalog.connected_count++;
    ++id;
  }
  return catalog;
}

const GraphletCatalog& catalog_for(int size) {
  if (size != 3 && size != 4) throw InvalidArgument("graphlet: size must be 3 or 4");
  static const GraphletCatalog c3 = build_catalog(3);
  static const GraphletCatalog c4 = build_catalog(4);
  return size == 3 ? c3 : c4;
}

}  // namespace

int graphlet_class_count(int size) { return catalog_for(size).class_count; }

int connected_graphlet_class_count(int size) { return catalog_for(size).connected_count; }

std::vector<long> graphlet_features(const Graph& x, int size, bool connected_only) {
  const GraphletCatalog& catalog = catalog_for(size);
  const int n = x.vertex_count();
  if (n < size)
    throw GraphTooSmall("graphlet_features: graph has " + std::to_string(n) +
                        " vertices, need " + std::to_string(size));
  std::vector<long> full(catalog.class_count, 0);
  if (size == 3) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const int eij = x.has_edge(i, j);
        for (int k = j + 1; k < n; ++k) {
          const int mask = eij | (x.has_edge(i, k) << 1) | (x.has_edge(j, k) << 2);
          ++full[catalog.class_of_mask[mask]];
        }
      }
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const int eij = x.has_edge(i, j);
        for (int k = j + 1; k < n; ++k) {
          const int m3 = eij | (x.has_edge(i, k) << 1) | (x.has_edge(j, k) << 3);
          for (int l = k + 1; l < n; ++l) {
            const int mask = m3 | (x.has_edge(i, l) << 2) | (x.has_edge(j, l) << 4) |
                             (x.has_edge(k, l) << 5);
            ++full[catalog.class_of_mask[mask]];
          }
        }
      }
  }
  if (!connected_only) return full;
  std::vector<long> kept(catalog.connected_count, 0);
  for (int c = 0; c < catalog.class_count; ++c)
    if (catalog.connected[c]) kept[catalog.connected_index[c]] = full[c];
  return kept;
}

double graphlet_kernel(const Graph& x, const Graph& x2, int size, bool connected_only) {
  const std::vector<long> fa = graphlet_features(x, size, connected_only);
  const std::vector<long> fb = graphlet_features(x2, size, connected_only);
  double total = 0.0;
  for (std::size_t c = 0; c < fa.size(); ++c)
    total += static_cast<double>(fa[c]) * static_cast<double>(fb[c]);
  return total;
}

double kernel_eval(const KernelSpec& spec, const Graph& x, const Graph& x2) {
  switch (spec.kind) {
    case KernelKind::Constant: return 1.0;
    case KernelKind::VertexEdgeHistogram:
      return vertex_edge_histogram_kernel(x, x2, spec.sigma);
    case KernelKind::KStepRandomWalk:
      return k_step_random_walk_kernel(x, x2, spec.walk_length, spec.lambda);
    case KernelKind::GeometricRandomWalk:
      return geometric_random_walk_kernel(x, x2, spec.lambda);
    case KernelKind::ShortestPath: return shortest_path_kernel(x, x2);
    case KernelKind::WeisfeilerLehman:
      return weisfeiler_lehman_kernel(x, x2, spec.rounds);
    case KernelKind::Graphlet: return graphlet_kernel(x, x2, spec.graphlet_size, false);
    case KernelKind::ConnectedGraphlet:
      return graphlet_kernel(x, x2, spec.graphlet_size, true);
  }
  throw InvalidArgument("kernel_eval: unknown kernel kind");
}

namespace {

// Runs fn(k) for k in [0, count) under OpenMP, surfacing the first exception
// after the loop instead of terminating inside the parallel region.
template <typename Fn>
void parallel_for(long count, Fn&& fn) {
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < count; ++k) {
    try {
      fn(k);
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

// Flattened lower-triangle index k = a(a+1)/2 + b with b <= a, decoded with a
// correction step so sqrt rounding can never misplace an entry.
struct TriCell {
  long a;
  long b;
};

TriCell decode_tri(long k) {
  long a = static_cast<long>((std::sqrt(8.0 * static_cast<double>(k) + 1.0) - 1.0) / 2.0);
  while (a * (a + 1) / 2 > k) --a;
  while ((a + 1) * (a + 2) / 2 <= k) ++a;
  return {a, k - a * (a + 1) / 2};
}

Eigen::MatrixXd gram_from_features(const std::vector<std::vector<long>>& features) {
  const long m = static_cast<long>(features.size());
  Eigen::MatrixXd g(m, m);
  parallel_for(m * (m + 1) / 2, [&](long k) {
    const TriCell cell = decode_tri(k);
    double total = 0.0;
    for (std::size_t c = 0; c < features[cell.a].size(); ++c)
      total += static_cast<double>(features[cell.a][c]) *
               static_cast<double>(features[cell.b][c]);
    g(cell.a, cell.b) = g(cell.b, cell.a) = total;
  });
  return g;
}

}  // namespace

Eigen::MatrixXd gram_matrix(const KernelSpec& spec, const std::vector<Graph>& graphs) {
  const long m = static_cast<long>(graphs.size());
  if (m == 0) throw InvalidArgument("gram_matrix: empty graph list");

  if (spec.kind == KernelKind::WeisfeilerLehman) {
    std::vector<const Graph*> ptrs(graphs.size());
    for (std::size_t i = 0; i < graphs.size(); ++i) ptrs[i] = &graphs[i];
    const std::vector<WlFeatures> feats = wl_batch(ptrs, spec.rounds);
    Eigen::MatrixXd g(m, m);
    parallel_for(m * (m + 1) / 2, [&](long k) {
      const TriCell cell = decode_tri(k);
      g(cell.a, cell.b) = g(cell.b, cell.a) = wl_dot(feats[cell.a], feats[cell.b]);
    });
    return g;
  }

  if (spec.kind == KernelKind::Graphlet || spec.kind == KernelKind::ConnectedGraphlet) {
    const bool connected = spec.kind == KernelKind::ConnectedGraphlet;
    std::vector<std::vector<long>> features(graphs.size());
    parallel_for(m, [&](long i) {
      features[i] = graphlet_features(graphs[i], spec.graphlet_size, connected);
    });
    return gram_from_features(features);
  }

  Eigen::MatrixXd g(m, m);
  parallel_for(m * (m + 1) / 2, [&](long k) {
    const TriCell cell = decode_tri(k);
    g(cell.a, cell.b) = g(cell.b, cell.a) = kernel_eval(spec, graphs[cell.a], graphs[cell.b]);
  });
  return g;
}

void write_gram_csv(const Eigen::MatrixXd& gram, const std::vector<std::string>& ids,
                    std::ostream& out) {
  if (static_cast<long>(ids.size()) != gram.rows())
    throw InvalidArgument("write_gram_csv: id count does not match matrix size");
  out << "id";
  for (const std::string& id : ids) out << "," << id;
  out << "\n";
  char buf[64];
  for (long r = 0; r < gram.rows(); ++r) {
    out << ids[r];
    for (long c = 0; c < gram.cols(); ++c) {
      std::snprintf(buf, sizeof(buf), "%.17g", gram(r, c));
      out << "," << buf;
    }
    out << "\n";
  }
}

}  // namespace gkss
