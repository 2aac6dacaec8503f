#include "gkss/reference.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <string>

#include "gkss/errors.hpp"

namespace gkss::ref {

long two_star_bruteforce(const Graph& x) {
  const int n = x.vertex_count();
  long count = 0;
  for (int c = 0; c < n; ++c) {
    for (int a = 0; a < n; ++a) {
      if (a == c || !x.has_edge(std::min(a, c), std::max(a, c))) continue;
      for (int b = a + 1; b < n; ++b) {
        if (b == c) continue;
        if (x.has_edge(std::min(b, c), std::max(b, c))) ++count;
      }
    }
  }
  return count;
}

long triangle_bruteforce(const Graph& x) {
  const int n = x.vertex_count();
  long count = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!x.has_edge(i, j)) continue;
      for (int k = j + 1; k < n; ++k) {
        if (x.has_edge(i, k) && x.has_edge(j, k)) ++count;
      }
    }
  }
  return count;
}

double vertex_edge_histogram_bruteforce(const Graph& x, const Graph& x2, double sigma) {
  if (x.vertex_count() != x2.vertex_count()) {
    throw IncompatibleGraphs("histogram kernel needs equal vertex counts");
  }
  const int n = x.vertex_count();
  long differing = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (x.has_edge(i, j) != x2.has_edge(i, j)) ++differing;
    }
  }
  return std::exp(-static_cast<double>(2 * differing) / (2.0 * sigma * sigma));
}

namespace {

Eigen::MatrixXd kronecker_adjacency(const Graph& x, const Graph& x2) {
  const int na = x.vertex_count();
  const int nb = x2.vertex_count();
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(na * nb, na * nb);
  for (int u = 0; u < na; ++u) {
    for (int v = 0; v < na; ++v) {
      if (u == v || !x.has_edge(std::min(u, v), std::max(u, v))) continue;
      for (int a = 0; a < nb; ++a) {
        for (int b = 0; b < nb; ++b) {
          if (a == b || !x2.has_edge(std::min(a, b), std::max(a, b))) continue;
          k(u * nb + a, v * nb + b) = 1.0;
        }
      }
    }
  }
  return k;
}

}  // namespace

double walk_count(const Graph& x, const Graph& x2, int steps) {
  if (steps < 0) throw InvalidArgument("negative walk length");
  const Eigen::MatrixXd k = kronecker_adjacency(x, x2);
  Eigen::VectorXd v = Eigen::VectorXd::Ones(k.rows());
  for (int t = 0; t < steps; ++t) v = k * v;
  return v.sum();
}

double grw_power_series(const Graph& x, const Graph& x2, double lambda, int terms) {
  const Eigen::MatrixXd k = kronecker_adjacency(x, x2);
  Eigen::VectorXd v = Eigen::VectorXd::Ones(k.rows());
  double total = v.sum();
  double scale = 1.0;
  for (int t = 1; t <= terms; ++t) {
    v = k * v;
    scale *= lambda;
    total += scale * v.sum();
  }
  return total;
}

namespace {

std::vector<int> bfs_distances(const Graph& x, int source) {
  std::vector<int> dist(static_cast<std::size_t>(x.vertex_count()), -1);
  std::queue<int> frontier;
  dist[static_cast<std::size_t>(source)] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    for (const int w : x.neighbours(v)) {
      if (dist[static_cast<std::size_t>(w)] >= 0) continue;
      dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
      frontier.push(w);
    }
  }
  return dist;
}

std::vector<int> all_pair_distances(const Graph& x) {
  std::vector<int> out;
  for (int s = 0; s < x.vertex_count(); ++s) {
    const std::vector<int> d = bfs_distances(x, s);
    for (int t = 0; t < x.vertex_count(); ++t) {
      if (t != s && d[static_cast<std::size_t>(t)] > 0) {
        out.push_back(d[static_cast<std::size_t>(t)]);
      }
    }
  }
  return out;
}

}  // namespace

double sp_kernel_bruteforce(const Graph& x, const Graph& x2) {
  const std::vector<int> da = all_pair_distances(x);
  const std::vector<int> db = all_pair_distances(x2);
  long matches = 0;
  for (const int a : da) {
    for (const int b : db) {
      if (a == b) ++matches;
    }
  }
  return static_cast<double>(matches);
}

double wl_kernel(const Graph& x, const Graph& x2, int rounds) {
  if (rounds < 0) throw InvalidArgument("negative round count");
  std::vector<std::string> la(static_cast<std::size_t>(x.vertex_count()), "0");
  std::vector<std::string> lb(static_cast<std::size_t>(x2.vertex_count()), "0");

  const auto round_dot = [](const std::vector<std::string>& a,
                            const std::vector<std::string>& b) {
    std::map<std::string, long> ca, cb;
    for (const std::string& l : a) ++ca[l];
    for (const std::string& l : b) ++cb[l];
    double dot = 0.0;
    for (const auto& [label, count] : ca) {
      const auto it = cb.find(label);
      if (it != cb.end()) dot += static_cast<double>(count) * static_cast<double>(it->second);
    }
    return dot;
  };

  const auto refine = [](const Graph& g, const std::vector<std::string>& labels) {
    std::vector<std::string> next(labels.size());
    for (int v = 0; v < g.vertex_count(); ++v) {
      std::vector<std::string> around;
      for (const int w : g.neighbours(v)) around.push_back(labels[static_cast<std::size_t>(w)]);
      std::sort(around.begin(), around.end());
      std::string sig = labels[static_cast<std::size_t>(v)] + "(";
      for (const std::string& l : around) sig += l + ",";
      sig += ")";
      next[static_cast<std::size_t>(v)] = sig;
    }
    return next;
  };

  // Compress each round's strings through one dictionary shared by both
  // graphs so label identity means signature identity, as in the library.
  double total = round_dot(la, lb);
  for (int r = 1; r <= rounds; ++r) {
    la = refine(x, la);
    lb = refine(x2, lb);
    std::map<std::string, std::string> dict;
    const auto compress = [&dict](std::vector<std::string>& labels) {
      for (std::string& l : labels) {
        auto [it, inserted] = dict.emplace(l, std::to_string(dict.size()));
        l = it->second;
      }
    };
    compress(la);
    compress(lb);
    total += round_dot(la, lb);
  }
  return total;
}

namespace {

struct SubsetKey {
  int edges = 0;
  std::vector<int> degrees;
  int triangles = 0;

  bool operator<(const SubsetKey& other) const {
    if (edges != other.edges) return edges < other.edges;
    if (degrees != other.degrees) return degrees < other.degrees;
    return triangles < other.triangles;
  }
};

SubsetKey subset_key(const std::vector<std::vector<bool>>& adj) {
  const int k = static_cast<int>(adj.size());
  SubsetKey key;
  key.degrees.assign(static_cast<std::size_t>(k), 0);
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      if (!adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) continue;
      ++key.edges;
      ++key.degrees[static_cast<std::size_t>(a)];
      ++key.degrees[static_cast<std::size_t>(b)];
      for (int c = b + 1; c < k; ++c) {
        if (adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] &&
            adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)]) {
          ++key.triangles;
        }
      }
    }
  }
  std::sort(key.degrees.begin(), key.degrees.end());
  return key;
}

bool subset_connected(const std::vector<std::vector<bool>>& adj) {
  const int k = static_cast<int>(adj.size());
  std::vector<bool> seen(static_cast<std::size_t>(k), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < k; ++w) {
      if (seen[static_cast<std::size_t>(w)] || !adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = true;
      ++reached;
      stack.push_back(w);
    }
  }
  return reached == k;
}

// All isomorphism keys on `size` vertices in sorted order, via exhaustive
// enumeration of edge subsets.
std::vector<SubsetKey> all_keys(int size, bool connected_only) {
  const int slots = size * (size - 1) / 2;
  std::map<SubsetKey, bool> keys;  // key -> connected
  for (int mask = 0; mask < (1 << slots); ++mask) {
    std::vector<std::vector<bool>> adj(
        static_cast<std::size_t>(size),
        std::vector<bool>(static_cast<std::size_t>(size), false));
    int bit = 0;
    for (int a = 0; a < size; ++a) {
      for (int b = a + 1; b < size; ++b, ++bit) {
        if (mask & (1 << bit)) {
          adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
          adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = true;
        }
      }
    }
    keys.emplace(subset_key(adj), subset_connected(adj));
  }
  std::vector<SubsetKey> out;
  for (const auto& [key, connected] : keys) {
    if (!connected_only || connected) out.push_back(key);
  }
  return out;
}

}  // namespace

std::vector<long> graphlet_features_bruteforce(const Graph& x, int size,
                                               bool connected_only) {
  if (size != 3 && size != 4) throw InvalidArgument("graphlet size must be 3 or 4");
  if (x.vertex_count() < size) {
    throw GraphTooSmall("graph smaller than the graphlet size");
  }
  const std::vector<SubsetKey> keys = all_keys(size, connected_only);
  std::vector<long> features(keys.size(), 0);

  const int n = x.vertex_count();
  std::vector<int> subset(static_cast<std::size_t>(size));
  const auto record = [&]() {
    std::vector<std::vector<bool>> adj(
        static_cast<std::size_t>(size),
        std::vector<bool>(static_cast<std::size_t>(size), false));
    for (int a = 0; a < size; ++a) {
      for (int b = a + 1; b < size; ++b) {
        const int u = std::min(subset[static_cast<std::size_t>(a)], subset[static_cast<std::size_t>(b)]);
        const int v = std::max(subset[static_cast<std::size_t>(a)], subset[static_cast<std::size_t>(b)]);
        if (x.has_edge(u, v)) {
          adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
          adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = true;
        }
      }
    }
    if (connected_only && !subset_connected(adj)) return;
    const SubsetKey key = subset_key(adj);
    const auto it = std::lower_bound(keys.begin(), keys.end(), key);
    features[static_cast<std::size_t>(it - keys.begin())] += 1;
  };

  if (size == 3) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
          subset = {i, j, k};
          record();
        }
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
          for (int l = k + 1; l < n; ++l) {
            subset = {i, j, k, l};
            record();
          }
  }
  return features;
}

Eigen::MatrixXd gram_matrix(const KernelSpec& spec, const std::vector<Graph>& graphs) {
  const int count = static_cast<int>(graphs.size());
  Eigen::MatrixXd g(count, count);
  for (int a = 0; a < count; ++a) {
    for (int b = 0; b < count; ++b) {
      g(a, b) = kernel_eval(spec, graphs[static_cast<std::size_t>(a)],
                            graphs[static_cast<std::size_t>(b)]);
    }
  }
  return g;
}

double kss_squared_independent(const ScoreSource& score, const Graph& x,
                               const KernelSpec& spec, Convention convention,
                               const std::vector<PairIndex>& pairs) {
  const int count = static_cast<int>(pairs.size());
  double total = 0.0;
  for (int b = 0; b < count; ++b) {
    for (int b2 = 0; b2 < count; ++b2) {
      const PairIndex s = pairs[static_cast<std::size_t>(b)];
      const PairIndex s2 = pairs[static_cast<std::size_t>(b2)];
      const double c = stein_coefficient(score, x, s);
      const double c2 = stein_coefficient(score, x, s2);
      if (convention == Convention::FlipFeature) {
        total += c * c2 * kernel_eval(spec, x.flipped(s), x.flipped(s2));
      } else {
        Graph x1 = x, x0 = x;
        Graph y1 = x, y0 = x;
        const VertexPair p = pair_unindex(s, x.vertex_count());
        const VertexPair p2 = pair_unindex(s2, x.vertex_count());
        x1.set_edge(p.i, p.j, true);
        x0.set_edge(p.i, p.j, false);
        y1.set_edge(p2.i, p2.j, true);
        y0.set_edge(p2.i, p2.j, false);
        total += c * c2 *
                 (kernel_eval(spec, x1, y1) - kernel_eval(spec, x1, y0) -
                  kernel_eval(spec, x0, y1) + kernel_eval(spec, x0, y0));
      }
    }
  }
  return total / (static_cast<double>(count) * static_cast<double>(count));
}

}  // namespace gkss::ref
