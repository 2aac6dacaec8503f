// Shared helpers for the test binaries.
#ifndef GKSS_TESTS_SUPPORT_HPP
#define GKSS_TESTS_SUPPORT_HPP

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <queue>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gkss/graph.hpp"
#include "gkss/rng.hpp"

namespace test_support {

inline gkss::Graph random_graph(int n, double p, std::uint64_t seed) {
  gkss::Rng rng(seed);
  gkss::Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.bernoulli(p)) g.set_edge(i, j, true);
    }
  }
  return g;
}

inline gkss::Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  gkss::Graph g(n);
  for (const auto& [i, j] : edges) g.set_edge(i, j, true);
  return g;
}

inline gkss::Graph complete_graph(int n) {
  gkss::Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.set_edge(i, j, true);
  return g;
}

inline gkss::Graph path_graph(int n) {
  gkss::Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.set_edge(i, i + 1, true);
  return g;
}

inline gkss::Graph cycle_graph(int n) {
  gkss::Graph g = path_graph(n);
  if (n >= 3) g.set_edge(0, n - 1, true);
  return g;
}

inline gkss::Graph star_graph(int n) {
  gkss::Graph g(n);
  for (int leaf = 1; leaf < n; ++leaf) g.set_edge(0, leaf, true);
  return g;
}

inline bool connected(const gkss::Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return true;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = true;
  int reached = 1;
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    for (const int w : g.neighbours(v)) {
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = true;
      ++reached;
      frontier.push(w);
    }
  }
  return reached == n;
}

// Unique scratch directory, removed on destruction.
struct TempDir {
  std::filesystem::path path;

  TempDir() {
    static int counter = 0;
    path = std::filesystem::temp_directory_path() /
           ("gkss_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string str() const { return path.string(); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace test_support

#endif
