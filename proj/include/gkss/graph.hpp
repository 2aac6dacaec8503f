// Simple undirected graphs on [0, n) with bitset adjacency rows, plus the
// lexicographic vertex-pair index used to address single edge positions.
#ifndef GKSS_GRAPH_HPP
#define GKSS_GRAPH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gkss/errors.hpp"

namespace gkss {

// Lexicographic index of the unordered pair (i, j), i < j, within a graph on
// n vertices: (0,1) -> 0, (0,2) -> 1, ..., (n-2,n-1) -> n(n-1)/2 - 1.
using PairIndex = int;

struct VertexPair {
  int i;
  int j;
};

inline long pair_count(int n) { return static_cast<long>(n) * (n - 1) / 2; }

PairIndex pair_index(int i, int j, int n);
VertexPair pair_unindex(PairIndex s, int n);

class Graph {
 public:
  explicit Graph(int n);

  int vertex_count() const { return n_; }
  long pair_count() const { return gkss::pair_count(n_); }

  bool has_edge(int i, int j) const;
  bool has_edge(PairIndex s) const;
  void set_edge(int i, int j, bool present);
  void toggle_edge(PairIndex s);

  // Value-semantic single-edge flip.
  Graph flipped(PairIndex s) const;

  int degree(int v) const;
  int max_degree() const;
  long edge_count() const;
  // Number of paths on three vertices (two-stars), sum_v C(deg v, 2).
  long two_star_count() const;
  long triangle_count() const;
  int common_neighbours(int i, int j) const;
  std::vector<int> neighbours(int v) const;

  const std::uint64_t* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }
  int words_per_row() const { return words_; }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
  }
  bool operator!=(const Graph& other) const { return !(*this == other); }

  // Total order (vertex count, then adjacency words); used to canonicalise
  // argument order where a kernel's float result depends on it.
  bool lex_less(const Graph& other) const;

 private:
  void check_vertex(int v) const;

  int n_;
  int words_;
  std::vector<std::uint64_t> bits_;
};

enum class StatisticKind { Density, Bidegree, CommonNeighbours };

// Encoded value of the conditioning statistic t(x, s). Density maps every
// input to one bin; Bidegree encodes the unordered pair of endpoint degrees
// with edge s ignored; CommonNeighbours is the shared-neighbour count.
std::uint64_t summary_statistic(const Graph& x, PairIndex s, StatisticKind kind);

std::string statistic_value_to_string(StatisticKind kind, std::uint64_t value);
std::uint64_t statistic_value_from_string(StatisticKind kind, const std::string& text);

std::string statistic_kind_name(StatisticKind kind);
StatisticKind statistic_kind_from_name(const std::string& name);

// Text format: first line "n=<count>", then one edge "i j" per line with
// 0-based endpoints and i < j. '#' starts a comment, blank lines are ignored.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(const Graph& x, std::ostream& out);
void write_graph_file(const Graph& x, const std::string& path);

}  // namespace gkss

#endif
