#include "gkss/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace gkss {

PairIndex pair_index(int i, int j, int n) {
  if (n < 2) throw InvalidPair("pair_index: need at least two vertices, n=" + std::to_string(n));
  if (i < 0 || j < 0 || i >= n || j >= n)
    throw InvalidPair("pair_index: vertex out of range for n=" + std::to_string(n));
  if (i >= j) throw InvalidPair("pair_index: require i < j");
  const long s = static_cast<long>(i) * n - static_cast<long>(i) * (i + 1) / 2 + (j - i - 1);
  return static_cast<PairIndex>(s);
}

VertexPair pair_unindex(PairIndex s, int n) {
  const long total = pair_count(n);
  if (s < 0 || s >= total)
    throw InvalidPair("pair_unindex: index " + std::to_string(s) + " outside [0, " +
                      std::to_string(total) + ")");
  // Closed-form row guess, then correct for rounding.
  double nd = static_cast<double>(n);
  int i = static_cast<int>(std::floor(nd - 0.5 - std::sqrt((nd - 0.5) * (nd - 0.5) - 2.0 * s)));
  if (i < 0) i = 0;
  auto row_start = [n](int r) {
    return static_cast<long>(r) * n - static_cast<long>(r) * (r + 1) / 2;
  };
  while (i > 0 && row_start(i) > s) --i;
  while (i + 1 < n - 1 && row_start(i + 1) <= s) ++i;
  const int j = static_cast<int>(s - row_start(i)) + i + 1;
  return {i, j};
}

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 1) throw InvalidArgument("Graph: vertex count must be positive");
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw InvalidArgument("Graph: vertex out of range");
}

bool Graph::has_edge(int i, int j) const {
  check_vertex(i);
  check_vertex(j);
  if (i == j) return false;
  return (row(i)[j >> 6] >> (j & 63)) & 1u;
}

bool Graph::has_edge(PairIndex s) const {
  const VertexPair p = pair_unindex(s, n_);
  return has_edge(p.i, p.j);
}

void Graph::set_edge(int i, int j, bool present) {
  check_vertex(i);
  check_vertex(j);
  if (i == j) throw InvalidPair("Graph: no self loops");
  const std::uint64_t mi = std::uint64_t{1} << (j & 63);
  const std::uint64_t mj = std::uint64_t{1} << (i & 63);
  std::uint64_t* ri = bits_.data() + static_cast<std::size_t>(i) * words_;
  std::uint64_t* rj = bits_.data() + static_cast<std::size_t>(j) * words_;
  if (present) {
    ri[j >> 6] |= mi;
    rj[i >> 6] |= mj;
  } else {
    ri[j >> 6] &= ~mi;
    rj[i >> 6] &= ~mj;
  }
}

void Graph::toggle_edge(PairIndex s) {
  const VertexPair p = pair_unindex(s, n_);
  set_edge(p.i, p.j, !has_edge(p.i, p.j));
}

Graph Graph::flipped(PairIndex s) const {
  Graph out = *this;
  out.toggle_edge(s);
  return out;
}

int Graph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  const std::uint64_t* r = row(v);
  for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
  return d;
}

int Graph::max_degree() const {
  int m = 0;
  for (int v = 0; v < n_; ++v) m = std::max(m, degree(v));
  return m;
}

long Graph::edge_count() const {
  long twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

long Graph::two_star_count() const {
  long total = 0;
  for (int v = 0; v < n_; ++v) {
    const long d = degree(v);
    total += d * (d - 1) / 2;
  }
  return total;
}

long Graph::triangle_count() const {
  // Each triangle is seen once from each of its three edges.
  long total = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (has_edge(i, j)) total += common_neighbours(i, j);
  return total / 3;
}

int Graph::common_neighbours(int i, int j) const {
  check_vertex(i);
  check_vertex(j);
  int c = 0;
  const std::uint64_t* ri = row(i);
  const std::uint64_t* rj = row(j);
  for (int w = 0; w < words_; ++w) c += std::popcount(ri[w] & rj[w]);
  return c;
}

std::vector<int> Graph::neighbours(int v) const {
  check_vertex(v);
  std::vector<int> out;
  const std::uint64_t* r = row(v);
  for (int w = 0; w < words_; ++w) {
    std::uint64_t bits = r[w];
    while (bits) {
      const int b = std::countr_zero(bits);
      out.push_back(w * 64 + b);
      bits &= bits - 1;
    }
  }
  return out;
}

bool Graph::lex_less(const Graph& other) const {
  if (n_ != other.n_) return n_ < other.n_;
  return bits_ < other.bits_;
}

std::uint64_t summary_statistic(const Graph& x, PairIndex s, StatisticKind kind) {
  const VertexPair p = pair_unindex(s, x.vertex_count());
  switch (kind) {
    case StatisticKind::Density:
      return 0;
    case StatisticKind::Bidegree: {
      const int e = x.has_edge(p.i, p.j) ? 1 : 0;
      int a = x.degree(p.i) - e;
      int b = x.degree(p.j) - e;
      if (a > b) std::swap(a, b);
      return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
    }
    case StatisticKind::CommonNeighbours:
      return static_cast<std::uint64_t>(x.common_neighbours(p.i, p.j));
  }
  throw InvalidArgument("summary_statistic: unknown kind");
}

std::string statistic_value_to_string(StatisticKind kind, std::uint64_t value) {
  if (kind == StatisticKind::Bidegree) {
    const std::uint64_t a = value >> 32;
    const std::uint64_t b = value & 0xffffffffULL;
    return std::to_string(a) + "-" + std::to_string(b);
  }
  return std::to_string(value);
}

std::uint64_t statistic_value_from_string(StatisticKind kind, const std::string& text) {
  try {
    if (kind == StatisticKind::Bidegree) {
      const auto dash = text.find('-');
      if (dash == std::string::npos) throw InvalidArgument("missing '-'");
      const std::uint64_t a = std::stoull(text.substr(0, dash));
      const std::uint64_t b = std::stoull(text.substr(dash + 1));
      return (a << 32) | b;
    }
    return std::stoull(text);
  } catch (const std::exception&) {
    throw InvalidArgument("bad statistic value '" + text + "'");
  }
}

std::string statistic_kind_name(StatisticKind kind) {
  switch (kind) {
    case StatisticKind::Density: return "density";
    case StatisticKind::Bidegree: return "bidegree";
    case StatisticKind::CommonNeighbours: return "common-neighbours";
  }
  return "?";
}

StatisticKind statistic_kind_from_name(const std::string& name) {
  if (name == "density") return StatisticKind::Density;
  if (name == "bidegree") return StatisticKind::Bidegree;
  if (name == "common-neighbours") return StatisticKind::CommonNeighbours;
  throw InvalidArgument("unknown statistic kind '" + name + "'");
}

namespace {

std::string strip(const std::string& line) {
  std::string s = line;
  const auto hash = s.find('#');
  if (hash != std::string::npos) s.erase(hash);
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string s = strip(line);
    if (s.empty()) continue;
    if (s.rfind("n=", 0) != 0) throw ParseError("expected 'n=<count>' header", line_no);
    try {
      std::size_t used = 0;
      n = std::stoi(s.substr(2), &used);
      if (used != s.size() - 2) throw std::invalid_argument("trailing junk");
    } catch (const std::exception&) {
      throw ParseError("bad vertex count '" + s + "'", line_no);
    }
    break;
  }
  if (n < 0) throw ParseError("missing 'n=<count>' header", line_no == 0 ? 1 : line_no);
  if (n < 1) throw ParseError("vertex count must be positive", line_no);

  Graph g(n);
  std::set<std::pair<int, int>> seen;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string s = strip(line);
    if (s.empty()) continue;
    std::istringstream es(s);
    int i = 0, j = 0;
    char extra = 0;
    if (!(es >> i >> j) || (es >> extra))
      throw ParseError("expected 'i j' edge line, got '" + s + "'", line_no);
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw ParseError("vertex out of range in edge '" + s + "'", line_no);
    if (i >= j) throw ParseError("edge endpoints must satisfy i < j", line_no);
    if (!seen.insert({i, j}).second) throw ParseError("duplicate edge '" + s + "'", line_no);
    g.set_edge(i, j, true);
  }
  return g;
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  return read_graph(in);
}

void write_graph(const Graph& x, std::ostream& out) {
  out << "n=" << x.vertex_count() << "\n";
  const int n = x.vertex_count();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (x.has_edge(i, j)) out << i << " " << j << "\n";
}

void write_graph_file(const Graph& x, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  write_graph(x, out);
}

}  // namespace gkss
