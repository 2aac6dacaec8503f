#include "gkss/ergm.hpp"

#include <cmath>

#include "gkss/rng.hpp"

namespace gkss {

namespace {

double sigmoid(double t) { return 1.0 / (1.0 + std::exp(-t)); }

}  // namespace

ErgmModel ErgmModel::edge_only(double beta_edge, CountsMode mode) {
  ErgmModel m;
  m.terms = {TermKind::Edge};
  m.beta = {beta_edge};
  m.mode = mode;
  return m;
}

ErgmModel ErgmModel::e2s(double beta_edge, double beta_two_star, CountsMode mode) {
  ErgmModel m;
  m.terms = {TermKind::Edge, TermKind::TwoStar};
  m.beta = {beta_edge, beta_two_star};
  m.mode = mode;
  return m;
}

void ErgmModel::validate() const {
  if (terms.empty()) throw InvalidArgument("ErgmModel: no terms");
  if (terms.size() != beta.size())
    throw InvalidArgument("ErgmModel: term/coefficient count mismatch");
  for (std::size_t i = 0; i < terms.size(); ++i)
    for (std::size_t j = i + 1; j < terms.size(); ++j)
      if (terms[i] == terms[j]) throw InvalidArgument("ErgmModel: duplicate term");
}

double ErgmModel::edge_coefficient() const {
  for (std::size_t i = 0; i < terms.size(); ++i)
    if (terms[i] == TermKind::Edge) return beta[i];
  return 0.0;
}

double term_value(TermKind term, const Graph& x, CountsMode mode) {
  switch (term) {
    case TermKind::Edge: {
      const double e = static_cast<double>(x.edge_count());
      return mode == CountsMode::Raw ? e : 2.0 * e;
    }
    case TermKind::TwoStar: {
      const double s2 = static_cast<double>(x.two_star_count());
      return mode == CountsMode::Raw ? s2 : 2.0 * s2 / x.vertex_count();
    }
  }
  throw InvalidArgument("term_value: unknown term");
}

double log_unnormalised_density(const ErgmModel& m, const Graph& x) {
  m.validate();
  double total = 0.0;
  for (std::size_t i = 0; i < m.terms.size(); ++i)
    total += m.beta[i] * term_value(m.terms[i], x, m.mode);
  return total;
}

double term_change(TermKind term, const Graph& x, PairIndex s, CountsMode mode) {
  const VertexPair p = pair_unindex(s, x.vertex_count());
  switch (term) {
    case TermKind::Edge:
      return mode == CountsMode::Raw ? 1.0 : 2.0;
    case TermKind::TwoStar: {
      // Adding edge (i, j) creates one new two-star per existing neighbour of
      // either endpoint; edge s itself never counts.
      const int e = x.has_edge(p.i, p.j) ? 1 : 0;
      const double d = (x.degree(p.i) - e) + (x.degree(p.j) - e);
      return mode == CountsMode::Raw ? d : 2.0 * d / x.vertex_count();
    }
  }
  throw InvalidArgument("term_change: unknown term");
}

double conditional_edge_prob(const ErgmModel& m, const Graph& x, PairIndex s) {
  m.validate();
  double t = 0.0;
  for (std::size_t i = 0; i < m.terms.size(); ++i)
    t += m.beta[i] * term_change(m.terms[i], x, s, m.mode);
  return sigmoid(t);
}

std::vector<std::pair<Graph, double>> enumerate_distribution(const ErgmModel& m, int n) {
  m.validate();
  if (n < 1) throw InvalidArgument("enumerate_distribution: need at least one vertex");
  if (n > 5)
    throw TooLarge("enumerate_distribution: n=" + std::to_string(n) +
                   " exceeds the enumeration limit of 5");
  const int pairs = static_cast<int>(pair_count(n));
  const std::uint64_t count = std::uint64_t{1} << pairs;
  std::vector<std::pair<Graph, double>> out;
  out.reserve(count);
  double total = 0.0;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    Graph g(n);
    for (int s = 0; s < pairs; ++s)
      if ((mask >> s) & 1) g.toggle_edge(s);
    const double w = std::exp(log_unnormalised_density(m, g));
    total += w;
    out.emplace_back(std::move(g), w);
  }
  for (auto& [g, w] : out) w /= total;
  return out;
}

long default_gibbs_steps(int n) { return 10 * pair_count(n); }

namespace {

// Glauber dynamics with incrementally maintained degrees.
struct GlauberChain {
  GlauberChain(const ErgmModel& model, int n, std::uint64_t seed)
      : m(model), graph(n), degrees(n, 0), rng(seed), pairs(pair_count(n)) {
    m.validate();
    if (n < 2) throw InvalidArgument("gibbs sampler: need at least two vertices");
    lookup.reserve(pairs);
    for (long s = 0; s < pairs; ++s) lookup.push_back(pair_unindex(static_cast<PairIndex>(s), n));
    const double p0 = sigmoid(m.edge_coefficient() *
                              (m.mode == CountsMode::Raw ? 1.0 : 2.0));
    for (long s = 0; s < pairs; ++s)
      if (rng.bernoulli(p0)) set(static_cast<PairIndex>(s), true);
  }

  void set(PairIndex s, bool present) {
    const VertexPair p = lookup[s];
    if (graph.has_edge(p.i, p.j) == present) return;
    graph.set_edge(p.i, p.j, present);
    const int delta = present ? 1 : -1;
    degrees[p.i] += delta;
    degrees[p.j] += delta;
  }

  void step() {
    const PairIndex s = static_cast<PairIndex>(rng.below(static_cast<std::uint64_t>(pairs)));
    const VertexPair p = lookup[s];
    const int e = graph.has_edge(p.i, p.j) ? 1 : 0;
    double t = 0.0;
    for (std::size_t i = 0; i < m.terms.size(); ++i) {
      switch (m.terms[i]) {
        case TermKind::Edge:
          t += m.beta[i] * (m.mode == CountsMode::Raw ? 1.0 : 2.0);
          break;
        case TermKind::TwoStar: {
          const double d = (degrees[p.i] - e) + (degrees[p.j] - e);
          t += m.beta[i] * (m.mode == CountsMode::Raw ? d : 2.0 * d / graph.vertex_count());
          break;
        }
      }
    }
    set(s, rng.bernoulli(sigmoid(t)));
  }

  const ErgmModel& m;
  Graph graph;
  std::vector<int> degrees;
  Rng rng;
  long pairs;
  std::vector<VertexPair> lookup;
};

}  // namespace

Graph gibbs_sample(const ErgmModel& m, int n, long steps, std::uint64_t seed) {
  if (steps < 1) throw InvalidArgument("gibbs_sample: step count must be positive");
  GlauberChain chain(m, n, seed);
  for (long s = 0; s < steps; ++s) chain.step();
  return chain.graph;
}

std::vector<Graph> gibbs_chain(const ErgmModel& m, int n, int count, std::uint64_t seed) {
  if (count < 1) throw InvalidArgument("gibbs_chain: sample count must be positive");
  GlauberChain chain(m, n, seed);
  const long pairs = pair_count(n);
  for (long s = 0; s < 10 * pairs; ++s) chain.step();
  std::vector<Graph> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    for (long s = 0; s < pairs; ++s) chain.step();
    out.push_back(chain.graph);
  }
  return out;
}

}  // namespace gkss
