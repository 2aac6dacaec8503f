// Exponential random graph models with edge and two-star terms: density,
// conditionals, exact enumeration at tiny sizes, and a Glauber-dynamics
// Gibbs sampler.
#ifndef GKSS_ERGM_HPP
#define GKSS_ERGM_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "gkss/graph.hpp"

namespace gkss {

enum class TermKind { Edge, TwoStar };

// Raw uses plain subgraph counts E(x) and S2(x); Scaled uses the
// injection-count normalisation (2E and 2*S2/n).
enum class CountsMode { Raw, Scaled };

struct ErgmModel {
  std::vector<TermKind> terms;
  std::vector<double> beta;
  CountsMode mode = CountsMode::Raw;

  static ErgmModel edge_only(double beta_edge, CountsMode mode = CountsMode::Raw);
  static ErgmModel e2s(double beta_edge, double beta_two_star,
                       CountsMode mode = CountsMode::Raw);

  void validate() const;
  // Coefficient of the edge term, or 0 when absent.
  double edge_coefficient() const;
};

double term_value(TermKind term, const Graph& x, CountsMode mode);

// log of the unnormalised density beta . t(x).
double log_unnormalised_density(const ErgmModel& m, const Graph& x);

// t(x with edge s present) - t(x with edge s absent); independent of the
// current state of edge s.
double term_change(TermKind term, const Graph& x, PairIndex s, CountsMode mode);

// q(x_s = 1 | rest) = sigmoid(beta . dt(x, s)).
double conditional_edge_prob(const ErgmModel& m, const Graph& x, PairIndex s);

// Exact model distribution over all graphs on n vertices; n above 5 is
// refused (the state space doubles per vertex pair).
std::vector<std::pair<Graph, double>> enumerate_distribution(const ErgmModel& m, int n);

long default_gibbs_steps(int n);  // 10 * pair_count(n)

// Runs `steps` Glauber updates (steps >= 1) from an independent
// Bernoulli(sigmoid(beta_edge)) start and returns the final state.
Graph gibbs_sample(const ErgmModel& m, int n, long steps, std::uint64_t seed);

// One chain: 10 N burn-in, then a sample every N steps.
std::vector<Graph> gibbs_chain(const ErgmModel& m, int n, int count, std::uint64_t seed);

}  // namespace gkss

#endif
