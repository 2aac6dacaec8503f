#include "gkss/stein.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "gkss/errors.hpp"
#include "gkss/linalg.hpp"
#include "gkss/rng.hpp"

namespace gkss {

namespace {

void check_same_n(const std::vector<Graph>& samples) {
  for (const Graph& g : samples) {
    if (g.vertex_count() != samples.front().vertex_count()) {
      throw IncompatibleGraphs("fitting samples mix vertex counts " +
                               std::to_string(samples.front().vertex_count()) + " and " +
                               std::to_string(g.vertex_count()));
    }
  }
}

}  // namespace

ConditionalEstimator ConditionalEstimator::fit(StatisticKind kind,
                                               const std::vector<Graph>& samples) {
  if (samples.empty()) throw InvalidArgument("no fitting samples");
  check_same_n(samples);
  const int n = samples.front().vertex_count();
  if (n < 2) throw GraphTooSmall("cannot fit on graphs without vertex pairs");

  ConditionalEstimator est;
  est.kind_ = kind;
  est.n_ = n;
  std::map<std::uint64_t, BinCounts> counts;
  const long pairs = pair_count(n);
  for (const Graph& g : samples) {
    for (PairIndex s = 0; s < pairs; ++s) {
      BinCounts& bin = counts[summary_statistic(g, s, kind)];
      bin.total += 1;
      if (g.has_edge(s)) bin.present += 1;
    }
  }
  est.bins_.assign(counts.begin(), counts.end());
  est.finish();
  return est;
}

void ConditionalEstimator::finish() {
  long present = 0;
  long total = 0;
  for (const auto& [value, bin] : bins_) {
    present += bin.present;
    total += bin.total;
  }
  fallback_ = total > 0 ? static_cast<double>(present) / static_cast<double>(total) : 0.5;
}

double ConditionalEstimator::probability_for_value(std::uint64_t value) const {
  const auto it = std::lower_bound(
      bins_.begin(), bins_.end(), value,
      [](const auto& bin, std::uint64_t v) { return bin.first < v; });
  if (it == bins_.end() || it->first != value) return fallback_;
  return static_cast<double>(it->second.present) / static_cast<double>(it->second.total);
}

double ConditionalEstimator::edge_probability(const Graph& x, PairIndex s) const {
  if (x.vertex_count() != n_) {
    throw IncompatibleGraphs("estimator fitted on " + std::to_string(n_) +
                             " vertices, queried with " + std::to_string(x.vertex_count()));
  }
  return probability_for_value(summary_statistic(x, s, kind_));
}

void ConditionalEstimator::write_csv(std::ostream& out) const {
  out << "stat_value,present,total\n";
  for (const auto& [value, bin] : bins_) {
    out << statistic_value_to_string(kind_, value) << ',' << bin.present << ','
        << bin.total << '\n';
  }
}

ConditionalEstimator ConditionalEstimator::from_csv(StatisticKind kind, int vertex_count,
                                                    std::istream& in) {
  if (vertex_count < 2) throw GraphTooSmall("estimator needs at least two vertices");
  ConditionalEstimator est;
  est.kind_ = kind;
  est.n_ = vertex_count;

  std::string line;
  int line_no = 0;
  bool saw_header = false;
  std::map<std::uint64_t, BinCounts> counts;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!saw_header) {
      if (line != "stat_value,present,total") {
        throw ParseError("expected header stat_value,present,total", line_no);
      }
      saw_header = true;
      continue;
    }
    const auto c1 = line.find(',');
    const auto c2 = c1 == std::string::npos ? std::string::npos : line.find(',', c1 + 1);
    if (c2 == std::string::npos || line.find(',', c2 + 1) != std::string::npos) {
      throw ParseError("expected three comma-separated fields", line_no);
    }
    std::uint64_t value = 0;
    long present = 0;
    long total = 0;
    try {
      value = statistic_value_from_string(kind, line.substr(0, c1));
      present = std::stol(line.substr(c1 + 1, c2 - c1 - 1));
      total = std::stol(line.substr(c2 + 1));
    } catch (const std::exception&) {
      throw ParseError("unparseable row '" + line + "'", line_no);
    }
    if (total < 1 || present < 0 || present > total) {
      throw ParseError("counts out of range in '" + line + "'", line_no);
    }
    if (!counts.emplace(value, BinCounts{present, total}).second) {
      throw ParseError("duplicate statistic value '" + line.substr(0, c1) + "'", line_no);
    }
  }
  if (!saw_header) throw ParseError("empty estimator file", line_no == 0 ? 1 : line_no);
  if (counts.empty()) throw ParseError("estimator file has no bins", line_no);
  est.bins_.assign(counts.begin(), counts.end());
  est.finish();
  return est;
}

ScoreSource ScoreSource::exact(ErgmModel model) {
  model.validate();
  ScoreSource s;
  s.impl_ = std::move(model);
  return s;
}

ScoreSource ScoreSource::estimated(ConditionalEstimator estimator) {
  ScoreSource s;
  s.impl_ = std::move(estimator);
  return s;
}

double ScoreSource::edge_probability(const Graph& x, PairIndex s) const {
  if (const ErgmModel* m = std::get_if<ErgmModel>(&impl_)) {
    return conditional_edge_prob(*m, x, s);
  }
  return std::get<ConditionalEstimator>(impl_).edge_probability(x, s);
}

const ErgmModel* ScoreSource::model() const { return std::get_if<ErgmModel>(&impl_); }

const ConditionalEstimator* ScoreSource::estimator() const {
  return std::get_if<ConditionalEstimator>(&impl_);
}

double stein_coefficient(const ScoreSource& score, const Graph& x, PairIndex s) {
  const double q1 = score.edge_probability(x, s);
  return q1 - (x.has_edge(s) ? 1.0 : 0.0);
}

PairSelection PairSelection::all() { return PairSelection{Mode::All, 0, 0}; }

PairSelection PairSelection::resample(int count, std::uint64_t seed) {
  if (count < 1) throw InvalidArgument("resample count must be positive");
  return PairSelection{Mode::Resample, count, seed};
}

std::vector<PairIndex> select_pairs(const Graph& x, const PairSelection& selection) {
  const long pairs = x.pair_count();
  if (pairs < 1) throw GraphTooSmall("graph has no vertex pairs");
  std::vector<PairIndex> out;
  if (selection.mode == PairSelection::Mode::All) {
    out.resize(static_cast<std::size_t>(pairs));
    for (long s = 0; s < pairs; ++s) out[static_cast<std::size_t>(s)] = static_cast<PairIndex>(s);
    return out;
  }
  if (selection.count < 1) throw InvalidArgument("resample count must be positive");
  Rng rng(selection.seed);
  out.reserve(static_cast<std::size_t>(selection.count));
  for (int b = 0; b < selection.count; ++b) {
    out.push_back(static_cast<PairIndex>(rng.below(static_cast<std::uint64_t>(pairs))));
  }
  return out;
}

namespace {

// Shared Gram bookkeeping: index 0 is x itself, every distinct flipped pair
// gets one slot, and each resampled position b maps to its slot.
struct FlipIndex {
  std::vector<Graph> graphs;
  std::vector<int> slot_of;  // per position in `pairs`
  std::vector<PairIndex> distinct;
};

FlipIndex build_flip_index(const Graph& x, const std::vector<PairIndex>& pairs) {
  FlipIndex fi;
  fi.graphs.push_back(x);
  fi.slot_of.reserve(pairs.size());
  std::map<PairIndex, int> seen;
  for (const PairIndex s : pairs) {
    auto [it, inserted] = seen.emplace(s, static_cast<int>(fi.graphs.size()));
    if (inserted) {
      fi.graphs.push_back(x.flipped(s));
      fi.distinct.push_back(s);
    }
    fi.slot_of.push_back(it->second);
  }
  return fi;
}

// H[b,b'] from the Gram matrix over {x} union flips. FlipFeature pairs the
// flipped graphs directly; Literal expands the operator's difference form
// c_b c_b' (k(x1,x1') - k(x1,x0') - k(x0,x1') + k(x0,x0')) with x1/x0 the
// edge-present/edge-absent versions at each position.
Eigen::MatrixXd assemble_h(const ScoreSource& score, const Graph& x,
                           const std::vector<PairIndex>& pairs, const FlipIndex& fi,
                           const Eigen::MatrixXd& gram, Convention convention) {
  const int count = static_cast<int>(pairs.size());
  Eigen::VectorXd coef(count);
  for (int b = 0; b < count; ++b) coef[b] = stein_coefficient(score, x, pairs[b]);

  Eigen::MatrixXd h(count, count);
  if (convention == Convention::FlipFeature) {
    for (int b = 0; b < count; ++b) {
      for (int b2 = 0; b2 <= b; ++b2) {
        const double v = coef[b] * coef[b2] * gram(fi.slot_of[b], fi.slot_of[b2]);
        h(b, b2) = v;
        h(b2, b) = v;
      }
    }
    return h;
  }

  std::vector<int> present(count), absent(count);
  for (int b = 0; b < count; ++b) {
    const bool has = x.has_edge(pairs[b]);
    present[b] = has ? 0 : fi.slot_of[b];
    absent[b] = has ? fi.slot_of[b] : 0;
  }
  for (int b = 0; b < count; ++b) {
    for (int b2 = 0; b2 <= b; ++b2) {
      const double bracket = gram(present[b], present[b2]) - gram(present[b], absent[b2]) -
                             gram(absent[b], present[b2]) + gram(absent[b], absent[b2]);
      const double v = coef[b] * coef[b2] * bracket;
      h(b, b2) = v;
      h(b2, b) = v;
    }
  }
  return h;
}

}  // namespace

SteinKernelMatrix stein_kernel_matrix(const ScoreSource& score, const Graph& x,
                                      const std::vector<PairIndex>& pairs,
                                      const KernelSpec& spec, Convention convention) {
  if (pairs.empty()) throw InvalidArgument("no pairs selected");
  const FlipIndex fi = build_flip_index(x, pairs);
  const Eigen::MatrixXd gram = gram_matrix(spec, fi.graphs);
  return SteinKernelMatrix{pairs, assemble_h(score, x, pairs, fi, gram, convention)};
}

namespace {

struct FlipToggle {
  int i = 0;
  int j = 0;
  double delta = 0.0;  // +1 adds the edge, -1 removes it, 0 for x itself
};

// Gram matrix of the geometric random walk kernel over {x} union flips.
// Diagonalising the second factor turns each entry into a weighted sum of
// n scalar resolvent sums 1^T (I - mu A_p)^{-1} 1, and every A_p differs
// from A_x by one symmetric pair, so each sum is an O(1) toggle query
// against a base inverse of (I - mu A_x). Entries whose rank-2 denominators
// vanish are redone with the plain dense Kronecker solve.
Eigen::MatrixXd grw_flip_gram(const Graph& x, double lambda,
                              const std::vector<Graph>& graphs,
                              const std::vector<FlipToggle>& toggles) {
  const int n = x.vertex_count();
  const int count = static_cast<int>(graphs.size());

  for (const Graph& g : graphs) {
    if (lambda * g.max_degree() >= 1.0) {
      throw DivergentKernel("geometric walk weight " + std::to_string(lambda) +
                            " is not below 1/" + std::to_string(g.max_degree()) +
                            " for some flipped graph");
    }
  }

  const Eigen::MatrixXd base = adjacency_matrix(x);
  Eigen::MatrixXd gram(count, count);

#pragma omp parallel for schedule(dynamic)
  for (int q = 0; q < count; ++q) {
    Eigen::MatrixXd aq = base;
    if (toggles[q].delta != 0.0) {
      aq(toggles[q].i, toggles[q].j) += toggles[q].delta;
      aq(toggles[q].j, toggles[q].i) += toggles[q].delta;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(aq);
    const Eigen::VectorXd& alpha = eig.eigenvalues();
    Eigen::VectorXd weight(n);
    for (int b = 0; b < n; ++b) {
      const double colsum = eig.eigenvectors().col(b).sum();
      weight[b] = colsum * colsum;
    }

    std::vector<std::optional<InverseState>> states(static_cast<std::size_t>(n));
    std::vector<double> mu(static_cast<std::size_t>(n));
    for (int b = 0; b < n; ++b) {
      mu[b] = lambda * alpha[b];
      if (weight[b] == 0.0) continue;
      try {
        states[b] = make_inverse_state(Eigen::MatrixXd::Identity(n, n) - mu[b] * base);
      } catch (const SingularUpdate&) {
        states[b] = std::nullopt;
      }
    }

    for (int p = 0; p <= q; ++p) {
      double value = 0.0;
      bool closed_form = true;
      for (int b = 0; b < n && closed_form; ++b) {
        if (weight[b] == 0.0) continue;
        if (!states[b]) {
          closed_form = false;
          break;
        }
        double resolvent_sum;
        if (toggles[p].delta == 0.0) {
          resolvent_sum = states[b]->total;
        } else {
          try {
            resolvent_sum = toggled_grw_sum(*states[b], toggles[p].i, toggles[p].j,
                                            -mu[b] * toggles[p].delta);
          } catch (const SingularUpdate&) {
            closed_form = false;
            break;
          }
        }
        value += weight[b] * resolvent_sum;
      }
      if (!closed_form) {
        value = geometric_random_walk_kernel(graphs[p], graphs[q], lambda);
      }
      gram(p, q) = value;
      gram(q, p) = value;
    }
  }
  return gram;
}

}  // namespace

SteinKernelMatrix fast_grw_stein_matrix(const ScoreSource& score, const Graph& x,
                                        double lambda,
                                        const std::vector<PairIndex>& pairs,
                                        Convention convention) {
  if (pairs.empty()) throw InvalidArgument("no pairs selected");
  KernelSpec::geometric_random_walk(lambda);  // validates lambda
  const FlipIndex fi = build_flip_index(x, pairs);

  std::vector<FlipToggle> toggles(fi.graphs.size());
  for (std::size_t slot = 1; slot < fi.graphs.size(); ++slot) {
    const PairIndex s = fi.distinct[slot - 1];
    const VertexPair vp = pair_unindex(s, x.vertex_count());
    toggles[slot] = FlipToggle{vp.i, vp.j, x.has_edge(s) ? -1.0 : 1.0};
  }

  const Eigen::MatrixXd gram = grw_flip_gram(x, lambda, fi.graphs, toggles);
  return SteinKernelMatrix{pairs, assemble_h(score, x, pairs, fi, gram, convention)};
}

double kss_squared(const ScoreSource& score, const Graph& x, const KernelSpec& spec,
                   Convention convention, const PairSelection& selection,
                   bool use_fast_grw) {
  const std::vector<PairIndex> pairs = select_pairs(x, selection);
  if (use_fast_grw && spec.kind == KernelKind::GeometricRandomWalk) {
    return fast_grw_stein_matrix(score, x, spec.lambda, pairs, convention).statistic();
  }
  return stein_kernel_matrix(score, x, pairs, spec, convention).statistic();
}

double agrasst_squared(const ConditionalEstimator& estimator, const Graph& x,
                       const KernelSpec& spec, Convention convention,
                       const PairSelection& selection, bool use_fast_grw) {
  return kss_squared(ScoreSource::estimated(estimator), x, spec, convention, selection,
                     use_fast_grw);
}

}  // namespace gkss
