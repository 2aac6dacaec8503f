// Kernelised Stein discrepancy statistics for graphs: coefficients from an
// exact model or an estimated conditional law, the B x B Stein kernel matrix,
// and the resampled/full quadratic-form statistics.
#ifndef GKSS_STEIN_HPP
#define GKSS_STEIN_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <variant>
#include <vector>

#include "gkss/ergm.hpp"
#include "gkss/graph.hpp"
#include "gkss/kernels.hpp"

namespace gkss {

// Conditional edge probabilities estimated by relative frequencies, binned on
// a summary statistic of the remaining graph. Bins never seen in fitting fall
// back to the global edge frequency of the fitting samples.
class ConditionalEstimator {
 public:
  static ConditionalEstimator fit(StatisticKind kind, const std::vector<Graph>& samples);

  StatisticKind kind() const { return kind_; }
  int vertex_count() const { return n_; }
  int bin_count() const { return static_cast<int>(bins_.size()); }
  double fallback_probability() const { return fallback_; }

  double probability_for_value(std::uint64_t value) const;
  // q-hat(x_s = 1 | rest of x); the complement 1 - value is the probability
  // of absence.
  double edge_probability(const Graph& x, PairIndex s) const;

  // CSV with a "stat_value,present,total" header; the fallback is recovered
  // from the bin totals on import.
  void write_csv(std::ostream& out) const;
  static ConditionalEstimator from_csv(StatisticKind kind, int vertex_count,
                                       std::istream& in);

 private:
  struct BinCounts {
    long present = 0;
    long total = 0;
  };

  StatisticKind kind_ = StatisticKind::Density;
  int n_ = 0;
  std::vector<std::pair<std::uint64_t, BinCounts>> bins_;  // sorted by value
  double fallback_ = 0.0;

  void finish();
};

// Supplier of q(x_s = 1 | x_{-s}): either the exact ERGM conditional or an
// estimated one.
class ScoreSource {
 public:
  static ScoreSource exact(ErgmModel model);
  static ScoreSource estimated(ConditionalEstimator estimator);

  double edge_probability(const Graph& x, PairIndex s) const;
  const ErgmModel* model() const;
  const ConditionalEstimator* estimator() const;

 private:
  std::variant<ErgmModel, ConditionalEstimator> impl_;
};

// FlipFeature uses h(s,s') = c_s c_{s'} k(x flip s, x flip s'); Literal
// expands the Stein operator into its four kernel terms (for the constant
// kernel the Literal form is identically zero).
enum class Convention { FlipFeature, Literal };

// c_s = q(x_s = 1 | x_{-s}) - x_s.
double stein_coefficient(const ScoreSource& score, const Graph& x, PairIndex s);

struct SteinKernelMatrix {
  std::vector<PairIndex> pairs;
  Eigen::MatrixXd h;

  double statistic() const {
    const double b = static_cast<double>(pairs.size());
    return h.sum() / (b * b);
  }
};

SteinKernelMatrix stein_kernel_matrix(const ScoreSource& score, const Graph& x,
                                      const std::vector<PairIndex>& pairs,
                                      const KernelSpec& spec, Convention convention);

// Same matrix for the geometric random walk kernel, but every Gram entry is
// answered by O(1) rank-2 toggle queries against per-eigenvalue inverse
// states of the unflipped graph instead of a fresh product-graph solve.
// Entries whose closed-form update degenerates fall back to the dense solve.
SteinKernelMatrix fast_grw_stein_matrix(const ScoreSource& score, const Graph& x,
                                        double lambda,
                                        const std::vector<PairIndex>& pairs,
                                        Convention convention = Convention::FlipFeature);

struct PairSelection {
  enum class Mode { All, Resample };
  Mode mode = Mode::All;
  int count = 0;
  std::uint64_t seed = 0;

  static PairSelection all();
  static PairSelection resample(int count, std::uint64_t seed);
};

// All -> every pair once; Resample -> `count` uniform draws with replacement.
std::vector<PairIndex> select_pairs(const Graph& x, const PairSelection& selection);

// Squared kernelised Stein statistic (1/B^2) sum_{b,b'} h(s_b, s_{b'}).
// With use_fast_grw the geometric random walk spec routes through
// fast_grw_stein_matrix.
double kss_squared(const ScoreSource& score, const Graph& x, const KernelSpec& spec,
                   Convention convention, const PairSelection& selection,
                   bool use_fast_grw = false);

// Same statistic with the estimated conditional law.
double agrasst_squared(const ConditionalEstimator& estimator, const Graph& x,
                       const KernelSpec& spec, Convention convention,
                       const PairSelection& selection, bool use_fast_grw = false);

}  // namespace gkss

#endif
