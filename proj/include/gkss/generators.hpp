// Random graph generators (geometric, preferential attachment, ERGM via
// Gibbs) and a directory-of-samples source, behind one sampling facade.
#ifndef GKSS_GENERATORS_HPP
#define GKSS_GENERATORS_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gkss/ergm.hpp"
#include "gkss/graph.hpp"

namespace gkss {

// n points uniform on the unit square, edge iff distance < radius. On the
// torus each coordinate difference wraps: min(|d|, 1-|d|).
Graph grg_sample(int n, double radius, bool torus, std::uint64_t seed);

// Complete seed graph on m vertices; each arrival attaches m edges drawn
// sequentially without replacement with probability proportional to
// degree^alpha + 1, degrees refreshed between draws.
Graph barabasi_albert_sample(int n, int m, double alpha, std::uint64_t seed);

// Graphs read from every regular file of a directory, in lexicographic
// filename order. All files must share one vertex count.
class SampleBatch {
 public:
  explicit SampleBatch(const std::string& directory);

  int size() const { return static_cast<int>(graphs_.size()); }
  int vertex_count() const;
  const Graph& at(int index) const;
  const std::vector<Graph>& all() const { return graphs_; }

 private:
  std::vector<Graph> graphs_;
};

struct GeneratorSpec {
  enum class Kind { GrgTorus, GrgSquare, BarabasiAlbert, Ergm, SampleDir };

  Kind kind = Kind::Ergm;
  int n = 0;
  double radius = 0.0;
  int ba_m = 1;
  double ba_alpha = 1.0;
  ErgmModel model;
  std::string directory;

  static GeneratorSpec grg_torus(int n, double radius);
  static GeneratorSpec grg_square(int n, double radius);
  static GeneratorSpec barabasi_albert(int n, int m, double alpha);
  static GeneratorSpec ergm(int n, ErgmModel model);
  static GeneratorSpec sample_dir(const std::string& directory);

  std::string describe() const;
};

// Uniform draw interface over every generator kind. For random generators
// draws depend only on the derived (seed, index) stream; a sample directory
// returns its files by index and ignores the seed.
class NullSampler {
 public:
  explicit NullSampler(const GeneratorSpec& spec);

  int vertex_count() const;
  // Number of available samples; 0 means unlimited.
  int fixed_count() const;
  Graph draw(std::uint64_t seed, std::uint64_t index) const;
  const GeneratorSpec& spec() const { return spec_; }

 private:
  GeneratorSpec spec_;
  std::shared_ptr<const SampleBatch> batch_;
};

}  // namespace gkss

#endif
