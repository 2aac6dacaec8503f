#include "gkss/generators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>

#include "gkss/rng.hpp"

namespace gkss {

Graph grg_sample(int n, double radius, bool torus, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("grg_sample: need at least one vertex");
  if (!(radius > 0.0)) throw InvalidArgument("grg_sample: radius must be positive");
  Rng rng(seed);
  std::vector<double> px(n), py(n);
  for (int v = 0; v < n; ++v) {
    px[v] = rng.next_double();
    py[v] = rng.next_double();
  }
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double dx = std::abs(px[i] - px[j]);
      double dy = std::abs(py[i] - py[j]);
      if (torus) {
        dx = std::min(dx, 1.0 - dx);
        dy = std::min(dy, 1.0 - dy);
      }
      if (dx * dx + dy * dy < radius * radius) g.set_edge(i, j, true);
    }
  return g;
}

Graph barabasi_albert_sample(int n, int m, double alpha, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("barabasi_albert_sample: need at least one vertex");
  if (m < 1 || m > n)
    throw InvalidArgument("barabasi_albert_sample: attachment count must be in [1, n]");
  Rng rng(seed);
  Graph g(n);
  std::vector<int> degree(n, 0);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      g.set_edge(i, j, true);
      ++degree[i];
      ++degree[j];
    }
  auto weight = [alpha](int deg) {
    if (deg == 0) return alpha == 0.0 ? 2.0 : 1.0;
    return std::pow(static_cast<double>(deg), alpha) + 1.0;
  };
  std::vector<char> taken(n, 0);
  for (int v = m; v < n; ++v) {
    std::fill(taken.begin(), taken.begin() + v, 0);
    for (int e = 0; e < m; ++e) {
      double total = 0.0;
      for (int u = 0; u < v; ++u)
        if (!taken[u]) total += weight(degree[u]);
      double pick = rng.next_double() * total;
      int chosen = -1;
      for (int u = 0; u < v; ++u) {
        if (taken[u]) continue;
        pick -= weight(degree[u]);
        if (pick < 0.0) {
          chosen = u;
          break;
        }
      }
      if (chosen < 0) {
        // Rounding pushed the cursor past the last candidate.
        for (int u = v - 1; u >= 0; --u)
          if (!taken[u]) {
            chosen = u;
            break;
          }
      }
      taken[chosen] = 1;
      g.set_edge(chosen, v, true);
      ++degree[chosen];
      ++degree[v];
    }
  }
  return g;
}

SampleBatch::SampleBatch(const std::string& directory) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(directory, ec))
    throw IngestError("sample directory '" + directory + "' does not exist");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(directory))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });
  if (files.empty()) throw IngestError("sample directory '" + directory + "' has no files");
  for (const fs::path& f : files) graphs_.push_back(read_graph_file(f.string()));
  for (const Graph& g : graphs_)
    if (g.vertex_count() != graphs_.front().vertex_count())
      throw IngestError("sample directory '" + directory + "' mixes vertex counts " +
                        std::to_string(graphs_.front().vertex_count()) + " and " +
                        std::to_string(g.vertex_count()));
}

int SampleBatch::vertex_count() const { return graphs_.front().vertex_count(); }

const Graph& SampleBatch::at(int index) const {
  if (index < 0 || index >= size())
    throw Error("sample batch exhausted: index " + std::to_string(index) + " of " +
                std::to_string(size()) + " samples (cycling is not allowed)");
  return graphs_[static_cast<std::size_t>(index)];
}

GeneratorSpec GeneratorSpec::grg_torus(int n, double radius) {
  GeneratorSpec s;
  s.kind = Kind::GrgTorus;
  s.n = n;
  s.radius = radius;
  return s;
}

GeneratorSpec GeneratorSpec::grg_square(int n, double radius) {
  GeneratorSpec s = grg_torus(n, radius);
  s.kind = Kind::GrgSquare;
  return s;
}

GeneratorSpec GeneratorSpec::barabasi_albert(int n, int m, double alpha) {
  GeneratorSpec s;
  s.kind = Kind::BarabasiAlbert;
  s.n = n;
  s.ba_m = m;
  s.ba_alpha = alpha;
  return s;
}

GeneratorSpec GeneratorSpec::ergm(int n, ErgmModel model) {
  GeneratorSpec s;
  s.kind = Kind::Ergm;
  s.n = n;
  s.model = std::move(model);
  return s;
}

GeneratorSpec GeneratorSpec::sample_dir(const std::string& directory) {
  GeneratorSpec s;
  s.kind = Kind::SampleDir;
  s.directory = directory;
  return s;
}

std::string GeneratorSpec::describe() const {
  char buf[128];
  switch (kind) {
    case Kind::GrgTorus:
      std::snprintf(buf, sizeof(buf), "grg-torus r=%g n=%d", radius, n);
      return buf;
    case Kind::GrgSquare:
      std::snprintf(buf, sizeof(buf), "grg-square r=%g n=%d", radius, n);
      return buf;
    case Kind::BarabasiAlbert:
      std::snprintf(buf, sizeof(buf), "ba m=%d alpha=%g n=%d", ba_m, ba_alpha, n);
      return buf;
    case Kind::Ergm: {
      std::string out = "ergm";
      for (std::size_t i = 0; i < model.terms.size(); ++i) {
        std::snprintf(buf, sizeof(buf), " %s=%g",
                      model.terms[i] == TermKind::Edge ? "edge" : "twostar", model.beta[i]);
        out += buf;
      }
      out += " n=" + std::to_string(n);
      return out;
    }
    case Kind::SampleDir:
      return "samples " + directory;
  }
  return "?";
}

NullSampler::NullSampler(const GeneratorSpec& spec) : spec_(spec) {
  switch (spec_.kind) {
    case GeneratorSpec::Kind::SampleDir:
      batch_ = std::make_shared<SampleBatch>(spec_.directory);
      spec_.n = batch_->vertex_count();
      break;
    case GeneratorSpec::Kind::Ergm:
      spec_.model.validate();
      [[fallthrough]];
    default:
      if (spec_.n < 1) throw InvalidArgument("generator: vertex count must be positive");
  }
}

int NullSampler::vertex_count() const { return spec_.n; }

int NullSampler::fixed_count() const { return batch_ ? batch_->size() : 0; }

Graph NullSampler::draw(std::uint64_t seed, std::uint64_t index) const {
  const std::uint64_t s = derive_seed(seed, 0x67656e64726177ULL, index);
  switch (spec_.kind) {
    case GeneratorSpec::Kind::GrgTorus:
      return grg_sample(spec_.n, spec_.radius, true, s);
    case GeneratorSpec::Kind::GrgSquare:
      return grg_sample(spec_.n, spec_.radius, false, s);
    case GeneratorSpec::Kind::BarabasiAlbert:
      return barabasi_albert_sample(spec_.n, spec_.ba_m, spec_.ba_alpha, s);
    case GeneratorSpec::Kind::Ergm:
      return gibbs_sample(spec_.model, spec_.n, default_gibbs_steps(spec_.n), s);
    case GeneratorSpec::Kind::SampleDir:
      return batch_->at(static_cast<int>(index));
  }
  throw InvalidArgument("generator: unknown kind");
}

}  // namespace gkss
