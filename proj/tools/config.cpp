#include "config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "gkss/errors.hpp"

namespace gkss::tools {

namespace {

std::string trim(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = text.find_last_not_of(" \t\r");
  return text.substr(begin, end - begin + 1);
}

std::vector<std::string> split_list(const std::string& text, char sep = ',') {
  std::vector<std::string> out;
  std::string item;
  std::istringstream stream(text);
  while (std::getline(stream, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

[[noreturn]] void fail(int line_no, const std::string& msg) {
  throw ConfigError("config line " + std::to_string(line_no) + ": " + msg);
}

long parse_long(const std::string& text, int line_no) {
  try {
    std::size_t used = 0;
    const long v = std::stol(text, &used);
    if (used != text.size()) fail(line_no, "trailing characters in number '" + text + "'");
    return v;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    fail(line_no, "expected an integer, got '" + text + "'");
  }
}

std::uint64_t parse_u64(const std::string& text, int line_no) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(text, &used);
    if (used != text.size()) fail(line_no, "trailing characters in number '" + text + "'");
    return static_cast<std::uint64_t>(v);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    fail(line_no, "expected an unsigned integer, got '" + text + "'");
  }
}

double parse_double(const std::string& text, int line_no) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) fail(line_no, "trailing characters in number '" + text + "'");
    return v;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    fail(line_no, "expected a number, got '" + text + "'");
  }
}

bool parse_bool(const std::string& text, int line_no) {
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  fail(line_no, "expected true/false, got '" + text + "'");
}

}  // namespace

GeneratorSpec generator_from_text(const std::string& text, int n) {
  std::istringstream stream(text);
  std::string head;
  stream >> head;
  const auto rest_number = [&stream, &text](const char* what) {
    double v = 0.0;
    if (!(stream >> v)) {
      throw ConfigError("generator '" + text + "' is missing its " + what);
    }
    return v;
  };
  const auto expect_end = [&stream, &text]() {
    std::string extra;
    if (stream >> extra) {
      throw ConfigError("generator '" + text + "' has trailing token '" + extra + "'");
    }
  };

  if (head == "e2s") {
    const double b1 = rest_number("edge coefficient");
    const double b2 = rest_number("two-star coefficient");
    expect_end();
    return GeneratorSpec::ergm(n, ErgmModel::e2s(b1, b2));
  }
  if (head == "edge") {
    const double b = rest_number("edge coefficient");
    expect_end();
    return GeneratorSpec::ergm(n, ErgmModel::edge_only(b));
  }
  if (head == "grg-torus" || head == "grg-square") {
    const double r = rest_number("radius");
    expect_end();
    return head == "grg-torus" ? GeneratorSpec::grg_torus(n, r)
                               : GeneratorSpec::grg_square(n, r);
  }
  if (head == "ba") {
    const double m = rest_number("attachment count");
    const double alpha = rest_number("degree exponent");
    expect_end();
    if (m < 1 || m != static_cast<double>(static_cast<int>(m))) {
      throw ConfigError("generator '" + text + "' needs an integer attachment count");
    }
    return GeneratorSpec::barabasi_albert(n, static_cast<int>(m), alpha);
  }
  if (head == "samples") {
    std::string dir;
    stream >> dir;
    if (dir.empty()) throw ConfigError("generator 'samples' needs a directory");
    expect_end();
    return GeneratorSpec::sample_dir(dir);
  }
  throw ConfigError("unknown generator '" + head + "'");
}

GeneratorSpec with_parameter(const GeneratorSpec& base, const std::string& param,
                             double value) {
  GeneratorSpec out = base;
  const auto need_kind = [&](GeneratorSpec::Kind kind, const char* family) {
    if (base.kind != kind) {
      throw ConfigError("parameter '" + param + "' needs a " + family + " null model, got " +
                        base.describe());
    }
  };
  if (param == "beta1" || param == "beta2") {
    need_kind(GeneratorSpec::Kind::Ergm, "ERGM");
    const std::size_t index = param == "beta1" ? 0 : 1;
    if (index >= out.model.beta.size()) {
      throw ConfigError("null model " + base.describe() + " has no " + param);
    }
    out.model.beta[index] = value;
    return out;
  }
  if (param == "radius") {
    if (base.kind != GeneratorSpec::Kind::GrgTorus &&
        base.kind != GeneratorSpec::Kind::GrgSquare) {
      throw ConfigError("parameter 'radius' needs a geometric null model, got " +
                        base.describe());
    }
    out.radius = value;
    return out;
  }
  if (param == "alpha") {
    need_kind(GeneratorSpec::Kind::BarabasiAlbert, "preferential-attachment");
    out.ba_alpha = value;
    return out;
  }
  if (param == "m") {
    need_kind(GeneratorSpec::Kind::BarabasiAlbert, "preferential-attachment");
    if (value < 1 || value != static_cast<double>(static_cast<int>(value))) {
      throw ConfigError("parameter 'm' needs a positive integer, got " +
                        std::to_string(value));
    }
    out.ba_m = static_cast<int>(value);
    return out;
  }
  throw ConfigError("unknown sweep parameter '" + param + "'");
}

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig cfg;
  std::string line;
  int line_no = 0;
  std::string null_text;
  int null_line = 0;
  std::vector<std::string> seen;

  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(line_no, "expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) fail(line_no, "empty key");
    if (value.empty()) fail(line_no, "empty value for '" + key + "'");
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
      fail(line_no, "duplicate key '" + key + "'");
    }
    seen.push_back(key);

    try {
      if (key == "experiment") {
        cfg.experiment = value;
      } else if (key == "seed") {
        cfg.seed = parse_u64(value, line_no);
      } else if (key == "n") {
        cfg.n = static_cast<int>(parse_long(value, line_no));
      } else if (key == "B") {
        cfg.resample_count = static_cast<int>(parse_long(value, line_no));
      } else if (key == "l") {
        cfg.null_simulations = static_cast<int>(parse_long(value, line_no));
      } else if (key == "level") {
        cfg.level = parse_double(value, line_no);
      } else if (key == "trials") {
        cfg.trials = static_cast<int>(parse_long(value, line_no));
      } else if (key == "convention") {
        if (value == "flip-feature") {
          cfg.convention = Convention::FlipFeature;
        } else if (value == "literal") {
          cfg.convention = Convention::Literal;
        } else {
          fail(line_no, "unknown convention '" + value + "'");
        }
      } else if (key == "statistic") {
        if (value == "exact") {
          cfg.statistic.reset();
        } else {
          cfg.statistic = statistic_kind_from_name(value);
        }
      } else if (key == "statistics") {
        for (const std::string& item : split_list(value)) {
          cfg.statistics.push_back(statistic_kind_from_name(item));
        }
      } else if (key == "kernels") {
        for (const std::string& item : split_list(value)) {
          cfg.kernels.push_back(kernel_spec_from_name(item));
        }
      } else if (key == "null" || key == "samples") {
        if (!null_text.empty()) {
          fail(line_no, "null model already set on line " + std::to_string(null_line));
        }
        null_text = key == "samples" ? "samples " + value : value;
        null_line = line_no;
      } else if (key == "alt_param") {
        cfg.alt_param = value;
      } else if (key == "alt_grid") {
        for (const std::string& item : split_list(value)) {
          cfg.alt_grid.push_back(parse_double(item, line_no));
        }
      } else if (key == "estimator_samples") {
        cfg.estimator_samples = static_cast<int>(parse_long(value, line_no));
      } else if (key == "observed") {
        cfg.observed = value;
      } else if (key == "n_list") {
        cfg.n_list.clear();
        for (const std::string& item : split_list(value)) {
          cfg.n_list.push_back(static_cast<int>(parse_long(item, line_no)));
        }
      } else if (key == "regimes") {
        cfg.regimes.clear();
        for (const std::string& item : split_list(value)) {
          if (item != "sparse" && item != "dense") {
            fail(line_no, "unknown regime '" + item + "'");
          }
          cfg.regimes.push_back(item);
        }
      } else if (key == "graphs") {
        cfg.bench_graphs = static_cast<int>(parse_long(value, line_no));
      } else if (key == "reps") {
        cfg.bench_reps = static_cast<int>(parse_long(value, line_no));
      } else if (key == "fast_grw") {
        cfg.fast_grw = parse_bool(value, line_no);
      } else {
        fail(line_no, "unknown key '" + key + "'");
      }
    } catch (const ConfigError&) {
      throw;
    } catch (const Error& e) {
      fail(line_no, e.what());
    }
  }

  if (!null_text.empty()) {
    try {
      cfg.null_model = generator_from_text(null_text, cfg.n);
    } catch (const Error& e) {
      throw ConfigError("config line " + std::to_string(null_line) + ": " +
                        std::string(e.what()));
    }
  }
  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  return parse_config(in);
}

}  // namespace gkss::tools
