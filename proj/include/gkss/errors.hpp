// Exception types shared across the library.
#ifndef GKSS_ERRORS_HPP
#define GKSS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gkss {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& msg) : Error(msg) {}
};

// Pair index out of range or malformed (i,j).
struct InvalidPair : Error {
  explicit InvalidPair(const std::string& msg) : Error(msg) {}
};

// Graph/config/estimator file could not be parsed; line is 1-based.
struct ParseError : Error {
  ParseError(const std::string& msg, int line_no)
      : Error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
  int line;
};

// Rank-2 update denominator vanished; the closed form does not apply.
struct SingularUpdate : Error {
  explicit SingularUpdate(const std::string& msg) : Error(msg) {}
};

// Random-walk kernel parameter outside its convergence bound.
struct DivergentKernel : Error {
  explicit DivergentKernel(const std::string& msg) : Error(msg) {}
};

// Linear solve inside a kernel hit a (numerically) singular system.
struct SingularKernel : Error {
  explicit SingularKernel(const std::string& msg) : Error(msg) {}
};

struct IncompatibleGraphs : Error {
  explicit IncompatibleGraphs(const std::string& msg) : Error(msg) {}
};

struct GraphTooSmall : Error {
  explicit GraphTooSmall(const std::string& msg) : Error(msg) {}
};

struct TooLarge : Error {
  explicit TooLarge(const std::string& msg) : Error(msg) {}
};

// Sample-directory ingestion failed (empty directory, mixed sizes, ...).
struct IngestError : Error {
  explicit IngestError(const std::string& msg) : Error(msg) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

}  // namespace gkss

#endif
