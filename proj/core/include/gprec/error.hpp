#pragma once

#include <stdexcept>
#include <string>

namespace gprec {

// Error taxonomy used across the library. Each class maps to one failure
// family so callers (CLI, tests) can report machine-readable categories.
struct Error : std::runtime_error {
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(msg), kind(std::move(kind)) {}
  std::string kind;
};

struct SchemaError : Error {
  explicit SchemaError(const std::string& m) : Error("schema", m) {}
};
struct CardinalityError : Error {
  explicit CardinalityError(const std::string& m) : Error("cardinality", m) {}
};
struct LabelError : Error {
  explicit LabelError(const std::string& m) : Error("label", m) {}
};
struct ConfigError : Error {
  explicit ConfigError(const std::string& m) : Error("config", m) {}
};
struct DimensionError : Error {
  explicit DimensionError(const std::string& m) : Error("dimension", m) {}
};
struct LookupError : Error {
  explicit LookupError(const std::string& m) : Error("lookup", m) {}
};
struct NumericError : Error {
  explicit NumericError(const std::string& m) : Error("numeric", m) {}
};
struct DomainError : Error {
  explicit DomainError(const std::string& m) : Error("domain", m) {}
};
struct MetricError : Error {
  explicit MetricError(const std::string& m) : Error("metric", m) {}
};
struct StatisticsError : Error {
  explicit StatisticsError(const std::string& m) : Error("statistics", m) {}
};
struct IoError : Error {
  explicit IoError(const std::string& m) : Error("io", m) {}
};

}  // namespace gprec
