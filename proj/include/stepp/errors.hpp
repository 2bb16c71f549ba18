#pragma once

#include <stdexcept>
#include <string>

namespace stepp {

/// Malformed configuration or file schema (CLI exit code 2).
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid data or model state: dimension mismatches, degenerate
/// distributions, unsatisfiable preconditions (CLI exit code 3).
class ModelError : public std::runtime_error {
public:
  explicit ModelError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace stepp
