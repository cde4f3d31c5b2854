/// @file error.hpp
/// @brief Error taxonomy mapped to process exit codes by the CLI.
#pragma once

#include <stdexcept>
#include <string>

namespace cov2d {

/// Invalid configuration or command line (exit code 1).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical failure: non-finite state, degenerate geometry, solver breakdown (exit code 2).
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Filesystem failure, always carries the offending path (exit code 3).
struct IoError : std::runtime_error {
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace cov2d
