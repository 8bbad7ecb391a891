#pragma once

#include <stdexcept>
#include <string>

namespace spectral {

/// Thrown when a computation would exceed a configured resource budget
/// (e.g. the lattice point budget of the torus sums).
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace spectral
