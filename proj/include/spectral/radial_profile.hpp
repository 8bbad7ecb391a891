#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace spectral {

enum class Manifold { sphere, torus, euclid };

/// A sampled radial kernel: values of a spectral kernel along a geodesic
/// distance grid, tagged by the manifold and the spectral level it came
/// from. This is the common currency between the kernel modules, the
/// experiment harness and the CLI.
struct RadialProfile {
  Manifold manifold = Manifold::euclid;
  double level = 0.0;
  std::vector<double> distances;  // strictly increasing, >= 0
  std::vector<double> values;     // same length, finite

  void validate() const {
    if (distances.size() != values.size()) {
      throw std::invalid_argument("RadialProfile: grid/value length mismatch");
    }
    for (std::size_t i = 0; i < distances.size(); ++i) {
      if (distances[i] < 0.0 || (i > 0 && distances[i] <= distances[i - 1])) {
        throw std::invalid_argument("RadialProfile: distances must be strictly increasing and >= 0");
      }
      if (!std::isfinite(values[i])) {
        throw std::invalid_argument("RadialProfile: values must be finite");
      }
    }
  }
};

}  // namespace spectral
