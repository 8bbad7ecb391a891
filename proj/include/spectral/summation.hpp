#pragma once

#include <cmath>

namespace spectral {

/// Neumaier compensated accumulator. Keeps a running error term so that the
/// final sum is accurate to ~1 ulp regardless of cancellation between terms,
/// which makes large sums insensitive to their accumulation order.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace spectral
