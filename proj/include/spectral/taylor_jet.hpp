#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace spectral {

/// Truncated power series around a fixed center. Arithmetic truncates
/// consistently at the jet order, so coefficient k stays the exact k-th
/// Taylor coefficient of the represented function; derivatives come out of
/// recurrences without finite differences.
class TaylorJet {
 public:
  static constexpr int kMaxOrder = 16;

  TaylorJet(double center, int order) : center_(center), coeffs_(check_order(order) + 1, 0.0) {}

  static TaylorJet constant(double value, double center, int order) {
    TaylorJet jet(center, order);
    jet.coeffs_[0] = value;
    return jet;
  }

  /// Jet of cos(phi) at phi = 0: 1, 0, -1/2!, 0, 1/4!, ...
  static TaylorJet cosine(int order) {
    TaylorJet jet(0.0, order);
    double c = 1.0;
    jet.coeffs_[0] = c;
    for (int k = 2; k <= order; k += 2) {
      c = -c / (k * (k - 1));
      jet.coeffs_[k] = c;
    }
    return jet;
  }

  double center() const { return center_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  double coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  double& coeff(int k) { return coeffs_.at(static_cast<std::size_t>(k)); }

  /// k-th derivative at the center: k! * coeff(k).
  double derivative(int k) const {
    double factorial = 1.0;
    for (int i = 2; i <= k; ++i) factorial *= i;
    return factorial * coeff(k);
  }

  TaylorJet& operator+=(const TaylorJet& other) {
    check_compatible(other);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    return *this;
  }

  TaylorJet& operator-=(const TaylorJet& other) {
    check_compatible(other);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
    return *this;
  }

  TaylorJet& operator*=(double scalar) {
    for (double& c : coeffs_) c *= scalar;
    return *this;
  }

  friend TaylorJet operator+(TaylorJet a, const TaylorJet& b) { return a += b; }
  friend TaylorJet operator-(TaylorJet a, const TaylorJet& b) { return a -= b; }
  friend TaylorJet operator*(TaylorJet a, double s) { return a *= s; }
  friend TaylorJet operator*(double s, TaylorJet a) { return a *= s; }

  /// Truncated Cauchy product.
  friend TaylorJet operator*(const TaylorJet& a, const TaylorJet& b) {
    a.check_compatible(b);
    TaylorJet out(a.center_, a.order());
    const std::size_t n = a.coeffs_.size();
    for (std::size_t k = 0; k < n; ++k) {
      double c = 0.0;
      for (std::size_t i = 0; i <= k; ++i) c += a.coeffs_[i] * b.coeffs_[k - i];
      out.coeffs_[k] = c;
    }
    return out;
  }

 private:
  static int check_order(int order) {
    if (order < 0 || order > kMaxOrder) {
      throw std::invalid_argument("TaylorJet: order must lie in [0, 16]");
    }
    return order;
  }

  void check_compatible(const TaylorJet& other) const {
    if (center_ != other.center_ || coeffs_.size() != other.coeffs_.size()) {
      throw std::invalid_argument("TaylorJet: operands must share center and order");
    }
  }

  double center_;
  std::vector<double> coeffs_;
};

}  // namespace spectral
