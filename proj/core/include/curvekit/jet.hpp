#pragma once

#include <Eigen/Dense>
#include <vector>

#include "curvekit/parametric_curve.hpp"

namespace curvekit {

/// Truncated Taylor series of a scalar function about a point: coefficient k
/// stores f^(k)/k!. Arithmetic truncates at the common order, which is all
/// the normalized-wedge pipeline needs to propagate derivatives exactly.
class Jet {
 public:
  Jet() = default;
  explicit Jet(int order) : c_(Eigen::VectorXd::Zero(order + 1)) {}
  static Jet constant(double value, int order) {
    Jet j(order);
    j.c_[0] = value;
    return j;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  double& coeff(int k) { return c_[k]; }
  double coeff(int k) const { return c_[k]; }
  double value() const { return c_[0]; }
  /// f^(k) = k! * c_k
  double derivative(int k) const;

  Jet operator+(const Jet& o) const;
  Jet operator-(const Jet& o) const;
  Jet operator*(const Jet& o) const;
  Jet operator/(const Jet& o) const;  // o.value() != 0
  Jet operator*(double s) const;
  Jet sqrt() const;  // value() > 0

 private:
  Eigen::VectorXd c_;
};

using VectorJet = std::vector<Jet>;

/// Componentwise dot product of two vector jets.
Jet dot(const VectorJet& a, const VectorJet& b);

/// Taylor jet of t -> d^shift x / dt^shift (curve's shift-th derivative map)
/// about the point t, to the given order. shift = 0 is the position itself.
VectorJet curve_jet(const ParametricCurve& curve, double t, int shift, int order);

}  // namespace curvekit
