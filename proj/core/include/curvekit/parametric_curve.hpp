#pragma once

#include <Eigen/Dense>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace curvekit {

using Vector = Eigen::VectorXd;

/// Marks a curve whose derivatives come from central finite differences of
/// the position map. base_step applies to the first derivative; higher
/// orders use fd_step_for_order.
struct FiniteDifferenceSource {
  double base_step = 1e-3;
};

/// A periodic parametric curve t -> R^n with derivative access.
///
/// Two derivative sources exist: analytic closures (preferred, any order)
/// and central finite differences of the position map (orders up to the
/// ambient dimension). All evaluation is const and stateless; instances may
/// be shared freely across threads.
class ParametricCurve {
 public:
  using PositionFn = std::function<Vector(double)>;
  using DerivativeFn = std::function<Vector(double, int)>;  // order >= 1

  static ParametricCurve analytic(int dimension, double period, PositionFn position,
                                  DerivativeFn derivative, std::string label = {});
  static ParametricCurve finite_difference(int dimension, double period, PositionFn position,
                                           FiniteDifferenceSource source = {},
                                           std::string label = {});

  int dimension() const { return dimension_; }
  double period() const { return period_; }
  const std::string& label() const { return label_; }
  bool analytic_derivatives() const { return static_cast<bool>(derivative_); }

  /// Largest derivative order the source supports. Unbounded in practice for
  /// analytic sources; capped at the ambient dimension for finite differences,
  /// beyond which the stencils are roundoff-dominated.
  int max_derivative_order() const;

  Vector position(double t) const;
  Vector derivative(double t, int order) const;
  double speed(double t) const { return derivative(t, 1).norm(); }

 private:
  ParametricCurve() = default;

  int dimension_ = 0;
  double period_ = 0.0;
  std::string label_;
  PositionFn position_;
  DerivativeFn derivative_;           // empty for FD curves
  FiniteDifferenceSource fd_source_;  // used when derivative_ is empty
};

/// Derivatives dx/dt .. d^order x/dt^order at t. Validates the order against
/// the curve's source and checks the results are finite.
std::vector<Vector> derivatives_at(const ParametricCurve& curve, double t, int order);

/// Closure check: |x(t+T) - x(t)| <= tol at `probes` uniformly spaced t.
bool is_closed(const ParametricCurve& curve, double tol = 1e-12, int probes = 16);

/// The curve t -> Q x(t) + b. Q must be orthogonal for the image to be an
/// isometric copy; this is not enforced.
ParametricCurve isometry_image(const ParametricCurve& curve, const Eigen::MatrixXd& rotation,
                               const Vector& translation);

/// The curve formed by the listed coordinates of `curve`, in the given order.
ParametricCurve coordinate_slice(const ParametricCurve& curve, std::vector<int> indices);

}  // namespace curvekit
