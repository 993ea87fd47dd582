#include "curvekit/parametric_curve.hpp"

#include <cmath>
#include <utility>

#include "curvekit/errors.hpp"
#include "curvekit/finite_difference.hpp"

namespace curvekit {

namespace {
constexpr int kAnalyticOrderCap = 64;

void require_geometry(int dimension, double period) {
  if (dimension < 2) throw SpecValidationError("curve dimension must be >= 2");
  if (!(period > 0.0)) throw SpecValidationError("curve period must be positive");
}
}  // namespace

ParametricCurve ParametricCurve::analytic(int dimension, double period, PositionFn position,
                                          DerivativeFn derivative, std::string label) {
  require_geometry(dimension, period);
  ParametricCurve c;
  c.dimension_ = dimension;
  c.period_ = period;
  c.label_ = std::move(label);
  c.position_ = std::move(position);
  c.derivative_ = std::move(derivative);
  return c;
}

ParametricCurve ParametricCurve::finite_difference(int dimension, double period,
                                                   PositionFn position,
                                                   FiniteDifferenceSource source,
                                                   std::string label) {
  require_geometry(dimension, period);
  if (!(source.base_step >= 1e-7 && source.base_step <= 1e-3)) {
    throw SpecValidationError("finite-difference base step must lie in [1e-7, 1e-3]");
  }
  ParametricCurve c;
  c.dimension_ = dimension;
  c.period_ = period;
  c.label_ = std::move(label);
  c.position_ = std::move(position);
  c.fd_source_ = source;
  return c;
}

int ParametricCurve::max_derivative_order() const {
  return analytic_derivatives() ? kAnalyticOrderCap : dimension_;
}

Vector ParametricCurve::position(double t) const { return position_(t); }

Vector ParametricCurve::derivative(double t, int order) const {
  if (order < 1 || order > max_derivative_order()) {
    throw UnsupportedOrderError("derivative order " + std::to_string(order) +
                                " not supported by this curve (max " +
                                std::to_string(max_derivative_order()) + ")");
  }
  if (derivative_) return derivative_(t, order);
  return central_derivative(position_, t, order, fd_source_.base_step);
}

std::vector<Vector> derivatives_at(const ParametricCurve& curve, double t, int order) {
  if (order < 1) throw UnsupportedOrderError("derivative order must be >= 1");
  std::vector<Vector> out;
  out.reserve(order);
  for (int m = 1; m <= order; ++m) {
    Vector d = curve.derivative(t, m);
    if (!d.allFinite()) {
      throw NumericDomainError("non-finite derivative of order " + std::to_string(m) +
                               " at t = " + std::to_string(t));
    }
    out.push_back(std::move(d));
  }
  return out;
}

bool is_closed(const ParametricCurve& curve, double tol, int probes) {
  const double T = curve.period();
  for (int i = 0; i < probes; ++i) {
    const double t = T * i / probes;
    if ((curve.position(t + T) - curve.position(t)).lpNorm<Eigen::Infinity>() > tol) {
      return false;
    }
  }
  return true;
}

ParametricCurve isometry_image(const ParametricCurve& curve, const Eigen::MatrixXd& rotation,
                               const Vector& translation) {
  const auto Q = rotation;
  const auto b = translation;
  auto pos = [curve, Q, b](double t) -> Vector { return Q * curve.position(t) + b; };
  if (curve.analytic_derivatives()) {
    auto deriv = [curve, Q](double t, int order) -> Vector {
      return Q * curve.derivative(t, order);
    };
    return ParametricCurve::analytic(curve.dimension(), curve.period(), pos, deriv,
                                     curve.label() + "|moved");
  }
  return ParametricCurve::finite_difference(curve.dimension(), curve.period(), pos, {},
                                            curve.label() + "|moved");
}

ParametricCurve coordinate_slice(const ParametricCurve& curve, std::vector<int> indices) {
  for (int i : indices) {
    if (i < 0 || i >= curve.dimension()) throw SpecValidationError("slice index out of range");
  }
  const int dim = static_cast<int>(indices.size());
  auto gather = [indices, dim](const Vector& full) -> Vector {
    Vector out(dim);
    for (int i = 0; i < dim; ++i) out[i] = full[indices[i]];
    return out;
  };
  auto pos = [curve, gather](double t) -> Vector { return gather(curve.position(t)); };
  if (curve.analytic_derivatives()) {
    auto deriv = [curve, gather](double t, int order) -> Vector {
      return gather(curve.derivative(t, order));
    };
    return ParametricCurve::analytic(dim, curve.period(), pos, deriv, curve.label() + "|slice");
  }
  return ParametricCurve::finite_difference(dim, curve.period(), pos, {},
                                            curve.label() + "|slice");
}

}  // namespace curvekit
