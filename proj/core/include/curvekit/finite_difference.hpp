#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

namespace curvekit {

/// Finite-difference weights for the derivatives 0..max_order at the point z,
/// given arbitrary distinct nodes (Fornberg's recursion). Row m holds the
/// weights of the m-th derivative.
Eigen::MatrixXd fd_weights(double z, const std::vector<double>& nodes, int max_order);

/// Central-difference step used for the m-th derivative, derived from the
/// first-derivative base step. Higher derivatives need substantially larger
/// steps before roundoff amplification (~eps/h^m) overtakes truncation; the
/// exponent keeps each order near its own optimum when base_step ~ 1e-3.
inline double fd_step_for_order(double base_step, int order) {
  return std::pow(base_step, 5.0 / (4.0 + order));
}

/// m-th derivative of a vector-valued map by a symmetric central stencil of
/// at least 4th-order accuracy.
Eigen::VectorXd central_derivative(const std::function<Eigen::VectorXd(double)>& f,
                                   double t, int order, double base_step);

}  // namespace curvekit
