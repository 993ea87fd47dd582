#include "curvekit/finite_difference.hpp"

#include <cmath>

namespace curvekit {

// Fornberg, "Generation of finite difference formulas on arbitrarily spaced
// grids", Math. Comp. 51 (1988).
Eigen::MatrixXd fd_weights(double z, const std::vector<double>& nodes, int max_order) {
  const int n = static_cast<int>(nodes.size()) - 1;
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n + 1, max_order + 1);
  double c1 = 1.0;
  double c4 = nodes[0] - z;
  c(0, 0) = 1.0;
  for (int i = 1; i <= n; ++i) {
    const int mn = std::min(i, max_order);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = nodes[i] - z;
    for (int j = 0; j < i; ++j) {
      const double c3 = nodes[i] - nodes[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) {
          c(i, k) = c1 * (k * c(i - 1, k - 1) - c5 * c(i - 1, k)) / c2;
        }
        c(i, 0) = -c1 * c5 * c(i - 1, 0) / c2;
      }
      for (int k = mn; k >= 1; --k) {
        c(j, k) = (c4 * c(j, k) - k * c(j, k - 1)) / c3;
      }
      c(j, 0) = c4 * c(j, 0) / c3;
    }
    c1 = c2;
  }
  return c.transpose();
}

Eigen::VectorXd central_derivative(const std::function<Eigen::VectorXd(double)>& f,
                                   double t, int order, double base_step) {
  const double h = fd_step_for_order(base_step, order);
  const int half = order / 2 + 2;  // symmetric stencil, >= 4th-order accurate
  std::vector<double> nodes;
  nodes.reserve(2 * half + 1);
  for (int i = -half; i <= half; ++i) nodes.push_back(t + i * h);
  const Eigen::MatrixXd w = fd_weights(t, nodes, order);
  Eigen::VectorXd acc;
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
    const Eigen::VectorXd fi = f(nodes[i]);
    if (i == 0) {
      acc = w(order, i) * fi;
    } else {
      acc += w(order, i) * fi;
    }
  }
  return acc;
}

}  // namespace curvekit
