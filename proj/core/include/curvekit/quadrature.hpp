#pragma once

#include <functional>

#include "curvekit/parametric_curve.hpp"

namespace curvekit {

enum class QuadratureScheme {
  Simpson,        // composite Simpson on a uniform grid
  GaussLegendre,  // 5-point Gauss-Legendre panels
};

struct QuadratureConfig {
  QuadratureScheme scheme = QuadratureScheme::Simpson;
  int samples = 2048;     // grid resolution over one period (Simpson: even, >= 64)
  double fd_step = 1e-3;  // base step for finite-difference derivative sources
  bool check_convergence = true;
  double convergence_tol = 1e-7;  // relative grid-doubling residual

  void validate() const;
};

/// Integral of f over [t0, t1]. With check_convergence set, the grid is
/// doubled once and a residual above convergence_tol raises QuadratureError.
double integrate(const std::function<double(double)>& f, double t0, double t1,
                 const QuadratureConfig& config = {});

/// Arc length of the curve over [t0, t1].
double arc_length(const ParametricCurve& curve, double t0, double t1,
                  const QuadratureConfig& config = {});

/// Line integral of a scalar over one period: integral of integrand(t) * speed(t) dt.
double integrate_scalar_along(const ParametricCurve& curve,
                              const std::function<double(double)>& integrand,
                              const QuadratureConfig& config = {});

}  // namespace curvekit
