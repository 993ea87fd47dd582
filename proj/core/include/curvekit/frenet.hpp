#pragma once

#include <optional>
#include <vector>

#include "curvekit/parametric_curve.hpp"

namespace curvekit {

/// Gram-Schmidt pivot norms below this signal a degenerate osculating flag.
inline constexpr double kPivotFloor = 1e-10;

/// Speed below this means the parameterization is not regular.
inline constexpr double kSpeedFloor = 1e-10;

/// Frenet data of a curve at one parameter value: speed, the orthonormal
/// frame from Gram-Schmidt on successive derivatives, and the curvatures
/// k_i = |u_{i+1}| / (|u_i| |x'|) where u_j are the unnormalized
/// Gram-Schmidt vectors (the pivot form of the Frenet recurrences).
///
/// When pivot j falls below kPivotFloor the frame stops at e_{j-1}, the last
/// curvature k_{j-1} is reported as 0 (its limit), and degenerate_level
/// records j. Curvatures beyond that level are undefined and absent.
struct FrenetApparatus {
  double t = 0.0;
  double speed = 0.0;
  std::vector<Vector> frame;       // e_1 .. e_r
  std::vector<double> curvatures;  // k_1 .. k_{r-1}
  std::vector<double> pivots;      // |u_1| .. |u_r|
  std::optional<int> degenerate_level;

  bool degenerate() const { return degenerate_level.has_value(); }
  /// max |<e_i, e_j> - delta_ij|
  double orthonormality_residual() const;
};

/// Frenet apparatus from derivatives x', .., x^(levels). 1 <= levels <= n.
/// Throws IrregularCurveError when speed < kSpeedFloor.
FrenetApparatus frenet_at(const ParametricCurve& curve, double t, int levels);

}  // namespace curvekit
