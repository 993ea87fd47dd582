#include "curvekit/frenet.hpp"

#include <cmath>

#include "curvekit/errors.hpp"

namespace curvekit {

double FrenetApparatus::orthonormality_residual() const {
  double worst = 0.0;
  for (size_t i = 0; i < frame.size(); ++i) {
    for (size_t j = i; j < frame.size(); ++j) {
      const double g = frame[i].dot(frame[j]) - (i == j ? 1.0 : 0.0);
      worst = std::max(worst, std::abs(g));
    }
  }
  return worst;
}

FrenetApparatus frenet_at(const ParametricCurve& curve, double t, int levels) {
  if (levels < 1 || levels > curve.dimension()) {
    throw UnsupportedOrderError("frenet levels must lie in [1, dimension]");
  }
  const std::vector<Vector> ders = derivatives_at(curve, t, levels);

  FrenetApparatus fa;
  fa.t = t;
  fa.speed = ders[0].norm();
  if (fa.speed < kSpeedFloor) {
    throw IrregularCurveError("speed " + std::to_string(fa.speed) + " below regularity floor at t = " +
                              std::to_string(t));
  }

  for (int j = 0; j < levels; ++j) {
    Vector u = ders[j];
    for (const Vector& e : fa.frame) u -= u.dot(e) * e;
    // One re-orthogonalization pass keeps the frame orthonormal to ~1e-15
    // even when the raw pivot is small relative to |x^(j+1)|.
    for (const Vector& e : fa.frame) u -= u.dot(e) * e;
    const double pivot = u.norm();
    fa.pivots.push_back(pivot);
    if (pivot < kPivotFloor) {
      fa.degenerate_level = j + 1;
      if (j >= 1) fa.curvatures.push_back(0.0);
      return fa;
    }
    fa.frame.push_back(u / pivot);
    if (j >= 1) fa.curvatures.push_back(pivot / (fa.pivots[j - 1] * fa.speed));
  }
  return fa;
}

}  // namespace curvekit
