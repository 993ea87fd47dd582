#pragma once

#include <array>
#include <string>
#include <vector>

#include "curvekit/ccc.hpp"
#include "curvekit/parametric_curve.hpp"
#include "curvekit/quadrature.hpp"

namespace curvekit {

using Vector6 = Eigen::Matrix<double, 6, 1>;

/// Wedge norms below this mean the osculating plane is undefined.
inline constexpr double kWedgeFloor = 1e-10;

/// Curvature floor under which the indicatrix transform is refused.
inline constexpr double kTransformCurvatureFloor = 1e-8;

/// A point of the oriented Grassmannian G(2,4) embedded in the unit sphere
/// of R^6 by Plucker coordinates, component order (12, 13, 14, 23, 24, 34).
struct PluckerPoint {
  Vector6 p;

  double norm_residual() const { return std::abs(p.norm() - 1.0); }
  /// p12 p34 - p13 p24 + p14 p23; zero exactly on decomposable bivectors.
  double quadric_residual() const { return p[0] * p[5] - p[1] * p[4] + p[2] * p[3]; }
};

/// Exterior product of two vectors in R^4, components p_ij = u_i v_j - u_j v_i
/// listed in the order (12, 13, 14, 23, 24, 34).
Vector6 wedge2(const Eigen::Vector4d& u, const Eigen::Vector4d& v);

/// Unit-normalizes a raw bivector. Throws DegeneratePlaneError when |w| is
/// below kWedgeFloor (an osculating plane degenerating, e.g. a plane circle).
PluckerPoint plucker_normalize(const Vector6& w);

/// The osculating indicatrix: t -> [x'(t) ^ x''(t)] / |x'(t) ^ x''(t)| as a
/// curve in R^6. Requires a curve in R^4 with k1, k2 above curvature_floor
/// over the period (checked by sampling); throws NotTransformableError
/// otherwise. Derivatives are exact (propagated through truncated Taylor
/// arithmetic) when the input curve has analytic derivatives.
ParametricCurve osculating_indicatrix(const ParametricCurve& curve,
                                      double curvature_floor = kTransformCurvatureFloor,
                                      int floor_samples = 256);

/// Closed-form indicatrix position for a constant-curvature curve. Matches
/// the wedge pipeline componentwise; the fixed components are
/// p12 = a1^2 alpha1^3 / lambda and p34 = a2^2 alpha2^3 / lambda.
Vector6 indicatrix_closed_form(const CCCSpec& spec, double t);

/// Closed-form differential invariants of the indicatrix of a
/// constant-curvature curve.
struct IndicatrixInvariants {
  double lambda;  // sqrt(a1^2 a1'^2 + ...) * sqrt(a1^2 alpha1^4 + ...), the wedge norm
  double speed;   // ds~/dt = a1 a2 alpha1 alpha2 |alpha1^2 - alpha2^2| / lambda
  double k1;
  double k2;
  double k3;
};

IndicatrixInvariants indicatrix_invariants(const CCCSpec& spec);

struct Theorem2Item {
  int id = 0;
  std::string name;
  bool pass = false;
  double residual = 0.0;
};

struct Theorem2Report {
  CCCSpec spec;
  double tolerance = 0.0;
  double indicatrix_speed_floor = 0.0;
  std::array<Theorem2Item, 5> items;
  bool all_pass = false;
};

/// Checks, numerically and against the stated tolerance: (1) the indicatrix
/// closes and stays regular, (2) it lies in an affine R^4 (two constant
/// coordinates), (3) its curvatures are constant, (4) its total first
/// curvature equals the base curve's total mixed curvature, (5) its own
/// total mixed curvature is sqrt(2) times that value.
Theorem2Report verify_theorem2(const CCCSpec& spec, double tol,
                               const QuadratureConfig& config = {});

/// Two-frequency curve constants (a1, alpha1, a2, alpha2); the normal form
/// every iterate of the indicatrix transform stays inside.
struct TwoFrequencyForm {
  double a1, alpha1, a2, alpha2;

  double speed() const;
  double wedge_norm() const;  // lambda
  /// sqrt(k1^2+k2^2+k3^2) * ds/dt = sqrt(alpha1^2 + alpha2^2), constant in t.
  double mixed_curvature_density() const;
};

/// One indicatrix step in normal form: the new frequency pair is
/// (alpha1 + alpha2, |alpha1 - alpha2|) with the amplitudes fixed by the
/// product-to-sum expansion of the wedge. Throws NotTransformableError when
/// the input is degenerate (coinciding frequencies or a vanishing amplitude,
/// i.e. k2 = 0).
TwoFrequencyForm indicatrix_normal_form(const TwoFrequencyForm& form);

struct IterationStep {
  int step = 0;   // 0 is the base curve
  int wind1 = 0;  // winding pair over the fixed traversal period;
  int wind2 = 0;  // maps to (wind1 + wind2, |wind1 - wind2|) at each step
  TwoFrequencyForm form{};
  double value = 0.0;                 // total mixed curvature over the traversal period
  double minimal_period_value = 0.0;  // same integral over the iterate's own minimal period
  double ratio = 0.0;                 // value / previous value (0 for the base row)
};

struct IterationReport {
  std::vector<IterationStep> steps;
  bool halted = false;
  std::string halt_reason;
};

/// Iterates the indicatrix transform `steps` times from a constant-curvature
/// base curve, recording the functional over the base curve's traversal
/// period at every step. Consecutive values grow by exactly sqrt(2).
IterationReport iterate_transform(const CCCSpec& spec, int steps);

}  // namespace curvekit
