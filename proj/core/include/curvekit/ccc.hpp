#pragma once

#include <utility>
#include <vector>

#include "curvekit/parametric_curve.hpp"

namespace curvekit {

/// Closed curve of constant curvatures in R^4:
///
///   x(t) = (a1 cos(alpha1 t), a1 sin(alpha1 t), a2 cos(alpha2 t), a2 sin(alpha2 t))
///
/// with alpha_i = scale * m_i for coprime positive integers m1 != m2. The
/// curve lies on the Clifford torus x1^2+x2^2 = a1^2, x3^2+x4^2 = a2^2 and
/// closes with minimal period 2*pi/scale.
struct CCCSpec {
  double a1 = 1.0;
  double a2 = 1.0;
  int m1 = 1;
  int m2 = 2;
  double scale = 1.0;

  double alpha1() const { return scale * m1; }
  double alpha2() const { return scale * m2; }
  /// Throws SpecValidationError naming the violated condition.
  void validate() const;
};

/// Constant speed ds/dt = sqrt(a1^2 alpha1^2 + a2^2 alpha2^2).
double closed_form_speed(const CCCSpec& spec);

struct ClosedFormCurvatures {
  double k1;
  double k2;
  double k3;
};

/// The three constant curvatures in closed form. All strictly positive for a
/// valid spec.
ClosedFormCurvatures closed_form_curvatures(const CCCSpec& spec);

/// Minimal parameter period T = 2*pi*m1/alpha1 = 2*pi*m2/alpha2.
double minimal_period(const CCCSpec& spec);

/// Exact value of the total mixed curvature integral over one period:
/// 2*pi*sqrt(m1^2 + m2^2). Depends on the winding pair only.
double total_mixed_curvature_exact(const CCCSpec& spec);

ParametricCurve make_ccc(const CCCSpec& spec);

/// Raw two-frequency generator without admissibility checks. Shared by
/// make_ccc, the indicatrix iteration, and degenerate-case tests.
ParametricCurve make_torus_curve(double a1, double alpha1, double a2, double alpha2,
                                 double period, std::string label = {});

struct MinimalValueResult {
  double value = 0.0;
  std::vector<std::pair<int, int>> witnesses;
};

/// Minimum of 2*pi*sqrt(m1^2+m2^2) over admissible pairs 1 <= m1, m2 <= bound,
/// m1 != m2, gcd = 1, together with every achieving pair.
MinimalValueResult minimal_admissible_value(int search_bound);

/// The `count` smallest distinct values with their witness pairs, ranked.
std::vector<MinimalValueResult> minimal_admissible_values(int search_bound, int count);

/// Constant-curvature closed curve in R^(2n): n two-frequency blocks with
/// amplitudes a_i and frequencies scale * m_i for pairwise distinct positive
/// integers m_i with overall gcd 1.
struct EvenCCCSpec {
  std::vector<double> amplitudes;
  std::vector<int> m;
  double scale = 1.0;

  int blocks() const { return static_cast<int>(amplitudes.size()); }
  double alpha(int i) const { return scale * m[i]; }
  double period() const;
  void validate() const;
};

ParametricCurve make_even_ccc(const EvenCCCSpec& spec);

}  // namespace curvekit
