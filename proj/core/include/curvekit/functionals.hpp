#pragma once

#include <string>
#include <vector>

#include "curvekit/parametric_curve.hpp"
#include "curvekit/quadrature.hpp"

namespace curvekit {

/// Curvature floor below which a curvature-hypothesis inequality is reported
/// inapplicable rather than evaluated.
inline constexpr double kFunctionalCurvatureFloor = 1e-8;

/// Total first curvature over one period: integral of k1 ds.
double total_first_curvature(const ParametricCurve& curve, const QuadratureConfig& config = {});

struct FunctionalValue {
  bool applicable = false;
  std::string reason;           // set when inapplicable: the violated floor
  double value = 0.0;           // valid only when applicable
  std::vector<double> floors;   // min over samples of k_1 .. k_j
};

/// Mixed curvature functional: integral of sqrt(k_{j-1}^2 + k_j^2 + k_{j+1}^2) ds
/// over one period, with k_n taken as 0 when j+1 reaches the ambient
/// dimension. Requires 2 <= j <= n-1 and positive floors on k_1..k_j;
/// violated floors yield an inapplicable value, not an error.
FunctionalValue mixed_curvature_functional(const ParametricCurve& curve, int j,
                                           const QuadratureConfig& config = {});

struct InequalityVerdict {
  std::string id;      // "fenchel", "mixed_j2", "mixed_j3", "mixed_j2_strong"
  bool applicable = false;
  std::string inapplicable_reason;
  double value = 0.0;
  double bound = 0.0;
  double margin = 0.0;  // value - bound
  bool satisfied = false;
};

struct FunctionalReport {
  std::string provenance;  // curve label
  int dimension = 0;
  double period = 0.0;
  double tolerance = 0.0;
  std::vector<double> curvature_floors;  // min over samples of k_1 .. k_{n-1}
  std::vector<InequalityVerdict> verdicts;

  bool all_satisfied() const;
};

/// Evaluates the total-curvature inequalities applicable to the curve:
/// the Fenchel bound (2*pi) on every closed curve, and for curves in R^4
/// the mixed-curvature bounds 2*pi (j = 2 and j = 3) and 2*sqrt(5)*pi
/// (j = 2, the constant-curvature optimum). Vanishing required curvatures
/// mark an inequality inapplicable; that is data, not an error.
FunctionalReport inequality_report(const ParametricCurve& curve,
                                   const QuadratureConfig& config = {}, double tol = 1e-9);

/// One-row CSV rendering for batch tables.
std::string functional_report_csv_header();
std::string functional_report_csv_row(const FunctionalReport& report);

}  // namespace curvekit
