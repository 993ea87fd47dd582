#include "curvekit/functionals.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "curvekit/errors.hpp"
#include "curvekit/frenet.hpp"

namespace curvekit {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
const double kStrongBound = 2.0 * std::sqrt(5.0) * std::numbers::pi;

// Curvatures k_1..k_levels-1 at t, padded with zeros beyond a degeneracy
// (the padded entries are only consumed where a zero limit is meaningful).
std::vector<double> curvatures_padded(const ParametricCurve& curve, double t, int levels) {
  const FrenetApparatus fa = frenet_at(curve, t, levels);
  std::vector<double> ks = fa.curvatures;
  ks.resize(levels - 1, 0.0);
  return ks;
}
}  // namespace

double total_first_curvature(const ParametricCurve& curve, const QuadratureConfig& config) {
  return integrate_scalar_along(
      curve,
      [&curve](double t) {
        const FrenetApparatus fa = frenet_at(curve, t, 2);
        return fa.curvatures.empty() ? 0.0 : fa.curvatures[0];
      },
      config);
}

FunctionalValue mixed_curvature_functional(const ParametricCurve& curve, int j,
                                           const QuadratureConfig& config) {
  const int n = curve.dimension();
  if (j < 2 || j > n - 1) {
    throw SpecValidationError("mixed curvature index j must satisfy 2 <= j <= n-1");
  }
  const int levels = std::min(j + 2, n);

  FunctionalValue out;
  out.floors.assign(j, std::numeric_limits<double>::infinity());
  for (int i = 0; i < config.samples; ++i) {
    const double t = curve.period() * i / config.samples;
    const std::vector<double> ks = curvatures_padded(curve, t, levels);
    for (int c = 0; c < j; ++c) out.floors[c] = std::min(out.floors[c], ks[c]);
  }
  for (int c = 0; c < j; ++c) {
    if (out.floors[c] <= kFunctionalCurvatureFloor) {
      std::ostringstream reason;
      reason << "k" << c + 1 << " floor " << out.floors[c] << " below "
             << kFunctionalCurvatureFloor;
      out.reason = reason.str();
      return out;
    }
  }

  out.applicable = true;
  out.value = integrate_scalar_along(
      curve,
      [&curve, j, levels](double t) {
        const std::vector<double> ks = curvatures_padded(curve, t, levels);
        const double a = ks[j - 2];
        const double b = ks[j - 1];
        const double c = j <= levels - 2 ? ks[j] : 0.0;  // k_{j+1}, absent at j = n-1
        return std::sqrt(a * a + b * b + c * c);
      },
      config);
  return out;
}

bool FunctionalReport::all_satisfied() const {
  for (const auto& v : verdicts) {
    if (v.applicable && !v.satisfied) return false;
  }
  return true;
}

FunctionalReport inequality_report(const ParametricCurve& curve, const QuadratureConfig& config,
                                   double tol) {
  const int n = curve.dimension();
  FunctionalReport rep;
  rep.provenance = curve.label();
  rep.dimension = n;
  rep.period = curve.period();
  rep.tolerance = tol;

  rep.curvature_floors.assign(n - 1, std::numeric_limits<double>::infinity());
  for (int i = 0; i < config.samples; ++i) {
    const double t = curve.period() * i / config.samples;
    const std::vector<double> ks = curvatures_padded(curve, t, n);
    for (int c = 0; c < n - 1; ++c) rep.curvature_floors[c] = std::min(rep.curvature_floors[c], ks[c]);
  }

  auto push = [&rep, tol](std::string id, const FunctionalValue& fv, double bound) {
    InequalityVerdict v;
    v.id = std::move(id);
    v.bound = bound;
    v.applicable = fv.applicable;
    if (fv.applicable) {
      v.value = fv.value;
      v.margin = fv.value - bound;
      v.satisfied = v.margin > -tol;
    } else {
      v.inapplicable_reason = fv.reason;
    }
    rep.verdicts.push_back(std::move(v));
  };

  FunctionalValue fenchel;
  fenchel.applicable = true;
  fenchel.value = total_first_curvature(curve, config);
  push("fenchel", fenchel, kTwoPi);

  if (n == 4) {
    const FunctionalValue mixed2 = mixed_curvature_functional(curve, 2, config);
    push("mixed_j2", mixed2, kTwoPi);
    push("mixed_j3", mixed_curvature_functional(curve, 3, config), kTwoPi);
    push("mixed_j2_strong", mixed2, kStrongBound);
  }
  return rep;
}

std::string functional_report_csv_header() {
  return "provenance,dimension,period,min_k1,min_k2,min_k3,fenchel_value,fenchel_margin,"
         "mixed_j2_value,mixed_j2_margin,mixed_j3_value,mixed_j3_margin,"
         "mixed_j2_strong_value,mixed_j2_strong_margin,all_satisfied";
}

std::string functional_report_csv_row(const FunctionalReport& report) {
  std::ostringstream row;
  row.precision(17);
  row << '"' << report.provenance << '"' << ',' << report.dimension << ',' << report.period;
  for (int c = 0; c < 3; ++c) {
    row << ',';
    if (c < static_cast<int>(report.curvature_floors.size())) row << report.curvature_floors[c];
  }
  for (const char* id : {"fenchel", "mixed_j2", "mixed_j3", "mixed_j2_strong"}) {
    bool found = false;
    for (const auto& v : report.verdicts) {
      if (v.id == id) {
        found = true;
        row << ',';
        if (v.applicable) row << v.value;
        row << ',';
        if (v.applicable) row << v.margin;
      }
    }
    if (!found) row << ",,";
  }
  row << ',' << (report.all_satisfied() ? 1 : 0);
  return row.str();
}

}  // namespace curvekit
