#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "curvekit/ccc.hpp"
#include "curvekit/parametric_curve.hpp"

namespace curvekit {

/// Closed curve in R^4 given by trigonometric polynomials with period 2*pi:
///
///   x_i(t) = sum_h c[i][h-1] cos(h t) + d[i][h-1] sin(h t),  h = 1..H.
///
/// Closure is structural, so the explorer can move coefficients freely.
struct FourierCurveSpec {
  int harmonics = 0;
  std::array<std::vector<double>, 4> cos_coeffs;
  std::array<std::vector<double>, 4> sin_coeffs;

  static FourierCurveSpec zero(int harmonics);
  void validate() const;

  int parameter_count() const { return 8 * harmonics; }
  Eigen::VectorXd pack() const;
  static FourierCurveSpec unpack(const Eigen::VectorXd& params, int harmonics);
};

/// Speed floor below which a Fourier curve is rejected as irregular.
inline constexpr double kFourierSpeedFloor = 1e-6;

/// Builds the curve with analytic derivatives of every order. With
/// check_regularity set the speed is sampled and IrregularCurveError thrown
/// below kFourierSpeedFloor.
ParametricCurve make_fourier_curve(const FourierCurveSpec& spec, bool check_regularity = true);

/// Exact embedding of a constant-curvature spec (scale 1, so the period is
/// 2*pi) into the Fourier space with H = max(m1, m2).
FourierCurveSpec fourier_embedding(const CCCSpec& spec);

/// Zero-pads a spec into a larger harmonic space.
FourierCurveSpec lifted_to(const FourierCurveSpec& spec, int harmonics);

/// Adds an independent uniform [-magnitude, magnitude] draw to every
/// coefficient; deterministic in the seed.
FourierCurveSpec perturbed(const FourierCurveSpec& spec, std::uint64_t seed, double magnitude);

}  // namespace curvekit
