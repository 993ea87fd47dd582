#include "curvekit/quadrature.hpp"

#include <array>
#include <cmath>

#include "curvekit/errors.hpp"

namespace curvekit {

namespace {

double simpson(const std::function<double(double)>& f, double t0, double t1, int n) {
  const double h = (t1 - t0) / n;
  double acc = f(t0) + f(t1);
  for (int i = 1; i < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(t0 + i * h);
  return acc * h / 3.0;
}

// 5-point Gauss-Legendre nodes and weights on [-1, 1].
constexpr std::array<double, 5> kGlNodes = {-0.9061798459386639928, -0.5384693101056830910, 0.0,
                                            0.5384693101056830910, 0.9061798459386639928};
constexpr std::array<double, 5> kGlWeights = {0.2369268850561890875, 0.4786286704993664680,
                                              0.5688888888888888889, 0.4786286704993664680,
                                              0.2369268850561890875};

double gauss_legendre(const std::function<double(double)>& f, double t0, double t1, int samples) {
  const int panels = std::max(1, samples / 5);
  const double w = (t1 - t0) / panels;
  double acc = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = t0 + (p + 0.5) * w;
    const double half = 0.5 * w;
    for (int i = 0; i < 5; ++i) acc += kGlWeights[i] * f(mid + half * kGlNodes[i]) * half;
  }
  return acc;
}

double run(const std::function<double(double)>& f, double t0, double t1,
           const QuadratureConfig& q, int samples) {
  if (q.scheme == QuadratureScheme::Simpson) return simpson(f, t0, t1, samples);
  return gauss_legendre(f, t0, t1, samples);
}

}  // namespace

void QuadratureConfig::validate() const {
  if (scheme == QuadratureScheme::Simpson) {
    if (samples < 64 || samples % 2 != 0) {
      throw SpecValidationError("Simpson quadrature needs an even sample count >= 64");
    }
  } else if (samples < 5) {
    throw SpecValidationError("Gauss-Legendre quadrature needs at least 5 samples");
  }
  if (!(fd_step >= 1e-7 && fd_step <= 1e-3)) {
    throw SpecValidationError("fd_step must lie in [1e-7, 1e-3]");
  }
}

double integrate(const std::function<double(double)>& f, double t0, double t1,
                 const QuadratureConfig& config) {
  config.validate();
  if (!(t0 < t1)) throw SpecValidationError("integration interval must have t0 < t1");
  const double coarse = run(f, t0, t1, config, config.samples);
  if (!config.check_convergence) return coarse;
  const double fine = run(f, t0, t1, config, 2 * config.samples);
  const double residual = std::abs(coarse - fine);
  if (!std::isfinite(fine) || residual > config.convergence_tol * std::max(1.0, std::abs(fine))) {
    throw QuadratureError("quadrature did not converge under grid doubling (residual " +
                              std::to_string(residual) + ")",
                          coarse, fine);
  }
  return fine;
}

double arc_length(const ParametricCurve& curve, double t0, double t1,
                  const QuadratureConfig& config) {
  return integrate([&curve](double t) { return curve.speed(t); }, t0, t1, config);
}

double integrate_scalar_along(const ParametricCurve& curve,
                              const std::function<double(double)>& integrand,
                              const QuadratureConfig& config) {
  return integrate(
      [&](double t) {
        const double v = integrand(t) * curve.speed(t);
        if (!std::isfinite(v)) {
          throw NumericDomainError("non-finite integrand at t = " + std::to_string(t));
        }
        return v;
      },
      0.0, curve.period(), config);
}

}  // namespace curvekit
