#include "curvekit/grassmann.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

#include "curvekit/errors.hpp"
#include "curvekit/frenet.hpp"
#include "curvekit/jet.hpp"

namespace curvekit {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Index pairs of the component order (12, 13, 14, 23, 24, 34), 0-based.
constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
}  // namespace

Vector6 wedge2(const Eigen::Vector4d& u, const Eigen::Vector4d& v) {
  Vector6 w;
  for (int k = 0; k < 6; ++k) {
    const int i = kPairs[k][0], j = kPairs[k][1];
    w[k] = u[i] * v[j] - u[j] * v[i];
  }
  return w;
}

PluckerPoint plucker_normalize(const Vector6& w) {
  const double n = w.norm();
  if (n <= kWedgeFloor) {
    throw DegeneratePlaneError("wedge norm " + std::to_string(n) +
                               " below floor: osculating plane degenerates");
  }
  return PluckerPoint{w / n};
}

namespace {

// Indicatrix of the map t -> x(t) evaluated through truncated Taylor series:
// the jet of [x' ^ x''] / |x' ^ x''| about t, to the requested order.
VectorJet indicatrix_jet(const ParametricCurve& curve, double t, int order) {
  const VectorJet u = curve_jet(curve, t, 1, order);
  const VectorJet v = curve_jet(curve, t, 2, order);
  VectorJet w(6);
  for (int k = 0; k < 6; ++k) {
    const int i = kPairs[k][0], j = kPairs[k][1];
    w[k] = u[i] * v[j] - u[j] * v[i];
  }
  const Jet norm2 = dot(w, w);
  if (!(norm2.value() > kWedgeFloor * kWedgeFloor)) {
    throw DegeneratePlaneError("wedge norm below floor while evaluating indicatrix at t = " +
                               std::to_string(t));
  }
  const Jet norm = norm2.sqrt();
  for (int k = 0; k < 6; ++k) w[k] = w[k] / norm;
  return w;
}

}  // namespace

ParametricCurve osculating_indicatrix(const ParametricCurve& curve, double curvature_floor,
                                      int floor_samples) {
  if (curve.dimension() != 4) {
    throw SpecValidationError("osculating indicatrix requires a curve in R^4");
  }
  double floor_k1 = std::numeric_limits<double>::infinity();
  double floor_k2 = floor_k1;
  for (int i = 0; i < floor_samples; ++i) {
    const double t = curve.period() * i / floor_samples;
    const FrenetApparatus fa = frenet_at(curve, t, 3);
    const double k1 = fa.curvatures.size() > 0 ? fa.curvatures[0] : 0.0;
    const double k2 = fa.curvatures.size() > 1 ? fa.curvatures[1] : 0.0;
    floor_k1 = std::min(floor_k1, k1);
    floor_k2 = std::min(floor_k2, k2);
  }
  if (floor_k1 <= curvature_floor || floor_k2 <= curvature_floor) {
    std::ostringstream msg;
    msg << "curve is not transformable: min k1 = " << floor_k1 << ", min k2 = " << floor_k2
        << " (floor " << curvature_floor << ")";
    throw NotTransformableError(msg.str());
  }

  const std::string label = curve.label() + "|indicatrix";
  if (curve.analytic_derivatives()) {
    auto deriv = [curve](double t, int order) -> Vector {
      const VectorJet jet = indicatrix_jet(curve, t, order);
      Vector d(6);
      for (int k = 0; k < 6; ++k) d[k] = jet[k].derivative(order);
      return d;
    };
    auto pos = [curve](double t) -> Vector {
      const VectorJet jet = indicatrix_jet(curve, t, 0);
      Vector p(6);
      for (int k = 0; k < 6; ++k) p[k] = jet[k].value();
      return p;
    };
    return ParametricCurve::analytic(6, curve.period(), pos, deriv, label);
  }
  auto pos = [curve](double t) -> Vector {
    const Eigen::Vector4d u = curve.derivative(t, 1);
    const Eigen::Vector4d v = curve.derivative(t, 2);
    return plucker_normalize(wedge2(u, v)).p;
  };
  return ParametricCurve::finite_difference(6, curve.period(), pos, {}, label);
}

Vector6 indicatrix_closed_form(const CCCSpec& spec, double t) {
  spec.validate();
  const double a1 = spec.a1, a2 = spec.a2;
  const double w1 = spec.alpha1(), w2 = spec.alpha2();
  const double S = a1 * a1 * w1 * w1 + a2 * a2 * w2 * w2;
  const double R = a1 * a1 * w1 * w1 * w1 * w1 + a2 * a2 * w2 * w2 * w2 * w2;
  const double lambda = std::sqrt(S) * std::sqrt(R);
  const double A = a1 * a2 * w1 * w2;
  const double c1 = std::cos(w1 * t), s1 = std::sin(w1 * t);
  const double c2 = std::cos(w2 * t), s2 = std::sin(w2 * t);
  Vector6 p;
  p[0] = a1 * a1 * w1 * w1 * w1;
  p[1] = -A * (w1 * c1 * s2 - w2 * s1 * c2);
  p[2] = A * (w1 * c1 * c2 + w2 * s1 * s2);
  p[3] = -A * (w1 * s1 * s2 + w2 * c1 * c2);
  p[4] = A * (w1 * s1 * c2 - w2 * c1 * s2);
  p[5] = a2 * a2 * w2 * w2 * w2;
  return p / lambda;
}

IndicatrixInvariants indicatrix_invariants(const CCCSpec& spec) {
  spec.validate();
  const double a1 = spec.a1, a2 = spec.a2;
  const double w1 = spec.alpha1(), w2 = spec.alpha2();
  const double S = a1 * a1 * w1 * w1 + a2 * a2 * w2 * w2;
  const double R = a1 * a1 * w1 * w1 * w1 * w1 + a2 * a2 * w2 * w2 * w2 * w2;
  const double lambda = std::sqrt(S) * std::sqrt(R);
  const double A = a1 * a2 * w1 * w2;
  const double gap = std::abs(w1 * w1 - w2 * w2);
  const double sum = std::sqrt(w1 * w1 + w2 * w2);
  IndicatrixInvariants inv;
  inv.lambda = lambda;
  inv.speed = A * gap / lambda;
  inv.k1 = lambda * sum / (A * gap);
  inv.k2 = 2.0 * lambda / (a1 * a2 * gap * sum);
  inv.k3 = lambda / (A * sum);
  return inv;
}

Theorem2Report verify_theorem2(const CCCSpec& spec, double tol, const QuadratureConfig& config) {
  spec.validate();
  Theorem2Report rep;
  rep.spec = spec;
  rep.tolerance = tol;

  const ParametricCurve base = make_ccc(spec);
  const ParametricCurve ind = osculating_indicatrix(base);
  const double T = base.period();
  constexpr int kSamples = 256;

  // 1) smooth closed curve: closure residual and speed floor.
  double closure = 0.0;
  for (int i = 0; i < 16; ++i) {
    const double t = T * i / 16;
    closure = std::max(closure,
                       (ind.position(t + T) - ind.position(t)).lpNorm<Eigen::Infinity>());
  }
  double speed_floor = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kSamples; ++i) {
    speed_floor = std::min(speed_floor, ind.speed(T * i / kSamples));
  }
  rep.indicatrix_speed_floor = speed_floor;
  rep.items[0] = {1, "closed_and_regular", closure < tol && speed_floor > kTransformCurvatureFloor,
                  closure};

  // 2) two constant coordinates (affine R^4 containment).
  Eigen::ArrayXd first(kSamples), last(kSamples);
  for (int i = 0; i < kSamples; ++i) {
    const Vector p = ind.position(T * i / kSamples);
    first[i] = p[0];
    last[i] = p[5];
  }
  const double affine_residual =
      std::max(std::sqrt((first - first.mean()).square().mean()),
               std::sqrt((last - last.mean()).square().mean()));
  rep.items[1] = {2, "affine_plane", affine_residual < tol, affine_residual};

  // 3) constant curvatures of the indicatrix.
  Eigen::ArrayXXd ks(kSamples, 3);
  for (int i = 0; i < kSamples; ++i) {
    const FrenetApparatus fa = frenet_at(ind, T * i / kSamples, 4);
    for (int c = 0; c < 3; ++c) ks(i, c) = fa.curvatures[c];
  }
  double constancy = 0.0;
  for (int c = 0; c < 3; ++c) {
    const Eigen::ArrayXd col = ks.col(c);
    constancy = std::max(constancy, std::sqrt((col - col.mean()).square().mean()));
  }
  rep.items[2] = {3, "constant_curvatures", constancy < tol, constancy};

  // 4) total first curvature of the indicatrix equals the base curve's total
  // mixed curvature (both by quadrature over the traversal period).
  const double base_mixed = integrate_scalar_along(
      base,
      [&base](double t) {
        const FrenetApparatus fa = frenet_at(base, t, 4);
        return std::sqrt(fa.curvatures[0] * fa.curvatures[0] +
                         fa.curvatures[1] * fa.curvatures[1] +
                         fa.curvatures[2] * fa.curvatures[2]);
      },
      config);
  const double ind_first = integrate_scalar_along(
      ind, [&ind](double t) { return frenet_at(ind, t, 2).curvatures[0]; }, config);
  rep.items[3] = {4, "total_first_curvature_transfer", std::abs(ind_first - base_mixed) < tol,
                  std::abs(ind_first - base_mixed)};

  // 5) total mixed curvature of the indicatrix is sqrt(2) times the base value.
  const double ind_mixed = integrate_scalar_along(
      ind,
      [&ind](double t) {
        const FrenetApparatus fa = frenet_at(ind, t, 4);
        return std::sqrt(fa.curvatures[0] * fa.curvatures[0] +
                         fa.curvatures[1] * fa.curvatures[1] +
                         fa.curvatures[2] * fa.curvatures[2]);
      },
      config);
  const double target = std::numbers::sqrt2 * base_mixed;
  rep.items[4] = {5, "mixed_curvature_scaling", std::abs(ind_mixed - target) < tol,
                  std::abs(ind_mixed - target)};

  rep.all_pass = true;
  for (const auto& item : rep.items) rep.all_pass = rep.all_pass && item.pass;
  return rep;
}

double TwoFrequencyForm::speed() const {
  return std::sqrt(a1 * a1 * alpha1 * alpha1 + a2 * a2 * alpha2 * alpha2);
}

double TwoFrequencyForm::wedge_norm() const {
  const double S = a1 * a1 * alpha1 * alpha1 + a2 * a2 * alpha2 * alpha2;
  const double R =
      a1 * a1 * std::pow(alpha1, 4) + a2 * a2 * std::pow(alpha2, 4);
  return std::sqrt(S) * std::sqrt(R);
}

double TwoFrequencyForm::mixed_curvature_density() const {
  return std::sqrt(alpha1 * alpha1 + alpha2 * alpha2);
}

TwoFrequencyForm indicatrix_normal_form(const TwoFrequencyForm& form) {
  const double A = form.a1 * form.a2 * form.alpha1 * form.alpha2;
  const double diff = std::abs(form.alpha1 - form.alpha2);
  const double sum = form.alpha1 + form.alpha2;
  const double lambda = form.wedge_norm();
  // k2 of the input is proportional to A * diff * sum; at zero the image
  // degenerates to a point of G(2,4).
  if (!(A * diff * sum > kTransformCurvatureFloor)) {
    throw NotTransformableError("indicatrix step degenerate: k2 floor violated");
  }
  TwoFrequencyForm next;
  next.alpha1 = diff;
  next.a1 = A * sum / (std::numbers::sqrt2 * lambda);
  next.alpha2 = sum;
  next.a2 = A * diff / (std::numbers::sqrt2 * lambda);
  return next;
}

IterationReport iterate_transform(const CCCSpec& spec, int steps) {
  spec.validate();
  if (steps < 1) throw SpecValidationError("iteration needs steps >= 1");

  const double T = minimal_period(spec);
  IterationReport rep;

  TwoFrequencyForm form{spec.a1, spec.alpha1(), spec.a2, spec.alpha2()};
  int w1 = spec.m1, w2 = spec.m2;
  double prev = 0.0;
  for (int step = 0; step <= steps; ++step) {
    if (step > 0) {
      try {
        form = indicatrix_normal_form(form);
      } catch (const NotTransformableError& e) {
        rep.halted = true;
        rep.halt_reason = "step " + std::to_string(step) + ": " + e.what();
        return rep;
      }
      const int s = w1 + w2, d = std::abs(w1 - w2);
      w1 = s;
      w2 = d;
    }
    IterationStep rec;
    rec.step = step;
    rec.wind1 = w1;
    rec.wind2 = w2;
    rec.form = form;
    rec.value = form.mixed_curvature_density() * T;
    rec.minimal_period_value = rec.value / std::gcd(w1, w2);
    rec.ratio = step == 0 ? 0.0 : rec.value / prev;
    prev = rec.value;
    rep.steps.push_back(rec);
  }
  return rep;
}

}  // namespace curvekit
