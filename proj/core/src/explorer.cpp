#include "curvekit/explorer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "curvekit/errors.hpp"
#include "curvekit/frenet.hpp"

namespace curvekit {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const double kStrongBound = 2.0 * std::sqrt(5.0) * std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

double quadratic_penalty(double weight, double floor, double min_value) {
  const double gap = std::max(0.0, floor - min_value);
  return weight * gap * gap;
}

// Winding number of the (x_a, x_b) projection about the origin, by angle
// unwrapping over a uniform grid; empty when the projection comes too close
// to the origin for the count to be trustworthy.
std::optional<int> winding_of_projection(const ParametricCurve& curve, int a, int b) {
  constexpr int kSamples = 1024;
  constexpr double kRadiusFloor = 1e-3;
  double total = 0.0;
  Vector p = curve.position(0.0);
  double prev = std::atan2(p[b], p[a]);
  for (int i = 1; i <= kSamples; ++i) {
    p = curve.position(curve.period() * i / kSamples);
    if (std::hypot(p[a], p[b]) < kRadiusFloor) return std::nullopt;
    const double ang = std::atan2(p[b], p[a]);
    double d = ang - prev;
    while (d > std::numbers::pi) d -= kTwoPi;
    while (d < -std::numbers::pi) d += kTwoPi;
    total += d;
    prev = ang;
  }
  return static_cast<int>(std::lround(total / kTwoPi));
}

}  // namespace

void ExplorerConfig::validate() const {
  if (harmonics < 1) throw SpecValidationError("explorer needs harmonics >= 1");
  if (budget < 0) throw SpecValidationError("budget must be nonnegative");
  if (quadrature_samples < 64 || quadrature_samples % 2 != 0) {
    throw SpecValidationError("quadrature_samples must be even and >= 64");
  }
  if (!(simplex_step > 0.0)) throw SpecValidationError("simplex_step must be positive");
}

ObjectiveBreakdown penalized_objective(const FourierCurveSpec& spec,
                                       const ExplorerConfig& config) {
  ObjectiveBreakdown out;
  out.total = kInf;
  try {
    const ParametricCurve curve = make_fourier_curve(spec, /*check_regularity=*/false);
    const int n = config.quadrature_samples;
    const double h = kTwoPi / n;
    double integral = 0.0;
    double min_k1 = kInf, min_k2 = kInf;
    for (int i = 0; i <= n; ++i) {
      const FrenetApparatus fa = frenet_at(curve, i * h, 4);
      // A frame collapse before level 4 leaves the integrand undefined;
      // level-4 collapse means k3 -> 0, which is its continuous limit.
      if (fa.degenerate_level && *fa.degenerate_level <= 3) return out;
      const double k1 = fa.curvatures[0];
      const double k2 = fa.curvatures[1];
      const double k3 = fa.curvatures.size() > 2 ? fa.curvatures[2] : 0.0;
      if (i < n) {
        min_k1 = std::min(min_k1, k1);
        min_k2 = std::min(min_k2, k2);
      }
      const double f = std::sqrt(k1 * k1 + k2 * k2 + k3 * k3) * fa.speed;
      const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
      integral += w * f;
    }
    integral *= h / 3.0;
    if (!std::isfinite(integral)) return out;
    out.finite = true;
    out.functional = integral;
    out.min_k1 = min_k1;
    out.min_k2 = min_k2;
    out.penalty = quadratic_penalty(config.penalty_weight_k1, config.floor_k1, min_k1) +
                  quadratic_penalty(config.penalty_weight_k2, config.floor_k2, min_k2);
    out.total = out.functional + out.penalty;
  } catch (const Error&) {
    // irregular speed, degenerate frame, non-finite values: rejected candidate
  }
  return out;
}

namespace {

struct SearchState {
  const ExplorerConfig& config;
  int evaluations = 0;
  double best_total = kInf;
  ObjectiveBreakdown best_breakdown;
  Eigen::VectorXd best_point;
  std::vector<TraceEntry> trace;

  bool exhausted() const { return evaluations >= config.budget; }

  double score(const Eigen::VectorXd& p) {
    const ObjectiveBreakdown b =
        penalized_objective(FourierCurveSpec::unpack(p, config.harmonics), config);
    ++evaluations;
    if (b.total < best_total) {
      best_total = b.total;
      best_breakdown = b;
      best_point = p;
      trace.push_back({evaluations, b.total, b.penalty, b.functional});
    }
    return b.total;
  }
};

// One Nelder-Mead run from the given start simplex; returns true when the
// simplex shrank below the tolerance (converged) before the budget ran out.
bool nelder_mead(SearchState& state, std::vector<Eigen::VectorXd> simplex) {
  const int d = static_cast<int>(simplex[0].size());
  std::vector<double> values(simplex.size());
  for (size_t i = 0; i < simplex.size(); ++i) {
    if (state.exhausted()) return false;
    values[i] = state.score(simplex[i]);
  }

  constexpr double kReflect = 1.0, kExpand = 2.0, kContract = 0.5, kShrink = 0.5;
  while (!state.exhausted()) {
    std::vector<size_t> order(simplex.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&values](size_t a, size_t b) { return values[a] < values[b]; });

    double diameter = 0.0;
    for (size_t i = 1; i < simplex.size(); ++i) {
      diameter = std::max(diameter, (simplex[order[i]] - simplex[order[0]]).norm());
    }
    if (diameter < state.config.shrink_tol) return true;

    const size_t worst = order.back();
    const size_t second_worst = order[order.size() - 2];
    const size_t best = order[0];

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(d);
    for (size_t i = 0; i + 1 < order.size(); ++i) centroid += simplex[order[i]];
    centroid /= static_cast<double>(simplex.size() - 1);

    const Eigen::VectorXd reflected = centroid + kReflect * (centroid - simplex[worst]);
    const double fr = state.score(reflected);
    if (fr < values[best]) {
      if (state.exhausted()) {
        if (fr < values[worst]) { simplex[worst] = reflected; values[worst] = fr; }
        return false;
      }
      const Eigen::VectorXd expanded = centroid + kExpand * (reflected - centroid);
      const double fe = state.score(expanded);
      if (fe < fr) {
        simplex[worst] = expanded;
        values[worst] = fe;
      } else {
        simplex[worst] = reflected;
        values[worst] = fr;
      }
      continue;
    }
    if (fr < values[second_worst]) {
      simplex[worst] = reflected;
      values[worst] = fr;
      continue;
    }
    if (state.exhausted()) return false;
    const bool outside = fr < values[worst];
    const Eigen::VectorXd contracted =
        outside ? Eigen::VectorXd(centroid + kContract * (reflected - centroid))
                : Eigen::VectorXd(centroid - kContract * (centroid - simplex[worst]));
    const double fc = state.score(contracted);
    if (fc < std::min(fr, values[worst])) {
      simplex[worst] = contracted;
      values[worst] = fc;
      continue;
    }
    // Shrink toward the best vertex.
    for (size_t i = 0; i < simplex.size(); ++i) {
      if (i == best) continue;
      if (state.exhausted()) return false;
      simplex[i] = simplex[best] + kShrink * (simplex[i] - simplex[best]);
      values[i] = state.score(simplex[i]);
    }
  }
  return false;
}

}  // namespace

ExplorationResult minimize_functional(const FourierCurveSpec& initial,
                                      const ExplorerConfig& config) {
  config.validate();
  initial.validate();
  if (initial.harmonics != config.harmonics) {
    throw SpecValidationError("initial spec harmonics must match the config");
  }

  SearchState state{config};
  std::mt19937_64 rng(config.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  const Eigen::VectorXd x0 = initial.pack();
  const int d = static_cast<int>(x0.size());

  // The initial point is always scored so a zero-budget run still reports it.
  {
    const ObjectiveBreakdown b = penalized_objective(initial, config);
    state.best_total = b.total;
    state.best_breakdown = b;
    state.best_point = x0;
    state.trace.push_back({0, b.total, b.penalty, b.functional});
  }

  bool converged = false;
  double step = config.simplex_step;
  for (int restart = 0; restart <= config.max_restarts && !state.exhausted(); ++restart) {
    std::vector<Eigen::VectorXd> simplex;
    simplex.reserve(d + 1);
    Eigen::VectorXd origin = state.best_point;
    if (restart > 0) {
      // Jittered restart around the incumbent; deterministic in the seed.
      for (int i = 0; i < d; ++i) origin[i] += 0.1 * step * gauss(rng);
    }
    simplex.push_back(origin);
    for (int i = 0; i < d; ++i) {
      Eigen::VectorXd v = origin;
      v[i] += step;
      simplex.push_back(v);
    }
    converged = nelder_mead(state, std::move(simplex));
    step *= 0.5;
  }

  ExplorationResult result;
  result.converged = converged;
  result.evaluations = state.evaluations;
  result.trace = std::move(state.trace);
  result.best_spec = FourierCurveSpec::unpack(state.best_point, config.harmonics);
  result.best_penalized = state.best_breakdown.total;
  result.best_value = state.best_breakdown.functional;
  result.min_k1 = state.best_breakdown.min_k1;
  result.min_k2 = state.best_breakdown.min_k2;
  result.margin_vs_strong_bound = result.best_value - kStrongBound;
  result.margin_vs_fenchel = result.best_value - kTwoPi;

  // Re-validate the returned point at doubled grid resolution.
  ExplorerConfig fine = config;
  fine.quadrature_samples = 2 * config.quadrature_samples;
  const ObjectiveBreakdown check = penalized_objective(result.best_spec, fine);
  result.revalidated_value = check.functional;
  result.revalidation_deviation = std::abs(check.functional - result.best_value);

  const bool feasible = state.best_breakdown.finite &&
                        result.min_k1 >= config.floor_k1 && result.min_k2 >= config.floor_k2;
  result.conjecture_violated =
      feasible && result.best_value < kStrongBound - config.violation_margin;

  try {
    const ParametricCurve best = make_fourier_curve(result.best_spec, false);
    result.winding12 = winding_of_projection(best, 0, 1);
    result.winding34 = winding_of_projection(best, 2, 3);
  } catch (const Error&) {
    // windings stay unset for unreadable candidates
  }
  return result;
}

}  // namespace curvekit
