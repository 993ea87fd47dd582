#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curvekit/fourier.hpp"

namespace curvekit {

struct ExplorerConfig {
  int harmonics = 4;
  int budget = 2000;  // objective evaluations
  std::uint64_t seed = 0;
  double penalty_weight_k1 = 1e4;
  double penalty_weight_k2 = 1e4;
  double floor_k1 = 1e-3;
  double floor_k2 = 1e-3;
  int quadrature_samples = 512;  // even; Simpson on the periodic grid
  double simplex_step = 0.1;
  double shrink_tol = 1e-7;    // simplex diameter triggering a restart
  int max_restarts = 8;
  double violation_margin = 1e-2;  // feasible best below bound - margin is a finding

  void validate() const;
};

struct ObjectiveBreakdown {
  bool finite = false;  // false: rejected candidate (degenerate frame / NaN)
  double functional = 0.0;
  double penalty = 0.0;
  double total = 0.0;  // functional + penalty, +inf when not finite
  double min_k1 = 0.0;
  double min_k2 = 0.0;
};

/// Penalized objective on an N-sample grid: the total mixed curvature
/// integral plus quadratic penalties on violated k1/k2 floors. Candidates
/// whose Frenet data cannot be evaluated come back non-finite.
ObjectiveBreakdown penalized_objective(const FourierCurveSpec& spec, const ExplorerConfig& config);

struct TraceEntry {
  int evaluation = 0;   // objective evaluations consumed so far
  double best = 0.0;    // best penalized objective so far (nonincreasing)
  double penalty = 0.0;
  double functional = 0.0;
};

struct ExplorationResult {
  double best_value = 0.0;      // functional at the best point
  double best_penalized = 0.0;
  FourierCurveSpec best_spec;
  double min_k1 = 0.0;
  double min_k2 = 0.0;
  bool converged = false;  // false when the budget ran out mid-search
  int evaluations = 0;
  std::vector<TraceEntry> trace;
  double margin_vs_strong_bound = 0.0;  // best_value - 2*sqrt(5)*pi
  double margin_vs_fenchel = 0.0;       // best_value - 2*pi
  bool conjecture_violated = false;     // feasible point below the strong bound
  std::optional<int> winding12;  // winding of (x1,x2) about 0, when defined
  std::optional<int> winding34;
  double revalidated_value = 0.0;  // functional recomputed at doubled resolution
  double revalidation_deviation = 0.0;
};

/// Derivative-free minimization (Nelder-Mead with seeded restarts) of the
/// penalized objective over the Fourier coefficient space. Deterministic for
/// a fixed config and seed. The result always comes back, flagged
/// not-converged when the budget is exhausted.
ExplorationResult minimize_functional(const FourierCurveSpec& initial,
                                      const ExplorerConfig& config);

}  // namespace curvekit
