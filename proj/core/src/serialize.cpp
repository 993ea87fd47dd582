#include "curvekit/serialize.hpp"

namespace curvekit {

void to_json(json& j, const CCCSpec& spec) {
  j = json{{"a1", spec.a1}, {"a2", spec.a2}, {"m1", spec.m1}, {"m2", spec.m2},
           {"scale", spec.scale}};
}

void from_json(const json& j, CCCSpec& spec) {
  j.at("a1").get_to(spec.a1);
  j.at("a2").get_to(spec.a2);
  j.at("m1").get_to(spec.m1);
  j.at("m2").get_to(spec.m2);
  spec.scale = j.value("scale", 1.0);
}

void to_json(json& j, const EvenCCCSpec& spec) {
  j = json{{"amplitudes", spec.amplitudes}, {"m", spec.m}, {"scale", spec.scale}};
}

void from_json(const json& j, EvenCCCSpec& spec) {
  j.at("amplitudes").get_to(spec.amplitudes);
  j.at("m").get_to(spec.m);
  spec.scale = j.value("scale", 1.0);
}

void to_json(json& j, const FourierCurveSpec& spec) {
  j = json{{"harmonics", spec.harmonics},
           {"cos", spec.cos_coeffs},
           {"sin", spec.sin_coeffs}};
}

void from_json(const json& j, FourierCurveSpec& spec) {
  j.at("harmonics").get_to(spec.harmonics);
  j.at("cos").get_to(spec.cos_coeffs);
  j.at("sin").get_to(spec.sin_coeffs);
}

void to_json(json& j, const ExplorerConfig& config) {
  j = json{{"harmonics", config.harmonics},
           {"budget", config.budget},
           {"seed", config.seed},
           {"penalty_weight_k1", config.penalty_weight_k1},
           {"penalty_weight_k2", config.penalty_weight_k2},
           {"floor_k1", config.floor_k1},
           {"floor_k2", config.floor_k2},
           {"quadrature_samples", config.quadrature_samples},
           {"simplex_step", config.simplex_step},
           {"shrink_tol", config.shrink_tol},
           {"max_restarts", config.max_restarts},
           {"violation_margin", config.violation_margin}};
}

void from_json(const json& j, ExplorerConfig& config) {
  ExplorerConfig defaults;
  config.harmonics = j.value("harmonics", defaults.harmonics);
  config.budget = j.value("budget", defaults.budget);
  config.seed = j.value("seed", defaults.seed);
  config.penalty_weight_k1 = j.value("penalty_weight_k1", defaults.penalty_weight_k1);
  config.penalty_weight_k2 = j.value("penalty_weight_k2", defaults.penalty_weight_k2);
  config.floor_k1 = j.value("floor_k1", defaults.floor_k1);
  config.floor_k2 = j.value("floor_k2", defaults.floor_k2);
  config.quadrature_samples = j.value("quadrature_samples", defaults.quadrature_samples);
  config.simplex_step = j.value("simplex_step", defaults.simplex_step);
  config.shrink_tol = j.value("shrink_tol", defaults.shrink_tol);
  config.max_restarts = j.value("max_restarts", defaults.max_restarts);
  config.violation_margin = j.value("violation_margin", defaults.violation_margin);
}

void to_json(json& j, const IndicatrixInvariants& inv) {
  j = json{{"lambda", inv.lambda}, {"speed", inv.speed}, {"k1", inv.k1}, {"k2", inv.k2},
           {"k3", inv.k3}};
}

void to_json(json& j, const Theorem2Item& item) {
  j = json{{"id", item.id}, {"name", item.name}, {"pass", item.pass},
           {"residual", item.residual}};
}

void to_json(json& j, const Theorem2Report& report) {
  j = json{{"spec", report.spec},
           {"tolerance", report.tolerance},
           {"indicatrix_speed_floor", report.indicatrix_speed_floor},
           {"items", report.items},
           {"all_pass", report.all_pass}};
}

void to_json(json& j, const InequalityVerdict& v) {
  j = json{{"id", v.id}, {"applicable", v.applicable}, {"bound", v.bound}};
  if (v.applicable) {
    j["value"] = v.value;
    j["margin"] = v.margin;
    j["satisfied"] = v.satisfied;
  } else {
    j["inapplicable_reason"] = v.inapplicable_reason;
  }
}

void to_json(json& j, const FunctionalReport& report) {
  j = json{{"provenance", report.provenance},
           {"dimension", report.dimension},
           {"period", report.period},
           {"tolerance", report.tolerance},
           {"curvature_floors", report.curvature_floors},
           {"verdicts", report.verdicts},
           {"all_satisfied", report.all_satisfied()}};
}

void to_json(json& j, const MinimalValueResult& result) {
  j = json{{"value", result.value}, {"witnesses", result.witnesses}};
}

void to_json(json& j, const TwoFrequencyForm& form) {
  j = json{{"a1", form.a1}, {"alpha1", form.alpha1}, {"a2", form.a2}, {"alpha2", form.alpha2}};
}

void to_json(json& j, const IterationStep& step) {
  j = json{{"step", step.step},
           {"wind1", step.wind1},
           {"wind2", step.wind2},
           {"form", step.form},
           {"value", step.value},
           {"minimal_period_value", step.minimal_period_value},
           {"ratio", step.ratio}};
}

void to_json(json& j, const IterationReport& report) {
  j = json{{"steps", report.steps}, {"halted", report.halted}};
  if (report.halted) j["halt_reason"] = report.halt_reason;
}

void to_json(json& j, const TraceEntry& entry) {
  j = json{{"evaluation", entry.evaluation}, {"best", entry.best}, {"penalty", entry.penalty},
           {"functional", entry.functional}};
}

void to_json(json& j, const ExplorationResult& result) {
  j = json{{"best_value", result.best_value},
           {"best_penalized", result.best_penalized},
           {"best_spec", result.best_spec},
           {"min_k1", result.min_k1},
           {"min_k2", result.min_k2},
           {"converged", result.converged},
           {"evaluations", result.evaluations},
           {"margin_vs_strong_bound", result.margin_vs_strong_bound},
           {"margin_vs_fenchel", result.margin_vs_fenchel},
           {"conjecture_violated", result.conjecture_violated},
           {"revalidated_value", result.revalidated_value},
           {"revalidation_deviation", result.revalidation_deviation}};
  j["winding12"] = result.winding12 ? json(*result.winding12) : json(nullptr);
  j["winding34"] = result.winding34 ? json(*result.winding34) : json(nullptr);
}

}  // namespace curvekit
