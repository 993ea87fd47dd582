#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>

#include "curvekit/frenet.hpp"
#include "curvekit/functionals.hpp"
#include "curvekit/grassmann.hpp"
#include "curvekit/quadrature.hpp"
#include "output.hpp"

namespace curvekit::cli {

namespace {

json spec_parameters(const SpecOptions& s) {
  return json{{"a1", s.a1}, {"a2", s.a2}, {"m1", s.m1}, {"m2", s.m2}, {"scale", s.scale}};
}

}  // namespace

int cmd_generate(const CommonOptions& common, const SpecOptions& spec_opt) {
  const auto out_dir = resolve_out_dir(common.out_dir);
  Manifest manifest("generate", out_dir);
  manifest.parameters() = spec_parameters(spec_opt);
  manifest.parameters()["samples"] = common.samples;

  const CCCSpec spec = spec_opt.spec();
  const ParametricCurve curve = make_ccc(spec);
  const double T = curve.period();

  CsvWriter csv(manifest.record("generate_samples.csv"));
  csv.row({"t", "x1", "x2", "x3", "x4", "speed", "k1", "k2", "k3"});
  for (int i = 0; i < common.samples; ++i) {
    const double t = T * i / common.samples;
    const Vector x = curve.position(t);
    const FrenetApparatus fa = frenet_at(curve, t, 4);
    csv.row({num(t), num(x[0]), num(x[1]), num(x[2]), num(x[3]), num(fa.speed),
             num(fa.curvatures[0]), num(fa.curvatures[1]), num(fa.curvatures[2])});
  }

  json spec_json = spec;
  spec_json["alpha1"] = spec.alpha1();
  spec_json["alpha2"] = spec.alpha2();
  spec_json["period"] = T;
  write_json_file(manifest.record("generate_spec.json"), spec_json);
  manifest.write();
  return 0;
}

int cmd_frenet(const CommonOptions& common, const SpecOptions& spec_opt,
               const std::string& fourier_path) {
  const auto out_dir = resolve_out_dir(common.out_dir);
  Manifest manifest("frenet", out_dir);
  manifest.parameters()["samples"] = common.samples;

  ParametricCurve curve = [&]() {
    if (!fourier_path.empty()) {
      manifest.parameters()["fourier"] = fourier_path;
      std::ifstream in(fourier_path);
      if (!in) throw Error("cannot read " + fourier_path);
      FourierCurveSpec fs = json::parse(in).get<FourierCurveSpec>();
      return make_fourier_curve(fs);
    }
    manifest.parameters() = spec_parameters(spec_opt);
    manifest.parameters()["samples"] = common.samples;
    return make_ccc(spec_opt.spec());
  }();

  CsvWriter csv(manifest.record("frenet_samples.csv"));
  csv.row({"t", "speed", "k1", "k2", "k3", "orthonormality_residual"});
  for (int i = 0; i < common.samples; ++i) {
    const double t = curve.period() * i / common.samples;
    const FrenetApparatus fa = frenet_at(curve, t, 4);
    std::vector<double> ks = fa.curvatures;
    ks.resize(3, 0.0);
    csv.row({num(t), num(fa.speed), num(ks[0]), num(ks[1]), num(ks[2]),
             num(fa.orthonormality_residual())});
  }
  manifest.write();
  return 0;
}

int cmd_indicatrix(const CommonOptions& common, const SpecOptions& spec_opt) {
  const auto out_dir = resolve_out_dir(common.out_dir);
  Manifest manifest("indicatrix", out_dir);
  manifest.parameters() = spec_parameters(spec_opt);
  manifest.parameters()["samples"] = common.samples;

  const CCCSpec spec = spec_opt.spec();
  const ParametricCurve curve = make_ccc(spec);
  const ParametricCurve ind = osculating_indicatrix(curve);
  const double T = curve.period();

  CsvWriter csv(manifest.record("indicatrix_samples.csv"));
  csv.row({"t", "p12", "p13", "p14", "p23", "p24", "p34", "norm_residual", "quadric_residual"});
  double closed_form_dev = 0.0;
  for (int i = 0; i < common.samples; ++i) {
    const double t = T * i / common.samples;
    const Vector p = ind.position(t);
    const PluckerPoint pp{p};
    closed_form_dev = std::max(
        closed_form_dev,
        (p - Eigen::VectorXd(indicatrix_closed_form(spec, t))).lpNorm<Eigen::Infinity>());
    csv.row({num(t), num(p[0]), num(p[1]), num(p[2]), num(p[3]), num(p[4]), num(p[5]),
             num(pp.norm_residual()), num(std::abs(pp.quadric_residual()))});
  }

  const IndicatrixInvariants inv = indicatrix_invariants(spec);
  double dev_speed = 0.0, dev_k1 = 0.0, dev_k2 = 0.0, dev_k3 = 0.0;
  for (int i = 0; i < 256; ++i) {
    const FrenetApparatus fa = frenet_at(ind, T * i / 256, 4);
    dev_speed = std::max(dev_speed, std::abs(fa.speed - inv.speed));
    dev_k1 = std::max(dev_k1, std::abs(fa.curvatures[0] - inv.k1));
    dev_k2 = std::max(dev_k2, std::abs(fa.curvatures[1] - inv.k2));
    dev_k3 = std::max(dev_k3, std::abs(fa.curvatures[2] - inv.k3));
  }
  json report{{"spec", spec},
              {"invariants", inv},
              {"constant_coordinates",
               {{"p12", spec.a1 * spec.a1 * std::pow(spec.alpha1(), 3) / inv.lambda},
                {"p34", spec.a2 * spec.a2 * std::pow(spec.alpha2(), 3) / inv.lambda}}},
              {"numeric_residuals",
               {{"speed", dev_speed}, {"k1", dev_k1}, {"k2", dev_k2}, {"k3", dev_k3}}},
              {"closed_form_max_dev", closed_form_dev}};
  write_json_file(manifest.record("indicatrix_invariants.json"), report);
  manifest.write();
  return 0;
}

int cmd_verify(const CommonOptions& common, const SpecOptions& spec_opt, double tol,
               const std::string& csv_row_path) {
  const auto out_dir = resolve_out_dir(common.out_dir);
  Manifest manifest("verify", out_dir);
  manifest.parameters() = spec_parameters(spec_opt);
  manifest.tolerances()["tol"] = tol;

  const CCCSpec spec = spec_opt.spec();
  const ParametricCurve curve = make_ccc(spec);
  const double T = curve.period();
  std::vector<std::string> failures;

  // Proposition 3: numeric curvatures against the closed forms.
  const ClosedFormCurvatures cf = closed_form_curvatures(spec);
  double d1 = 0.0, d2 = 0.0, d3 = 0.0;
  for (int i = 0; i < 256; ++i) {
    const FrenetApparatus fa = frenet_at(curve, T * i / 256, 4);
    d1 = std::max(d1, std::abs(fa.curvatures[0] - cf.k1));
    d2 = std::max(d2, std::abs(fa.curvatures[1] - cf.k2));
    d3 = std::max(d3, std::abs(fa.curvatures[2] - cf.k3));
  }
  const bool prop3_pass = d1 < tol && d2 < tol && d3 < tol;
  if (!prop3_pass) failures.push_back("proposition3");

  // Proposition 4: quadrature of the mixed functional against the exact value.
  const double exact = total_mixed_curvature_exact(spec);
  const FunctionalValue mixed = mixed_curvature_functional(curve, 2);
  const double prop4_residual = std::abs(mixed.value - exact);
  const bool prop4_pass = mixed.applicable && prop4_residual < tol;
  if (!prop4_pass) failures.push_back("proposition4");

  // Proposition 5: indicatrix invariants against numeric Frenet data.
  const ParametricCurve ind = osculating_indicatrix(curve);
  const IndicatrixInvariants inv = indicatrix_invariants(spec);
  double dev_speed = 0.0, dk1 = 0.0, dk2 = 0.0, dk3 = 0.0;
  for (int i = 0; i < 256; ++i) {
    const FrenetApparatus fa = frenet_at(ind, T * i / 256, 4);
    dev_speed = std::max(dev_speed, std::abs(fa.speed - inv.speed));
    dk1 = std::max(dk1, std::abs(fa.curvatures[0] - inv.k1));
    dk2 = std::max(dk2, std::abs(fa.curvatures[1] - inv.k2));
    dk3 = std::max(dk3, std::abs(fa.curvatures[2] - inv.k3));
  }
  const bool prop5_pass = dev_speed < tol && dk1 < tol && dk2 < tol && dk3 < tol;
  if (!prop5_pass) failures.push_back("proposition5");

  const Theorem2Report thm2 = verify_theorem2(spec, tol);
  for (const auto& item : thm2.items) {
    if (!item.pass) failures.push_back("theorem2/" + item.name);
  }

  const FunctionalReport ineq = inequality_report(curve, {}, tol);
  for (const auto& v : ineq.verdicts) {
    if (v.applicable && !v.satisfied) failures.push_back("inequality/" + v.id);
  }

  const bool pass = failures.empty();
  json report{{"spec", spec},
              {"tolerance", tol},
              {"proposition3",
               {{"closed_form", cf.k1},
                {"closed_form_k2", cf.k2},
                {"closed_form_k3", cf.k3},
                {"max_abs_dev", {{"k1", d1}, {"k2", d2}, {"k3", d3}}},
                {"pass", prop3_pass}}},
              {"proposition4",
               {{"exact", exact},
                {"quadrature", mixed.value},
                {"residual", prop4_residual},
                {"pass", prop4_pass}}},
              {"proposition5",
               {{"closed_form", inv},
                {"max_abs_dev",
                 {{"speed", dev_speed}, {"k1", dk1}, {"k2", dk2}, {"k3", dk3}}},
                {"pass", prop5_pass}}},
              {"theorem2", thm2},
              {"inequalities", ineq},
              {"failures", failures},
              {"pass", pass}};
  write_json_file(manifest.record("verify_report.json"), report);

  if (!csv_row_path.empty()) {
    const bool fresh = !std::filesystem::exists(csv_row_path);
    std::ofstream csv(csv_row_path, std::ios::app);
    if (fresh) csv << functional_report_csv_header() << '\n';
    csv << functional_report_csv_row(ineq) << '\n';
  }
  manifest.write();

  if (!pass) {
    for (const auto& f : failures) std::cerr << "verify: " << f << " exceeded tolerance\n";
    return 1;
  }
  return 0;
}

int cmd_iterate(const CommonOptions& common, const SpecOptions& spec_opt, int steps) {
  const auto out_dir = resolve_out_dir(common.out_dir);
  Manifest manifest("iterate", out_dir);
  manifest.parameters() = spec_parameters(spec_opt);
  manifest.parameters()["steps"] = steps;

  const IterationReport report = iterate_transform(spec_opt.spec(), steps);
  CsvWriter csv(manifest.record("iterate_table.csv"));
  csv.row({"step", "m1", "m2", "value", "ratio", "min_period_value", "status"});
  for (const auto& s : report.steps) {
    csv.row({std::to_string(s.step), std::to_string(s.wind1), std::to_string(s.wind2),
             num(s.value), s.step == 0 ? "" : num(s.ratio), num(s.minimal_period_value), "ok"});
  }
  if (report.halted) {
    csv.row({std::to_string(report.steps.size()), "", "", "", "", "",
             "\"" + report.halt_reason + "\""});
  }
  manifest.write();
  return 0;
}

int cmd_explore(const CommonOptions& common, const std::string& config_path) {
  const auto out_dir = resolve_out_dir(common.out_dir);
  Manifest manifest("explore", out_dir);
  manifest.parameters()["config"] = config_path;

  std::ifstream in(config_path);
  if (!in) {
    std::cerr << "explore: cannot read config " << config_path << "\n";
    return 1;
  }
  json cfg_json;
  try {
    cfg_json = json::parse(in);
  } catch (const json::exception& e) {
    std::cerr << "explore: malformed config: " << e.what() << "\n";
    return 1;
  }

  const ExplorerConfig config = cfg_json.get<ExplorerConfig>();
  manifest.set_seed(config.seed);
  manifest.tolerances()["violation_margin"] = config.violation_margin;

  FourierCurveSpec initial;
  const json init = cfg_json.value("initial", json{{"kind", "ccc"}});
  const std::string kind = init.value("kind", "ccc");
  if (kind == "ccc" || kind == "perturbed_ccc") {
    CCCSpec base;
    base.a1 = init.value("a1", 1.0);
    base.a2 = init.value("a2", 1.0);
    base.m1 = init.value("m1", 1);
    base.m2 = init.value("m2", 2);
    base.scale = 1.0;
    initial = lifted_to(fourier_embedding(base), config.harmonics);
    if (kind == "perturbed_ccc") {
      initial = perturbed(initial, init.value("perturb_seed", config.seed),
                          init.value("magnitude", 0.1));
    }
  } else if (kind == "fourier") {
    initial = lifted_to(init.at("spec").get<FourierCurveSpec>(), config.harmonics);
  } else {
    std::cerr << "explore: unknown initial kind '" << kind << "'\n";
    return 1;
  }

  const ExplorationResult result = minimize_functional(initial, config);

  write_json_file(manifest.record("explore_result.json"), json(result));
  CsvWriter csv(manifest.record("explore_trace.csv"));
  csv.row({"evaluation", "best_penalized", "penalty", "functional"});
  for (const auto& e : result.trace) {
    csv.row({std::to_string(e.evaluation), num(e.best), num(e.penalty), num(e.functional)});
  }
  manifest.write();

  if (result.conjecture_violated) {
    std::cerr << "explore: FINDING - feasible value " << result.best_value
              << " below the constant-curvature bound\n";
    return 2;
  }
  return 0;
}

int cmd_minval(const CommonOptions& common, int max_m) {
  const auto out_dir = resolve_out_dir(common.out_dir);
  Manifest manifest("minval", out_dir);
  manifest.parameters()["max_m"] = max_m;

  const auto ranked = minimal_admissible_values(max_m, 2);
  json report{{"search_bound", max_m}, {"value", ranked[0].value},
              {"witnesses", ranked[0].witnesses}};
  if (ranked.size() > 1) {
    report["runner_up"] = json{{"value", ranked[1].value}, {"witnesses", ranked[1].witnesses}};
  }
  write_json_file(manifest.record("minval_result.json"), report);
  manifest.write();
  return 0;
}

}  // namespace curvekit::cli
