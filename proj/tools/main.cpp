#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"
#include "curvekit/errors.hpp"
#include "curvekit/version.hpp"

namespace {

void add_spec_flags(CLI::App* cmd, curvekit::cli::SpecOptions& spec) {
  cmd->add_option("--a1", spec.a1, "first amplitude (> 0)");
  cmd->add_option("--a2", spec.a2, "second amplitude (> 0)");
  cmd->add_option("--m1", spec.m1, "first winding (positive, coprime with m2)");
  cmd->add_option("--m2", spec.m2, "second winding (positive, distinct from m1)");
  cmd->add_option("--scale", spec.scale, "frequency scale: alpha_i = scale * m_i");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace curvekit::cli;

  CLI::App app{"curvekit: constant-curvature closed curves in R^4, their Plucker\n"
               "indicatrices in G(2,4), total-curvature functionals, and a\n"
               "derivative-free curvature-functional explorer"};
  app.set_version_flag("--version", curvekit::kVersion);
  app.require_subcommand(1);

  CommonOptions common;
  app.add_option("--out-dir", common.out_dir,
                 "output directory (default: $CURVEKIT_OUT_DIR or cwd)");

  SpecOptions spec;
  double tol = 1e-8;
  int steps = 1;
  int max_m = 10;
  std::string fourier_path, config_path, csv_row_path;

  auto* generate = app.add_subcommand("generate", "sample a constant-curvature curve to CSV");
  add_spec_flags(generate, spec);
  generate->add_option("--samples", common.samples, "rows in the sample dump");

  auto* frenet = app.add_subcommand("frenet", "dump speed and curvatures along a curve");
  add_spec_flags(frenet, spec);
  frenet->add_option("--samples", common.samples, "rows in the sample dump");
  frenet->add_option("--fourier", fourier_path, "Fourier curve spec JSON instead of CCC flags");

  auto* indicatrix =
      app.add_subcommand("indicatrix", "sample the osculating indicatrix and its invariants");
  add_spec_flags(indicatrix, spec);
  indicatrix->add_option("--samples", common.samples, "rows in the sample dump");

  auto* verify = app.add_subcommand(
      "verify", "check closed forms, the indicatrix identities, and the inequalities");
  add_spec_flags(verify, spec);
  verify->add_option("--tol", tol, "residual tolerance (default 1e-8)");
  verify->add_option("--csv-row", csv_row_path, "append a one-row functional summary to a CSV");

  auto* iterate = app.add_subcommand("iterate", "iterate the indicatrix transform");
  add_spec_flags(iterate, spec);
  iterate->add_option("--steps", steps, "iteration count (>= 1)")->check(CLI::PositiveNumber);

  auto* explore = app.add_subcommand("explore", "minimize the mixed-curvature functional");
  explore->add_option("--config", config_path, "explorer config JSON")->required();

  auto* minval = app.add_subcommand("minval",
                                    "minimum of the functional over admissible winding pairs");
  minval->add_option("--max-m", max_m, "winding search bound (>= 3)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) return cmd_generate(common, spec);
    if (frenet->parsed()) return cmd_frenet(common, spec, fourier_path);
    if (indicatrix->parsed()) return cmd_indicatrix(common, spec);
    if (verify->parsed()) return cmd_verify(common, spec, tol, csv_row_path);
    if (iterate->parsed()) return cmd_iterate(common, spec, steps);
    if (explore->parsed()) return cmd_explore(common, config_path);
    if (minval->parsed()) return cmd_minval(common, max_m);
  } catch (const curvekit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
