#pragma once

#include <string>

#include "curvekit/ccc.hpp"

namespace curvekit::cli {

struct CommonOptions {
  std::string out_dir;
  int samples = 1024;
};

struct SpecOptions {
  double a1 = 1.0;
  double a2 = 1.0;
  int m1 = 1;
  int m2 = 2;
  double scale = 1.0;

  CCCSpec spec() const { return CCCSpec{a1, a2, m1, m2, scale}; }
};

int cmd_generate(const CommonOptions& common, const SpecOptions& spec);
int cmd_frenet(const CommonOptions& common, const SpecOptions& spec,
               const std::string& fourier_path);
int cmd_indicatrix(const CommonOptions& common, const SpecOptions& spec);
int cmd_verify(const CommonOptions& common, const SpecOptions& spec, double tol,
               const std::string& csv_row_path);
int cmd_iterate(const CommonOptions& common, const SpecOptions& spec, int steps);
int cmd_explore(const CommonOptions& common, const std::string& config_path);
int cmd_minval(const CommonOptions& common, int max_m);

}  // namespace curvekit::cli
