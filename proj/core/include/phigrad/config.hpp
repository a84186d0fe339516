#pragma once

#include <optional>
#include <string>
#include <vector>

#include "phigrad/families.hpp"

namespace phigrad {

/// Raised for malformed or inconsistent run configuration.
struct config_error : std::runtime_error {
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

struct ScanConfig {
  // "pq": two-exponent operator admissibility over (p, q), reaction-free.
  // "mk": double-power reaction admissibility over (m, k); with the
  //        comparison layer, a second column marks the narrower reference
  //        region {1 < m < (n+3)/(n-1) or 1 < k < (n+3)/(n-1), m < k}.
  std::string mode = "pq";
  double min1 = 0, max1 = 0, min2 = 0, max2 = 0;
  int steps1 = 0, steps2 = 0;
  bool compare_layer = false;
};

struct SolverConfig {
  double u0 = 1.0;
  double R = 1.0;
  double h = 1e-3;
  std::vector<double> radii;  // used by verify; falls back to {R}
};

struct RunConfig {
  PhiSpec phi = PhiSpec::constant_one();
  PsiSpec psi = PsiSpec::zero();
  int n = 3;
  double space_k = 0.0;  // model-space warp parameter
  std::optional<ScanConfig> scan;
  SolverConfig solver;
};

/// Parses flat dotted key=value text ('#' comments, blank lines ignored).
/// Unknown keys and malformed values raise config_error.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

}  // namespace phigrad
