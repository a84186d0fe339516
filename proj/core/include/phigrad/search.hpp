#pragma once

#include <cmath>
#include <functional>
#include <limits>

namespace phigrad {

/// Where an extremum (or bound) is attained.
struct Witness {
  enum class Kind { AtPoint, AtZeroLimit, AtInfinityLimit, AllT };
  Kind kind = Kind::AtPoint;
  double t = std::numeric_limits<double>::quiet_NaN();

  static Witness at(double t) { return {Kind::AtPoint, t}; }
  static Witness zero_limit() { return {Kind::AtZeroLimit, 0.0}; }
  static Witness infinity_limit() { return {Kind::AtInfinityLimit, std::numeric_limits<double>::infinity()}; }
  static Witness all_t() { return {Kind::AllT, std::numeric_limits<double>::quiet_NaN()}; }
};

struct InfSupResult {
  double inf;
  double sup;
  Witness inf_witness;
  Witness sup_witness;
};

/// Certified-by-limits search for the infimum and supremum of a continuous
/// f on (0, inf) with known analytic limits at 0+ and +inf.
///
/// Evaluates f on 1e5 log-spaced points in [1e-12, 1e12], refines the best
/// 8 local extrema of each kind by golden-section search (relative
/// tolerance 1e-10) and takes min/max against the two endpoint limits.
InfSupResult numeric_inf_sup(const std::function<double(double)>& f,
                             double limit_at_zero, double limit_at_inf);

/// Same search, but the callable receives (t, log t) so families that only
/// need one exponential per evaluation can skip the log.
InfSupResult numeric_inf_sup_fast(const std::function<double(double, double)>& f,
                                  double limit_at_zero, double limit_at_inf);

/// Golden-section minimum of f on [a, b] (a, b > 0), searched in log(t).
/// Returns (argmin, min value).
std::pair<double, double> golden_min_log(const std::function<double(double)>& f,
                                         double a, double b, double rel_tol);

}  // namespace phigrad
