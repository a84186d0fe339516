#pragma once

#include <optional>

#include "phigrad/families.hpp"
#include "phigrad/search.hpp"

namespace phigrad {

/// Bounds on the degree function (condition on l, d) and on
/// Q_n(t) = (delta(t)+1)^2/(n-1) - 2t delta'(t) (condition on gamma, Gamma).
struct DegreeProfile {
  double l;       // inf of delta_phi (may be -inf in principle)
  double d;       // sup of delta_phi (may be +inf)
  double gamma;   // numeric infimum of Q_n (sharpest valid bound)
  double Gamma;   // numeric supremum of Q_n
  std::optional<double> gamma_closed;  // certified closed-form lower reference
  std::optional<double> Gamma_closed;
  int n;
  Witness l_witness, d_witness, gamma_witness, Gamma_witness;
  bool phi1_ok;   // -1 < l and d finite
  bool phi2_ok;   // gamma > 0 and Gamma finite
  enum class Method { ClosedForm, Numeric } method;
};

struct DegreeBounds {
  double lo, hi;
  Witness lo_witness, hi_witness;
};

/// Q_n(t); uses the literal n, including n = 2.
double q_function(const PhiSpec& phi, int n, double t);

/// Closed-form inf/sup of the degree function per family.
DegreeBounds degree_bounds(const PhiSpec& phi);

/// Closed-form (gamma, Gamma) where the family has one; nullopt otherwise.
std::optional<std::pair<double, double>> phi2_closed_bounds(const PhiSpec& phi, int n);

/// Analytic limits of Q_n at t -> 0+ and t -> +inf.
std::pair<double, double> q_limits(const PhiSpec& phi, int n);

/// Full profile: closed-form degree bounds, closed-form phi2 bounds where
/// available, and the numeric search for the sharp (gamma, Gamma) always.
DegreeProfile analyze_degree(const PhiSpec& phi, int n);

}  // namespace phigrad
