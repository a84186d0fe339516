#pragma once

#include <optional>
#include <string>

#include "phigrad/coupling.hpp"
#include "phigrad/degree.hpp"
#include "phigrad/families.hpp"

namespace phigrad {

struct Verdict {
  enum class Status { NotApplicable, EstimateHolds, Liouville };
  enum class FailedCondition { None, Phi1, Phi2, Psi2 };
  enum class LiouvilleKind { None, ConstantSolution, NoPositiveBoundedSolution };

  Status status;
  FailedCondition failed = FailedCondition::None;
  std::string detail;

  std::optional<DegreeProfile> degree;
  std::optional<CouplingProfile> coupling;
  std::optional<IterationConstants> constants;

  LiouvilleKind liouville = LiouvilleKind::None;
  // Value of the forced constant solution (sqrt of the psi root); NaN when
  // psi vanishes identically and any positive constant qualifies.
  double constant_value = 0.0;
};

/// Runs the degree and coupling analyses and reports the first failed
/// condition, or the full estimate payload.  With the curvature/boundedness
/// assumption the Liouville conclusion is appended: a constant solution at
/// the psi root when one exists, otherwise no positive bounded solution.
Verdict classify(const PhiSpec& phi, const PsiSpec& psi, int n,
                 bool assume_nonneg_ricci_bounded);

/// First and second critical dimensions of the exponent range; (+inf, +inf)
/// for a single exponent.
std::pair<double, double> critical_dimensions(double p_min, double p_max);

/// (n-1) < 4(p-1)(q-1)/(p-q)^2, with p = q counted as true.
bool corollary_pq(double p, double q, int n);

/// (n-1) < 2(p_1-1)^2/(p_r-p_1)^2 for a list of exponents.
bool corollary_weighted(const std::vector<double>& p_list, int n);

/// Power reaction a*u^q: the sign-dependent sharp inequality.  Requires
/// n < N1 (throws precondition_error otherwise).
bool theorem_power_reaction(double p_min, double p_max, double a, double q, int n);

/// Double-power reaction u^m - u^k (m < k): the non-strict pair, weakened
/// to the strict sqrt-relaxed pair when n < N2.  Requires n < N1.
bool theorem_double_power(double p_min, double p_max, double m, double k, int n);

/// Log-power reaction a*u^q*(log u)^m with a*m < 0: both strict sqrt
/// inequalities.  Requires n < N2.
bool theorem_log_reaction(double p_min, double p_max, double a, double q,
                          double m, int n);

/// Positive root of psi(t) = 0, when the family has exactly one; nullopt
/// when psi never vanishes.  Throws for Zero (every t is a root).
std::optional<double> psi_positive_root(const PsiSpec& psi);

}  // namespace phigrad
