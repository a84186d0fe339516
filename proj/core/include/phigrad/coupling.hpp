#pragma once

#include "phigrad/degree.hpp"
#include "phigrad/families.hpp"
#include "phigrad/intervals.hpp"

namespace phigrad {

/// The coupling objects between the operator degree range [l, d] and the
/// reaction degree delta_psi: the good set i_psi, the supremum theta_big of
/// the squared bracket over its complement, and the derived constants
/// theta_small and alpha.
struct CouplingProfile {
  IntervalSet i_psi;
  double theta_big;    // -inf when the complement is empty
  double threshold;    // 4 gamma / (n - 1)
  bool psi2_ok;        // theta_big < threshold (strict)
  double theta_small;  // gamma - theta_big * (n-1)/4; = gamma when theta_big = -inf
  double alpha;        // theta_big * (d+1) / (4 theta_small); = 0 when theta_big = -inf
  enum class Method { ClosedForm, Sampled } method;
};

/// Constants of the gradient-estimate iteration.
struct IterationConstants {
  double a0, a1, a2, a3;
  double b_threshold;  // the iteration exponent b must exceed this
};

/// 2(delta_phi(s)+1)/(n-1) + delta_phi(s) - delta_psi(t).  Increasing in
/// delta_phi(s), decreasing in delta_psi(t).  Throws pole_error at psi-zeros.
double bracket_value(const PhiSpec& phi, const PsiSpec& psi, int n, double s, double t);

/// The set {t > 0 : psi(t) * bracket(s, t) >= 0 for every s}.  Closed-form
/// case analysis per psi family; dense log-grid sampling for GeneralSum.
IntervalSet compute_i_psi(const PhiSpec& phi, const PsiSpec& psi, int n);

/// sup of bracket^2 over s and over t outside i_psi, by corner evaluation
/// over delta_phi in {l, d} and the closure of the delta_psi range on each
/// complement piece.  -inf for an empty complement; +inf when a delta_psi
/// pole is an accumulation point of the complement.
double compute_theta_big(const PhiSpec& phi, const PsiSpec& psi, int n,
                         const IntervalSet& i_psi);

struct Psi2Check {
  bool ok;
  double margin;  // 4 gamma/(n-1) - theta_big; +inf when theta_big = -inf
};
Psi2Check check_psi2(double theta_big, double gamma, int n);

/// (theta_small, alpha) from gamma, theta_big, d.
std::pair<double, double> theta_alpha(double gamma, double theta_big, double d, int n);

/// a0..a3 and the b-threshold; requires phi1_ok and phi2_ok.
IterationConstants iteration_constants(const DegreeProfile& profile);

/// Full coupling profile; requires profile.phi1_ok.
CouplingProfile analyze_coupling(const PhiSpec& phi, const PsiSpec& psi,
                                 const DegreeProfile& profile);

}  // namespace phigrad
