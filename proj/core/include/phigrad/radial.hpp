#pragma once

#include <vector>

#include "phigrad/families.hpp"

namespace phigrad {

/// Rotationally symmetric comparison space: Euclidean when k = 0, hyperbolic
/// with warp sinh(sqrt(k) r)/sqrt(k) when k > 0.  The Ricci lower bound used
/// in the estimate normalization is K = (n-1) k.
struct ModelSpace {
  int n;
  double k = 0.0;

  double K() const { return (n - 1) * k; }
  double warp(double r) const;             // s(r)
  double warp_pow(double r) const;         // s(r)^(n-1)
};

struct RadialDiagnostics {
  bool positive_ok;    // u stayed positive on the whole [0, 2R] grid
  double sup_ratio;    // sup over [0, R] of |u'|/u
  double c_hat;        // sup_ratio * R / (1 + sqrt(K) R)
  double harnack_log;  // log(max u / min u over [0, R]) / (1 + sqrt(K) R)
  double residual_max; // worst relative defect of the integrated flux identity
};

/// Radial profile of a solution of the divergence-form equation, integrated
/// in the flux variable F = s^(n-1) G(u') from the center value u0.
struct RadialSolution {
  std::vector<double> grid;   // r_j = j h, truncated early if u quits (0,inf)
  std::vector<double> u;
  std::vector<double> du;
  std::vector<double> flux;   // G(u') per node
  std::vector<double> h_hat;  // (u'/u)^2 per node
  RadialDiagnostics diagnostics;
};

/// Center-shooting solve on [0, 2R] with fixed step h (h <= R/100).  The
/// origin is a regular singular point; integration starts at eps = h/10
/// with a quadrature-based series start.  Throws solver_error when the
/// post-hoc flux-identity audit exceeds 1e-6 relative.
RadialSolution solve_radial(const PhiSpec& phi, const PsiSpec& psi,
                            const ModelSpace& space, double u0, double R, double h);

/// Diagnostics of an accepted solve; refuses solutions that lost positivity
/// before 2R (the estimate assumes a positive solution on the double ball).
RadialDiagnostics verify_estimate(const RadialSolution& sol, const ModelSpace& space,
                                  double R);

struct SweepRow {
  double R;
  double c_hat;
  double harnack_log;
  bool positive_ok;
  double residual_max;
};

/// One solve on B(2R) per requested radius; rows that lose positivity are
/// retained and flagged rather than dropped.
std::vector<SweepRow> sweep_radii(const PhiSpec& phi, const PsiSpec& psi,
                                  const ModelSpace& space, double u0,
                                  const std::vector<double>& radii, double h);

}  // namespace phigrad
