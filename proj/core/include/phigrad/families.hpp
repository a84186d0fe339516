#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "phigrad/errors.hpp"

namespace phigrad {

// All closed forms are stored in terms of t = |grad u|^2.  The solver-facing
// flux map works with w = u' and G(w) = phi(w^2) * w.

enum class PhiKind { ConstantOne, PowerLaw, SumOfPowers, Exponential, MeanCurvature };

struct PhiTerm {
  double weight;    // > 0
  double exponent;  // p_i > 1
};

class PhiSpec {
 public:
  static PhiSpec constant_one();
  static PhiSpec power_law(double p);
  static PhiSpec sum_of_powers(std::vector<PhiTerm> terms);
  static PhiSpec exponential();
  static PhiSpec mean_curvature();

  PhiKind kind() const { return kind_; }
  double exponent() const { return terms_.front().exponent; }  // PowerLaw
  const std::vector<PhiTerm>& terms() const { return terms_; }
  double min_exponent() const;
  double max_exponent() const;

 private:
  PhiSpec(PhiKind kind, std::vector<PhiTerm> terms)
      : kind_(kind), terms_(std::move(terms)) {}
  PhiKind kind_;
  std::vector<PhiTerm> terms_;  // used by PowerLaw and SumOfPowers
};

enum class PsiKind { Zero, Power, DoublePower, LogPower, GeneralSum };

// GeneralSum: psi(t) = A*t^P + B*t^Q + C*t*log(t) + D.  Numeric-only
// pathway: no interval case analysis, set computations are sampled.
struct GeneralSumPsi {
  double A = 0, P = 0;
  double B = 0, Q = 0;
  double C = 0;
  double D = 0;
};

class PsiSpec {
 public:
  static PsiSpec zero();
  static PsiSpec power(double a, double q);              // a*t^{(q-1)/2}, a != 0
  static PsiSpec double_power(double m, double k);       // t^{(m-1)/2} - t^{(k-1)/2}, m < k
  static PsiSpec log_power(double a, double q, double m);  // a*t^{(q-1)/2}(log(t)/2)^m
  static PsiSpec general_sum(const GeneralSumPsi& gs);

  PsiKind kind() const { return kind_; }
  double a() const { return a_; }
  double q() const { return q_; }
  double m() const { return m_; }
  double k() const { return k_; }
  const GeneralSumPsi& general() const { return gs_; }

 private:
  explicit PsiSpec(PsiKind kind) : kind_(kind) {}
  PsiKind kind_;
  double a_ = 0, q_ = 0, m_ = 0, k_ = 0;
  GeneralSumPsi gs_;
};

/// phi(t) for t >= 0.  Throws for non-finite values at t = 0 (power families
/// with an exponent below 2).
double eval_phi(const PhiSpec& phi, double t);

/// Degree function delta_phi(t) = 2 t phi'(t) / phi(t), t > 0.
double eval_delta_phi(const PhiSpec& phi, double t);

/// 2 t delta_phi'(t), t > 0.  SumOfPowers uses the pairwise closed form.
double eval_two_t_delta_phi_prime(const PhiSpec& phi, double t);

/// Limits of delta_phi at t -> 0+ and t -> +inf (may be +-inf).
std::pair<double, double> delta_phi_limits(const PhiSpec& phi);

/// psi(t), t > 0.
double eval_psi(const PsiSpec& psi, double t);

/// delta_psi(t) = 2 t psi'(t) / psi(t).  Throws pole_error at zeros of psi.
double eval_delta_psi(const PsiSpec& psi, double t);

/// One-sided limits of delta_psi at the psi-zero t = 1 of DoublePower and
/// LogPower families: (left, right) = (-inf, +inf).  Encoded analytically,
/// never sampled.
std::pair<double, double> delta_psi_pole_limits(const PsiSpec& psi);

/// Radial flux map G(w) = phi(w^2) * w; odd in w.
double flux(const PhiSpec& phi, double w);

/// Unique w with flux(w) = g, to relative tolerance 1e-12.  Bracketing by
/// doubling from |g|, then alternating bisection and secant refinement.
/// Throws non_invertible_error when no bracket exists.
double invert_flux(const PhiSpec& phi, double g);

/// x^e for odd/odd rational e: sign(x) * |x|^e.
double odd_pow(double x, double e);

}  // namespace phigrad
