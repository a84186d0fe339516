#include "phigrad/degree.hpp"

#include <cmath>
#include <limits>

namespace phigrad {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double q_function(const PhiSpec& phi, int n, double t) {
  if (n < 2) throw precondition_error("q_function: n must be >= 2");
  if (!(t > 0)) throw precondition_error("q_function: t must be positive");
  const double delta = eval_delta_phi(phi, t);
  return (delta + 1.0) * (delta + 1.0) / (n - 1) - eval_two_t_delta_phi_prime(phi, t);
}

DegreeBounds degree_bounds(const PhiSpec& phi) {
  switch (phi.kind()) {
    case PhiKind::ConstantOne:
      return {0.0, 0.0, Witness::all_t(), Witness::all_t()};
    case PhiKind::PowerLaw: {
      const double c = phi.exponent() - 2.0;
      return {c, c, Witness::all_t(), Witness::all_t()};
    }
    case PhiKind::SumOfPowers:
      // delta is a weighted mean of the p_i - 2 with weights sliding
      // monotonically from the smallest exponent (t -> 0) to the largest.
      return {phi.min_exponent() - 2.0, phi.max_exponent() - 2.0,
              Witness::zero_limit(), Witness::infinity_limit()};
    case PhiKind::Exponential:
      // delta(t) = t
      return {0.0, kInf, Witness::zero_limit(), Witness::infinity_limit()};
    case PhiKind::MeanCurvature:
      // delta(t) = -t/(1+t): decreases from 0 to -1, the infimum is only a
      // limit, which is what makes the strict lower-bound condition fail.
      return {-1.0, 0.0, Witness::infinity_limit(), Witness::zero_limit()};
  }
  throw unsupported_family_error("degree_bounds: unknown phi family");
}

std::optional<std::pair<double, double>> phi2_closed_bounds(const PhiSpec& phi, int n) {
  switch (phi.kind()) {
    case PhiKind::ConstantOne:
      return std::make_pair(1.0 / (n - 1), 1.0 / (n - 1));
    case PhiKind::PowerLaw: {
      const double c = (phi.exponent() - 1.0) * (phi.exponent() - 1.0) / (n - 1);
      return std::make_pair(c, c);
    }
    case PhiKind::SumOfPowers: {
      const double p1 = phi.min_exponent();
      const double pr = phi.max_exponent();
      const double Gamma = (pr - 1.0) * (pr - 1.0) / (n - 1);
      if (phi.terms().size() == 2) {
        // Two-term discriminant bound.
        const double gamma =
            (4.0 * (p1 - 1.0) * (pr - 1.0) - (n - 1) * (pr - p1) * (pr - p1)) / (4.0 * n);
        return std::make_pair(gamma, Gamma);
      }
      // General sum: the curvature term 2t delta' never exceeds half the
      // squared exponent spread.
      const double gamma = (p1 - 1.0) * (p1 - 1.0) / (n - 1) - (pr - p1) * (pr - p1) / 2.0;
      return std::make_pair(gamma, Gamma);
    }
    case PhiKind::Exponential:
    case PhiKind::MeanCurvature:
      return std::nullopt;
  }
  throw unsupported_family_error("phi2_closed_bounds: unknown phi family");
}

std::pair<double, double> q_limits(const PhiSpec& phi, int n) {
  switch (phi.kind()) {
    case PhiKind::ConstantOne:
      return {1.0 / (n - 1), 1.0 / (n - 1)};
    case PhiKind::PowerLaw: {
      const double c = (phi.exponent() - 1.0) * (phi.exponent() - 1.0) / (n - 1);
      return {c, c};
    }
    case PhiKind::SumOfPowers: {
      const double p1 = phi.min_exponent();
      const double pr = phi.max_exponent();
      return {(p1 - 1.0) * (p1 - 1.0) / (n - 1), (pr - 1.0) * (pr - 1.0) / (n - 1)};
    }
    case PhiKind::Exponential:
      // Q(t) = (t+1)^2/(n-1) - 2t
      return {1.0 / (n - 1), kInf};
    case PhiKind::MeanCurvature:
      // Q(t) = (1+t)^{-2}/(n-1) + 2t/(1+t)^2
      return {1.0 / (n - 1), 0.0};
  }
  throw unsupported_family_error("q_limits: unknown phi family");
}

namespace {

// One exp per term: x_i = t^{(p_i - p_1)/2}, then delta and 2t delta' come
// from the weighted mean and variance of the shifted exponents.
std::function<double(double, double)> make_q_fast(const PhiSpec& phi, int n) {
  switch (phi.kind()) {
    case PhiKind::SumOfPowers: {
      std::vector<double> a, c, half_gap;
      const double p1 = phi.min_exponent();
      for (const auto& term : phi.terms()) {
        a.push_back(term.weight);
        c.push_back(term.exponent - 2.0);
        half_gap.push_back((term.exponent - p1) / 2.0);
      }
      return [a, c, half_gap, n](double, double log_t) {
        double S = 0, N = 0, M = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
          const double x = a[i] * std::exp(half_gap[i] * log_t);
          S += x;
          N += c[i] * x;
          M += c[i] * c[i] * x;
        }
        const double delta = N / S;
        const double var = M / S - delta * delta;
        return (delta + 1.0) * (delta + 1.0) / (n - 1) - var;
      };
    }
    case PhiKind::Exponential:
      return [n](double t, double) { return (t + 1.0) * (t + 1.0) / (n - 1) - 2.0 * t; };
    case PhiKind::MeanCurvature:
      return [n](double t, double) {
        const double u = 1.0 + t;
        return 1.0 / (u * u * (n - 1)) + 2.0 * t / (u * u);
      };
    default:
      throw unsupported_family_error("make_q_fast: family has a constant Q");
  }
}

}  // namespace

DegreeProfile analyze_degree(const PhiSpec& phi, int n) {
  if (n < 2) throw precondition_error("analyze_degree: n must be >= 2");

  DegreeProfile prof;
  prof.n = n;

  const DegreeBounds db = degree_bounds(phi);
  prof.l = db.lo;
  prof.d = db.hi;
  prof.l_witness = db.lo_witness;
  prof.d_witness = db.hi_witness;
  prof.phi1_ok = (prof.l > -1.0) && std::isfinite(prof.d);

  if (const auto closed = phi2_closed_bounds(phi, n)) {
    prof.gamma_closed = closed->first;
    prof.Gamma_closed = closed->second;
  }

  if (phi.kind() == PhiKind::ConstantOne || phi.kind() == PhiKind::PowerLaw) {
    prof.gamma = prof.Gamma = *prof.gamma_closed;
    prof.gamma_witness = prof.Gamma_witness = Witness::all_t();
    prof.method = DegreeProfile::Method::ClosedForm;
  } else {
    const auto [q0, qinf] = q_limits(phi, n);
    const InfSupResult r = numeric_inf_sup_fast(make_q_fast(phi, n), q0, qinf);
    prof.gamma = r.inf;
    prof.Gamma = r.sup;
    prof.gamma_witness = r.inf_witness;
    prof.Gamma_witness = r.sup_witness;
    prof.method = DegreeProfile::Method::Numeric;
  }

  prof.phi2_ok = (prof.gamma > 0.0) && std::isfinite(prof.Gamma);
  return prof;
}

}  // namespace phigrad
