#include "phigrad/families.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace phigrad {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

PhiSpec PhiSpec::constant_one() { return PhiSpec(PhiKind::ConstantOne, {}); }

PhiSpec PhiSpec::power_law(double p) {
  if (!(p > 1.0)) throw precondition_error("power_law: exponent must be > 1");
  return PhiSpec(PhiKind::PowerLaw, {{1.0, p}});
}

PhiSpec PhiSpec::sum_of_powers(std::vector<PhiTerm> terms) {
  if (terms.empty())
    throw precondition_error("sum_of_powers: need at least one term");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (!(terms[i].weight > 0.0))
      throw precondition_error("sum_of_powers: weights must be positive");
    if (!(terms[i].exponent > 1.0))
      throw precondition_error("sum_of_powers: exponents must be > 1");
    if (i > 0 && !(terms[i].exponent > terms[i - 1].exponent))
      throw precondition_error("sum_of_powers: exponents must be strictly increasing");
  }
  return PhiSpec(PhiKind::SumOfPowers, std::move(terms));
}

PhiSpec PhiSpec::exponential() { return PhiSpec(PhiKind::Exponential, {}); }

PhiSpec PhiSpec::mean_curvature() { return PhiSpec(PhiKind::MeanCurvature, {}); }

double PhiSpec::min_exponent() const {
  switch (kind_) {
    case PhiKind::ConstantOne: return 2.0;
    case PhiKind::PowerLaw:
    case PhiKind::SumOfPowers: return terms_.front().exponent;
    default:
      throw unsupported_family_error("min_exponent: family has no exponent list");
  }
}

double PhiSpec::max_exponent() const {
  switch (kind_) {
    case PhiKind::ConstantOne: return 2.0;
    case PhiKind::PowerLaw:
    case PhiKind::SumOfPowers: return terms_.back().exponent;
    default:
      throw unsupported_family_error("max_exponent: family has no exponent list");
  }
}

double eval_phi(const PhiSpec& phi, double t) {
  if (!(t >= 0.0)) throw precondition_error("eval_phi: t must be >= 0");
  switch (phi.kind()) {
    case PhiKind::ConstantOne:
      return 1.0;
    case PhiKind::PowerLaw:
    case PhiKind::SumOfPowers: {
      if (t == 0.0) {
        // t^{p/2-1} is 1 at p = 2, 0 for p > 2, and diverges for p < 2.
        if (phi.min_exponent() < 2.0)
          throw precondition_error("eval_phi: value not finite at t = 0");
      }
      double s = 0.0;
      for (const auto& term : phi.terms())
        s += term.weight * std::pow(t, term.exponent / 2.0 - 1.0);
      return s;
    }
    case PhiKind::Exponential:
      return std::exp(t / 2.0);
    case PhiKind::MeanCurvature:
      return 1.0 / std::sqrt(1.0 + t);
  }
  throw unsupported_family_error("eval_phi: unknown family");
}

double eval_delta_phi(const PhiSpec& phi, double t) {
  if (!(t > 0.0)) throw precondition_error("eval_delta_phi: t must be > 0");
  switch (phi.kind()) {
    case PhiKind::ConstantOne:
      return 0.0;
    case PhiKind::PowerLaw:
      return phi.exponent() - 2.0;
    case PhiKind::SumOfPowers: {
      // Normalize by the first term so extreme t cannot overflow.
      const auto& terms = phi.terms();
      const double p1 = terms.front().exponent;
      double num = 0.0, den = 0.0;
      for (const auto& term : terms) {
        const double x = term.weight * std::pow(t, (term.exponent - p1) / 2.0);
        num += (term.exponent - 2.0) * x;
        den += x;
      }
      return num / den;
    }
    case PhiKind::Exponential:
      return t;
    case PhiKind::MeanCurvature:
      return -t / (1.0 + t);
  }
  throw unsupported_family_error("eval_delta_phi: unknown family");
}

double eval_two_t_delta_phi_prime(const PhiSpec& phi, double t) {
  if (!(t > 0.0))
    throw precondition_error("eval_two_t_delta_phi_prime: t must be > 0");
  switch (phi.kind()) {
    case PhiKind::ConstantOne:
    case PhiKind::PowerLaw:
      return 0.0;  // delta is constant
    case PhiKind::SumOfPowers: {
      const auto& terms = phi.terms();
      const double p1 = terms.front().exponent;
      std::vector<double> x(terms.size());
      double den = 0.0;
      for (std::size_t i = 0; i < terms.size(); ++i) {
        x[i] = terms[i].weight * std::pow(t, (terms[i].exponent - p1) / 2.0);
        den += x[i];
      }
      double num = 0.0;
      for (std::size_t i = 0; i < terms.size(); ++i)
        for (std::size_t j = i + 1; j < terms.size(); ++j) {
          const double dp = terms[i].exponent - terms[j].exponent;
          num += dp * dp * x[i] * x[j];
        }
      return num / (den * den);
    }
    case PhiKind::Exponential:
      return 2.0 * t;  // delta(t) = t
    case PhiKind::MeanCurvature:
      // delta(t) = -t/(1+t), delta'(t) = -1/(1+t)^2
      return -2.0 * t / ((1.0 + t) * (1.0 + t));
  }
  throw unsupported_family_error("eval_two_t_delta_phi_prime: unknown family");
}

std::pair<double, double> delta_phi_limits(const PhiSpec& phi) {
  switch (phi.kind()) {
    case PhiKind::ConstantOne: return {0.0, 0.0};
    case PhiKind::PowerLaw: {
      const double d = phi.exponent() - 2.0;
      return {d, d};
    }
    case PhiKind::SumOfPowers:
      return {phi.min_exponent() - 2.0, phi.max_exponent() - 2.0};
    case PhiKind::Exponential: return {0.0, kInf};
    case PhiKind::MeanCurvature: return {0.0, -1.0};
  }
  throw unsupported_family_error("delta_phi_limits: unknown family");
}

double odd_pow(double x, double e) {
  if (x == 0.0) {
    if (e > 0.0) return 0.0;
    if (e == 0.0) return 1.0;
    return kInf;
  }
  const double mag = std::pow(std::abs(x), e);
  return x < 0.0 ? -mag : mag;
}

PsiSpec PsiSpec::zero() { return PsiSpec(PsiKind::Zero); }

PsiSpec PsiSpec::power(double a, double q) {
  if (a == 0.0) throw precondition_error("psi power: a must be nonzero");
  PsiSpec s(PsiKind::Power);
  s.a_ = a;
  s.q_ = q;
  return s;
}

PsiSpec PsiSpec::double_power(double m, double k) {
  if (!(m < k)) throw precondition_error("psi double_power: need m < k");
  PsiSpec s(PsiKind::DoublePower);
  s.m_ = m;
  s.k_ = k;
  return s;
}

PsiSpec PsiSpec::log_power(double a, double q, double m) {
  if (a == 0.0) throw precondition_error("psi log_power: a must be nonzero");
  if (!(a * m < 0.0)) throw precondition_error("psi log_power: need a*m < 0");
  PsiSpec s(PsiKind::LogPower);
  s.a_ = a;
  s.q_ = q;
  s.m_ = m;
  return s;
}

PsiSpec PsiSpec::general_sum(const GeneralSumPsi& gs) {
  PsiSpec s(PsiKind::GeneralSum);
  s.gs_ = gs;
  return s;
}

double eval_psi(const PsiSpec& psi, double t) {
  if (!(t > 0.0)) throw precondition_error("eval_psi: t must be > 0");
  switch (psi.kind()) {
    case PsiKind::Zero:
      return 0.0;
    case PsiKind::Power:
      return psi.a() * std::pow(t, (psi.q() - 1.0) / 2.0);
    case PsiKind::DoublePower:
      return std::pow(t, (psi.m() - 1.0) / 2.0) - std::pow(t, (psi.k() - 1.0) / 2.0);
    case PsiKind::LogPower: {
      const double half_log = 0.5 * std::log(t);
      if (half_log == 0.0 && psi.m() < 0.0)
        throw pole_error("eval_psi: log_power with negative m diverges at t = 1");
      return psi.a() * std::pow(t, (psi.q() - 1.0) / 2.0) * odd_pow(half_log, psi.m());
    }
    case PsiKind::GeneralSum: {
      const auto& g = psi.general();
      return g.A * std::pow(t, g.P) + g.B * std::pow(t, g.Q) +
             g.C * t * std::log(t) + g.D;
    }
  }
  throw unsupported_family_error("eval_psi: unknown family");
}

double eval_delta_psi(const PsiSpec& psi, double t) {
  if (!(t > 0.0)) throw precondition_error("eval_delta_psi: t must be > 0");
  switch (psi.kind()) {
    case PsiKind::Zero:
      throw pole_error("eval_delta_psi: psi is identically zero");
    case PsiKind::Power:
      return psi.q() - 1.0;
    case PsiKind::DoublePower: {
      if (t == 1.0)
        throw pole_error("eval_delta_psi: psi(1) = 0 for double_power");
      // In x = t^{(k-m)/2}: delta = (k-1) + (k-m)/(x-1).
      const double x = std::pow(t, (psi.k() - psi.m()) / 2.0);
      return (psi.k() - 1.0) + (psi.k() - psi.m()) / (x - 1.0);
    }
    case PsiKind::LogPower: {
      if (t == 1.0)
        throw pole_error("eval_delta_psi: psi(1) = 0 for log_power");
      return (psi.q() - 1.0) + 2.0 * psi.m() / std::log(t);
    }
    case PsiKind::GeneralSum: {
      const double value = eval_psi(psi, t);
      if (value == 0.0)
        throw pole_error("eval_delta_psi: psi(t) = 0");
      const auto& g = psi.general();
      const double dpsi = g.A * g.P * std::pow(t, g.P - 1.0) +
                          g.B * g.Q * std::pow(t, g.Q - 1.0) +
                          g.C * (std::log(t) + 1.0);
      return 2.0 * t * dpsi / value;
    }
  }
  throw unsupported_family_error("eval_delta_psi: unknown family");
}

std::pair<double, double> delta_psi_pole_limits(const PsiSpec& psi) {
  switch (psi.kind()) {
    case PsiKind::DoublePower:
      // delta = (k-1) + (k-m)/(x-1) with x = t^{(k-m)/2}.
      return {-kInf, kInf};
    case PsiKind::LogPower:
      // delta = (q-1) + 2m/log(t).
      if (psi.m() > 0.0) return {-kInf, kInf};
      return {kInf, -kInf};
    default:
      throw unsupported_family_error("delta_psi_pole_limits: family has no pole");
  }
}

double flux(const PhiSpec& phi, double w) {
  if (w == 0.0) return 0.0;
  // PowerLaw: G(w) = |w|^{p-2} w, finite for p > 1 even where phi(0+) diverges.
  if (phi.kind() == PhiKind::PowerLaw)
    return std::pow(std::abs(w), phi.exponent() - 2.0) * w;
  if (phi.kind() == PhiKind::SumOfPowers) {
    double s = 0.0;
    for (const auto& term : phi.terms())
      s += term.weight * std::pow(std::abs(w), term.exponent - 2.0) * w;
    return s;
  }
  return eval_phi(phi, w * w) * w;
}

double invert_flux(const PhiSpec& phi, double g) {
  if (!std::isfinite(g)) throw precondition_error("invert_flux: g must be finite");
  if (g == 0.0) return 0.0;
  if (g < 0.0) return -invert_flux(phi, -g);

  switch (phi.kind()) {
    case PhiKind::ConstantOne:
      return g;
    case PhiKind::PowerLaw:
      return std::pow(g, 1.0 / (phi.exponent() - 1.0));
    default:
      break;
  }

  // Bracket [lo, hi] with G(lo) <= g <= G(hi); expand by doubling from |g|.
  double lo = 0.0;
  double hi = std::max(g, 1e-8);
  double f_hi = flux(phi, hi);
  int expansions = 0;
  while (f_hi < g) {
    lo = hi;
    hi *= 2.0;
    f_hi = flux(phi, hi);
    if (!std::isfinite(hi) || ++expansions > 2000)
      throw non_invertible_error("invert_flux: no bracket (flux map not onto)");
  }
  double f_lo = flux(phi, lo);

  // Alternate bisection and secant steps.
  double w = 0.5 * (lo + hi);
  for (int iter = 0; iter < 400; ++iter) {
    if (hi - lo <= 1e-13 * (std::abs(lo) + std::abs(hi))) break;
    double cand;
    if (iter % 2 == 0 || f_hi == f_lo) {
      cand = 0.5 * (lo + hi);
    } else {
      cand = lo + (g - f_lo) * (hi - lo) / (f_hi - f_lo);
      if (!(cand > lo && cand < hi)) cand = 0.5 * (lo + hi);
    }
    const double f_cand = flux(phi, cand);
    if (f_cand < g) {
      lo = cand;
      f_lo = f_cand;
    } else {
      hi = cand;
      f_hi = f_cand;
    }
    w = 0.5 * (lo + hi);
  }
  return w;
}

}  // namespace phigrad
