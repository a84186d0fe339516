#include "phigrad/verdict.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace phigrad {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// The shared square-root slack of the sharp reaction inequalities:
// 2*sqrt((p1-1)^2/(n-1)^2 - (pr-p1)^2/(2(n-1))).  Real exactly when n < N1.
double sqrt_slack(double p_min, double p_max, int n) {
  const double rad = (p_min - 1.0) * (p_min - 1.0) / ((n - 1.0) * (n - 1.0)) -
                     (p_max - p_min) * (p_max - p_min) / (2.0 * (n - 1.0));
  if (rad < 0.0)
    throw precondition_error("reaction theorem: dimension at or above the first critical dimension");
  return 2.0 * std::sqrt(rad);
}

void require_below(int n, double limit, const char* which) {
  if (!(static_cast<double>(n) < limit)) {
    std::ostringstream os;
    os << "reaction theorem: requires n < " << which;
    throw precondition_error(os.str());
  }
}

}  // namespace

std::pair<double, double> critical_dimensions(double p_min, double p_max) {
  if (!(p_min > 1.0) || !(p_max >= p_min))
    throw precondition_error("critical_dimensions: need 1 < p_min <= p_max");
  if (p_max == p_min) return {kInf, kInf};
  const double ratio = (p_min - 1.0) / (p_max - p_min);
  const double n1 = 2.0 * ratio * ratio + 1.0;
  return {n1, std::sqrt(2.0 * n1 + 3.0) - 2.0};
}

bool corollary_pq(double p, double q, int n) {
  if (p == q) return true;
  return (n - 1.0) * (p - q) * (p - q) < 4.0 * (p - 1.0) * (q - 1.0);
}

bool corollary_weighted(const std::vector<double>& p_list, int n) {
  if (p_list.empty()) throw precondition_error("corollary_weighted: empty exponent list");
  const auto [lo, hi] = std::minmax_element(p_list.begin(), p_list.end());
  if (*lo == *hi) return true;
  return (n - 1.0) * (*hi - *lo) * (*hi - *lo) < 2.0 * (*lo - 1.0) * (*lo - 1.0);
}

bool theorem_power_reaction(double p_min, double p_max, double a, double q, int n) {
  require_below(n, critical_dimensions(p_min, p_max).first, "the first critical dimension");
  const double slack = sqrt_slack(p_min, p_max, n);
  const double ratio = (n + 1.0) / (n - 1.0);
  if (a > 0.0) return (q - slack) / (p_min - 1.0) < ratio;
  if (a < 0.0) return (q + slack) / (p_max - 1.0) > ratio;
  throw precondition_error("theorem_power_reaction: a must be nonzero");
}

bool theorem_double_power(double p_min, double p_max, double m, double k, int n) {
  if (!(m < k)) throw precondition_error("theorem_double_power: need m < k");
  const auto [n1, n2] = critical_dimensions(p_min, p_max);
  require_below(n, n1, "the first critical dimension");
  const double ratio = (n + 1.0) / (n - 1.0);
  if (m / (p_min - 1.0) <= ratio && k / (p_max - 1.0) >= ratio) return true;
  if (!(static_cast<double>(n) < n2)) return false;
  const double slack = sqrt_slack(p_min, p_max, n);
  return (m - slack) / (p_min - 1.0) < ratio && (k + slack) / (p_max - 1.0) > ratio;
}

bool theorem_log_reaction(double p_min, double p_max, double a, double q,
                          double m, int n) {
  if (!(a * m < 0.0)) throw precondition_error("theorem_log_reaction: need a*m < 0");
  require_below(n, critical_dimensions(p_min, p_max).second, "the second critical dimension");
  const double slack = sqrt_slack(p_min, p_max, n);
  const double ratio = (n + 1.0) / (n - 1.0);
  return (q + slack) / (p_max - 1.0) > ratio && (q - slack) / (p_min - 1.0) < ratio;
}

std::optional<double> psi_positive_root(const PsiSpec& psi) {
  switch (psi.kind()) {
    case PsiKind::Zero:
      throw precondition_error("psi_positive_root: psi vanishes identically");
    case PsiKind::Power:
      return std::nullopt;
    case PsiKind::DoublePower:
      return 1.0;
    case PsiKind::LogPower:
      // m > 0: psi vanishes at t = 1; m < 0: psi blows up there instead.
      return psi.m() > 0.0 ? std::optional<double>(1.0) : std::nullopt;
    case PsiKind::GeneralSum: {
      // Bisection on sign changes over a log grid.
      constexpr int kSamples = 8192;
      const double lo = std::log(1e-10), hi = std::log(1e10);
      double prev_t = std::exp(lo), prev_v = eval_psi(psi, prev_t);
      for (int i = 1; i <= kSamples; ++i) {
        const double t = std::exp(lo + (hi - lo) * i / kSamples);
        const double v = eval_psi(psi, t);
        if (v == 0.0) return t;
        if (prev_v * v < 0.0) {
          double a = prev_t, b = t;
          for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (a + b);
            const double vm = eval_psi(psi, mid);
            if (vm == 0.0) return mid;
            if (vm * prev_v < 0.0) b = mid; else a = mid;
          }
          return 0.5 * (a + b);
        }
        prev_t = t;
        prev_v = v;
      }
      return std::nullopt;
    }
  }
  throw unsupported_family_error("psi_positive_root: unknown psi family");
}

Verdict classify(const PhiSpec& phi, const PsiSpec& psi, int n,
                 bool assume_nonneg_ricci_bounded) {
  if (n < 2) throw precondition_error("classify: n must be >= 2");
  Verdict v;
  v.degree = analyze_degree(phi, n);

  if (!v.degree->phi1_ok) {
    v.status = Verdict::Status::NotApplicable;
    v.failed = Verdict::FailedCondition::Phi1;
    std::ostringstream os;
    os << "degree bounds inadmissible: l = " << v.degree->l << ", d = " << v.degree->d;
    v.detail = os.str();
    return v;
  }
  if (!v.degree->phi2_ok) {
    v.status = Verdict::Status::NotApplicable;
    v.failed = Verdict::FailedCondition::Phi2;
    std::ostringstream os;
    os << "curvature-term bound fails: gamma = " << v.degree->gamma
       << ", Gamma = " << v.degree->Gamma;
    v.detail = os.str();
    return v;
  }

  v.coupling = analyze_coupling(phi, psi, *v.degree);
  if (!v.coupling->psi2_ok) {
    v.status = Verdict::Status::NotApplicable;
    v.failed = Verdict::FailedCondition::Psi2;
    std::ostringstream os;
    os << "coupling supremum too large: Theta = " << v.coupling->theta_big
       << " >= threshold " << v.coupling->threshold;
    v.detail = os.str();
    return v;
  }

  v.constants = iteration_constants(*v.degree);
  v.status = Verdict::Status::EstimateHolds;

  if (assume_nonneg_ricci_bounded) {
    v.status = Verdict::Status::Liouville;
    if (psi.kind() == PsiKind::Zero) {
      v.liouville = Verdict::LiouvilleKind::ConstantSolution;
      v.constant_value = std::numeric_limits<double>::quiet_NaN();
    } else if (const auto root = psi_positive_root(psi)) {
      v.liouville = Verdict::LiouvilleKind::ConstantSolution;
      v.constant_value = std::sqrt(*root);
    } else {
      v.liouville = Verdict::LiouvilleKind::NoPositiveBoundedSolution;
    }
  }
  return v;
}

}  // namespace phigrad
