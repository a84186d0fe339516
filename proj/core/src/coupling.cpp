#include "phigrad/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace phigrad {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double bracket_from_degrees(int n, double dphi, double dpsi) {
  return ((n + 1) * (dphi + 1.0) - (n - 1) * (dpsi + 1.0)) / (n - 1);
}

// delta_psi <= c_l is required where psi > 0, delta_psi >= c_d where psi < 0.
double c_lower(int n, double l) { return (n + 1) * (l + 1.0) / (n - 1) - 1.0; }
double c_upper(int n, double d) { return (n + 1) * (d + 1.0) / (n - 1) - 1.0; }

bool has_pole_at_one(const PsiSpec& psi) {
  return psi.kind() == PsiKind::DoublePower ||
         psi.kind() == PsiKind::LogPower;
}

IntervalSet i_psi_double_power(const PsiSpec& psi, int n, double l, double d) {
  // psi > 0 on (0,1), < 0 on (1,inf), zero at 1.  On (0,1) delta_psi
  // decreases from m-1 to -inf; on (1,inf) it decreases from +inf to k-1.
  const double m = psi.m(), k = psi.k();
  const double cl = c_lower(n, l), cd = c_upper(n, d);

  IntervalSet left = IntervalSet::empty_set();
  if (m - 1.0 <= cl) {
    left = IntervalSet::interval(0.0, 1.0, false, false);
  } else {
    // m - 1 > cl guarantees k - 1 - cl > k - m > 0, so x > 0 up to rounding;
    // x <= 0 can only mean boundary equality m - 1 ~= cl, the whole-interval
    // case.
    const double x = 1.0 - (k - m) / (k - 1.0 - cl);
    if (x > 0.0) {
      const double t_star = std::pow(x, 2.0 / (k - m));
      left = IntervalSet::interval(t_star, 1.0, true, false);
    } else {
      left = IntervalSet::interval(0.0, 1.0, false, false);
    }
  }

  IntervalSet right;
  if (cd <= k - 1.0) {
    right = IntervalSet::interval(1.0, kInf, false, false);
  } else {
    const double x = 1.0 + (k - m) / (cd - k + 1.0);
    const double t_star = std::pow(x, 2.0 / (k - m));
    right = IntervalSet::interval(1.0, t_star, false, true);
  }

  return left.unite(IntervalSet::point(1.0)).unite(right);
}

IntervalSet i_psi_log_power(const PsiSpec& psi, int n, double l, double d) {
  const double a = psi.a(), q = psi.q(), m = psi.m();
  const double cl = c_lower(n, l), cd = c_upper(n, d);
  IntervalSet out = IntervalSet::empty_set();

  // The crossing point exp(2m / (c - q + 1)) can land on the wrong side of 1
  // when the denominator rounds to zero even though the branch comparison saw
  // a nonzero gap; such a degenerate crossing means boundary equality, which
  // is the whole-interval case.
  if (a < 0.0) {  // m > 0: psi > 0 on (0,1), zero at 1, < 0 on (1,inf)
    // (0,1): delta_psi decreases from q-1 to -inf
    const double t_lo = std::exp(2.0 * m / (cl - q + 1.0));
    if (q - 1.0 <= cl || !(t_lo < 1.0)) {
      out = out.unite(IntervalSet::interval(0.0, 1.0, false, false));
    } else {
      out = out.unite(IntervalSet::interval(t_lo, 1.0, true, false));
    }
    out = out.unite(IntervalSet::point(1.0));
    // (1,inf): delta_psi decreases from +inf to q-1
    const double t_hi = std::exp(2.0 * m / (cd - q + 1.0));
    if (cd <= q - 1.0 || !(t_hi > 1.0)) {
      out = out.unite(IntervalSet::interval(1.0, kInf, false, false));
    } else {
      out = out.unite(IntervalSet::interval(1.0, t_hi, false, true));
    }
  } else {  // a > 0, m < 0: psi < 0 on (0,1), unbounded at 1, > 0 on (1,inf)
    // (0,1): delta_psi increases from q-1 to +inf
    const double t_lo = std::exp(2.0 * m / (cd - q + 1.0));
    if (cd <= q - 1.0 || !(t_lo < 1.0)) {
      out = out.unite(IntervalSet::interval(0.0, 1.0, false, false));
    } else {
      out = out.unite(IntervalSet::interval(t_lo, 1.0, true, false));
    }
    // t = 1 excluded: psi is unbounded there.
    const double t_hi = std::exp(2.0 * m / (cl - q + 1.0));
    // (1,inf): delta_psi increases from -inf to q-1
    if (q - 1.0 <= cl || !(t_hi > 1.0)) {
      out = out.unite(IntervalSet::interval(1.0, kInf, false, false));
    } else {
      out = out.unite(IntervalSet::interval(1.0, t_hi, false, true));
    }
  }
  return out;
}

// Sampled membership test for GeneralSum: corner evaluation in s only.
bool general_sum_member(const PsiSpec& psi, int n, double l, double d, double t) {
  const double v = eval_psi(psi, t);
  if (v == 0.0) return true;
  double dpsi;
  try {
    dpsi = eval_delta_psi(psi, t);
  } catch (const pole_error&) {
    return true;  // grid point landed exactly on a zero
  }
  if (v > 0.0) return bracket_from_degrees(n, l, dpsi) >= 0.0;
  return bracket_from_degrees(n, d, dpsi) <= 0.0;
}

IntervalSet i_psi_general_sum(const PsiSpec& psi, int n, double l, double d) {
  // Dense log grid; consecutive member points become closed intervals.
  constexpr int kSamples = 20000;
  const double lo = std::log(1e-12), hi = std::log(1e12);
  IntervalSet out = IntervalSet::empty_set();
  double run_start = -1.0, prev_t = -1.0;
  bool in_run = false;
  for (int i = 0; i <= kSamples; ++i) {
    const double t = std::exp(lo + (hi - lo) * i / kSamples);
    const bool member = general_sum_member(psi, n, l, d, t);
    if (member && !in_run) {
      run_start = t;
      in_run = true;
    } else if (!member && in_run) {
      out = out.unite(IntervalSet::interval(run_start, prev_t, true, true));
      in_run = false;
    }
    if (member) prev_t = t;
  }
  if (in_run) {
    // Extend to the domain ends when the run touches the window edges.
    const double a = (run_start <= 2e-12) ? 0.0 : run_start;
    out = out.unite(IntervalSet::interval(a, kInf, a != 0.0, false));
  }
  return out;
}

}  // namespace

double bracket_value(const PhiSpec& phi, const PsiSpec& psi, int n, double s, double t) {
  const double dphi = (s > 0.0) ? eval_delta_phi(phi, s) : delta_phi_limits(phi).first;
  return bracket_from_degrees(n, dphi, eval_delta_psi(psi, t));
}

IntervalSet compute_i_psi(const PhiSpec& phi, const PsiSpec& psi, int n) {
  const DegreeBounds db = degree_bounds(phi);
  if (!(db.lo > -1.0) || !std::isfinite(db.hi))
    throw unsupported_family_error("compute_i_psi: phi violates the degree-bound condition");
  const double l = db.lo, d = db.hi;

  switch (psi.kind()) {
    case PsiKind::Zero:
      return IntervalSet::all_positive();
    case PsiKind::Power: {
      const double q = psi.q();
      const bool ok = (psi.a() > 0.0) ? ((n + 1) * (l + 1.0) >= (n - 1) * q)
                                      : ((n + 1) * (d + 1.0) <= (n - 1) * q);
      return ok ? IntervalSet::all_positive() : IntervalSet::empty_set();
    }
    case PsiKind::DoublePower:
      return i_psi_double_power(psi, n, l, d);
    case PsiKind::LogPower:
      return i_psi_log_power(psi, n, l, d);
    case PsiKind::GeneralSum:
      return i_psi_general_sum(psi, n, l, d);
  }
  throw unsupported_family_error("compute_i_psi: unknown psi family");
}

namespace {

// One-sided delta_psi value at a complement-piece endpoint.  `from_right`
// says the piece lies to the right of t.
double delta_psi_endpoint(const PsiSpec& psi, double t, bool from_right) {
  if (t == 0.0 || std::isinf(t)) {
    switch (psi.kind()) {
      case PsiKind::Power:
        return psi.q() - 1.0;
      case PsiKind::DoublePower:
        return (t == 0.0) ? psi.m() - 1.0 : psi.k() - 1.0;
      case PsiKind::LogPower:
        return psi.q() - 1.0;
      default:
        throw unsupported_family_error("delta_psi_endpoint: no closed-form limit");
    }
  }
  if (has_pole_at_one(psi) && t == 1.0) {
    const auto [left, right] = delta_psi_pole_limits(psi);
    return from_right ? right : left;
  }
  return eval_delta_psi(psi, t);
}

double theta_from_candidates(int n, double l, double d,
                             const std::vector<double>& dpsi_values) {
  double theta = -kInf;
  for (double dpsi : dpsi_values) {
    if (std::isinf(dpsi)) return kInf;
    for (double dphi : {l, d}) {
      const double b = bracket_from_degrees(n, dphi, dpsi);
      theta = std::max(theta, b * b);
    }
  }
  return theta;
}

double theta_big_sampled(const PhiSpec& phi, const PsiSpec& psi, int n,
                         const IntervalSet& complement) {
  const DegreeBounds db = degree_bounds(phi);
  double theta = -kInf;
  for (const auto& part : complement.parts()) {
    const double a = std::max(part.lo, 1e-12);
    const double b = std::isinf(part.hi) ? 1e12 : part.hi;
    if (!(b > a)) continue;
    constexpr int kSamples = 4000;
    const double la = std::log(a), lb = std::log(b);
    for (int i = 0; i <= kSamples; ++i) {
      const double t = std::exp(la + (lb - la) * i / kSamples);
      double dpsi;
      try {
        dpsi = eval_delta_psi(psi, t);
      } catch (const pole_error&) {
        continue;
      }
      for (double dphi : {db.lo, db.hi}) {
        const double v = bracket_from_degrees(n, dphi, dpsi);
        theta = std::max(theta, v * v);
      }
    }
  }
  return theta;
}

}  // namespace

double compute_theta_big(const PhiSpec& phi, const PsiSpec& psi, int n,
                         const IntervalSet& i_psi) {
  const IntervalSet complement = i_psi.complement_in_positive();
  if (complement.empty()) return -kInf;

  if (psi.kind() == PsiKind::GeneralSum)
    return theta_big_sampled(phi, psi, n, complement);

  const DegreeBounds db = degree_bounds(phi);
  std::vector<double> candidates;
  for (const auto& part : complement.parts()) {
    const bool isolated = (part.lo == part.hi);
    if (isolated && has_pole_at_one(psi) && part.lo == 1.0) {
      // Isolated pole point: delta_psi is undefined there and the point is
      // not an accumulation point of the complement; it contributes nothing.
      continue;
    }
    // delta_psi is monotone on each piece (pieces never straddle t = 1),
    // so the closure of its range is spanned by the endpoint limits.
    candidates.push_back(delta_psi_endpoint(psi, part.lo, true));
    if (!isolated) candidates.push_back(delta_psi_endpoint(psi, part.hi, false));
  }
  return theta_from_candidates(n, db.lo, db.hi, candidates);
}

Psi2Check check_psi2(double theta_big, double gamma, int n) {
  const double threshold = 4.0 * gamma / (n - 1);
  if (theta_big == -kInf) return {true, kInf};
  return {theta_big < threshold, threshold - theta_big};
}

std::pair<double, double> theta_alpha(double gamma, double theta_big, double d, int n) {
  if (theta_big == -kInf) return {gamma, 0.0};
  const double theta = gamma - theta_big * (n - 1) / 4.0;
  return {theta, theta_big * (d + 1.0) / (4.0 * theta)};
}

IterationConstants iteration_constants(const DegreeProfile& profile) {
  if (!profile.phi1_ok || !profile.phi2_ok)
    throw precondition_error("iteration_constants: degree conditions do not hold");
  const double l = profile.l, d = profile.d;
  IterationConstants c;
  c.a0 = profile.Gamma + (d + 1.0) * (d + 1.0) + 2.0 * (d + 1.0);
  c.a1 = std::min(1.0 + l, 1.0);
  c.a2 = 4.0 * std::max({1.0, std::abs(l), std::abs(d)});
  c.a3 = std::max(std::abs(l), std::abs(d)) * std::max({1.0, std::abs(l), std::abs(d)});
  c.b_threshold = std::max({2.0 * (c.a0 + c.a3) * (c.a0 + c.a3) / (c.a1 * profile.gamma),
                            d, 1.0});
  return c;
}

CouplingProfile analyze_coupling(const PhiSpec& phi, const PsiSpec& psi,
                                 const DegreeProfile& profile) {
  if (!profile.phi1_ok)
    throw precondition_error("analyze_coupling: degree bounds (l, d) not admissible");
  CouplingProfile cp;
  cp.i_psi = compute_i_psi(phi, psi, profile.n);
  cp.theta_big = compute_theta_big(phi, psi, profile.n, cp.i_psi);
  const Psi2Check chk = check_psi2(cp.theta_big, profile.gamma, profile.n);
  cp.threshold = 4.0 * profile.gamma / (profile.n - 1);
  cp.psi2_ok = chk.ok;
  if (chk.ok) {
    std::tie(cp.theta_small, cp.alpha) =
        theta_alpha(profile.gamma, cp.theta_big, profile.d, profile.n);
  } else {
    cp.theta_small = profile.gamma - cp.theta_big * (profile.n - 1) / 4.0;
    cp.alpha = std::numeric_limits<double>::quiet_NaN();
  }
  cp.method = (psi.kind() == PsiKind::GeneralSum) ? CouplingProfile::Method::Sampled
                                                  : CouplingProfile::Method::ClosedForm;
  return cp;
}

}  // namespace phigrad
