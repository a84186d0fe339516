#include "phigrad/radial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "phigrad/degree.hpp"

namespace phigrad {

double ModelSpace::warp(double r) const {
  if (k == 0.0) return r;
  const double sk = std::sqrt(k);
  return std::sinh(sk * r) / sk;
}

double ModelSpace::warp_pow(double r) const {
  return std::pow(warp(r), n - 1);
}

namespace {

// 4-point Gauss-Legendre nodes/weights on [0, 1].
constexpr double kGx[4] = {0.06943184420297371, 0.33000947820757187,
                           0.6699905217924281, 0.9305681557970262};
constexpr double kGw[4] = {0.17392742256872692, 0.3260725774312731,
                           0.3260725774312731, 0.17392742256872692};

// integral of s(rho)^(n-1) over [0, r]
double warp_pow_integral(const ModelSpace& space, double r) {
  double acc = 0.0;
  for (int i = 0; i < 4; ++i) acc += kGw[i] * space.warp_pow(r * kGx[i]);
  return acc * r;
}

// s'(r)/s(r); ~ 1/r near 0, stays O(1) away from it.
double warp_log_deriv(const ModelSpace& space, double r) {
  if (space.k == 0.0) return 1.0 / r;
  const double sk = std::sqrt(space.k);
  return sk * std::cosh(sk * r) / std::sinh(sk * r);
}

struct State {
  double u;
  double V;  // G(u'); the flux per unit area, s^(n-1) G(u') = s^(n-1) V
};

}  // namespace

RadialSolution solve_radial(const PhiSpec& phi, const PsiSpec& psi,
                            const ModelSpace& space, double u0, double R, double h) {
  {
    const DegreeBounds db = degree_bounds(phi);
    if (!(db.lo > -1.0) || !std::isfinite(db.hi))
      throw precondition_error("solve_radial: flux map not invertible for this operator");
  }
  if (!(u0 > 0.0)) throw precondition_error("solve_radial: u0 must be positive");
  if (!(h > 0.0) || h > R / 100.0)
    throw precondition_error("solve_radial: need 0 < h <= R/100");

  const double reaction0 = eval_psi(psi, u0 * u0) * u0;

  // State is (u, V) with V = G(u'); the raw flux s^(n-1) G(u') makes RK4
  // degrade to second order near r = 0 because stage errors get amplified
  // by 1/s^(n-1).  In the V form the rhs is analytic at the origin.
  const auto rhs = [&](double r, const State& st) -> State {
    const double w = invert_flux(phi, st.V);
    return {w, -eval_psi(psi, st.u * st.u) * st.u -
                   (space.n - 1) * warp_log_deriv(space, r) * st.V};
  };
  const auto rk4 = [&](double r, const State& st, double dt) -> State {
    const State k1 = rhs(r, st);
    const State k2 = rhs(r + dt / 2, {st.u + dt / 2 * k1.u, st.V + dt / 2 * k1.V});
    const State k3 = rhs(r + dt / 2, {st.u + dt / 2 * k2.u, st.V + dt / 2 * k2.V});
    const State k4 = rhs(r + dt, {st.u + dt * k3.u, st.V + dt * k3.V});
    return {st.u + dt / 6 * (k1.u + 2 * k2.u + 2 * k3.u + k4.u),
            st.V + dt / 6 * (k1.V + 2 * k2.V + 2 * k3.V + k4.V)};
  };

  // Series start at eps = h/10: V from the leading reaction term, u from
  // quadrature of the induced slope; both errors are far below the
  // integrator's budget at eps = h/10.
  const double eps = h / 10.0;
  State st;
  st.V = -reaction0 * warp_pow_integral(space, eps) / space.warp_pow(eps);
  {
    double du_acc = 0.0;
    for (int i = 0; i < 4; ++i) {
      const double rho = eps * kGx[i];
      const double g = -reaction0 * warp_pow_integral(space, rho) / space.warp_pow(rho);
      du_acc += kGw[i] * invert_flux(phi, g);
    }
    st.u = u0 + du_acc * eps;
  }

  RadialSolution sol;
  const auto record = [&](double r, double u, double w) {
    sol.grid.push_back(r);
    sol.u.push_back(u);
    sol.du.push_back(w);
    sol.flux.push_back(flux(phi, w));
    sol.h_hat.push_back((w / u) * (w / u));
  };
  record(0.0, u0, 0.0);

  const long long total = std::llround(2.0 * R / h);
  bool positive = true;
  double r = eps;
  st = rk4(r, st, h - eps);  // lands on the first grid node
  r = h;
  for (long long j = 1; j <= total; ++j) {
    if (!std::isfinite(st.u) || !std::isfinite(st.V) || st.u <= 0.0) {
      positive = false;
      break;
    }
    record(r, st.u, invert_flux(phi, st.V));
    if (j == total) break;
    st = rk4(r, st, h);
    r = (j + 1) * h;
  }

  // Flux-identity audit: F(r) + integral_0^r s^(n-1) psi(u^2) u = 0.
  // Cumulative composite Simpson, checked at even nodes.
  double residual_max = 0.0, flux_scale = 0.0;
  {
    const std::size_t nodes = sol.grid.size();
    std::vector<double> g(nodes);
    for (std::size_t j = 0; j < nodes; ++j)
      g[j] = space.warp_pow(sol.grid[j]) * eval_psi(psi, sol.u[j] * sol.u[j]) * sol.u[j];
    std::vector<double> F_total(nodes);
    for (std::size_t j = 0; j < nodes; ++j)
      F_total[j] = space.warp_pow(sol.grid[j]) * sol.flux[j];
    for (double v : F_total) flux_scale = std::max(flux_scale, std::abs(v));
    double integral = 0.0;
    for (std::size_t j = 2; j < nodes; j += 2) {
      integral += h / 3.0 * (g[j - 2] + 4.0 * g[j - 1] + g[j]);
      residual_max = std::max(residual_max, std::abs(F_total[j] + integral));
    }
    if (flux_scale > 0.0) residual_max /= flux_scale;
    if (residual_max > 1e-6)
      throw solver_error("solve_radial: flux-identity audit failed; reduce the step size");
  }

  RadialDiagnostics& diag = sol.diagnostics;
  diag.positive_ok = positive;
  diag.residual_max = residual_max;
  diag.sup_ratio = 0.0;
  double u_max = -std::numeric_limits<double>::infinity(), u_min = -u_max;
  for (std::size_t j = 0; j < sol.grid.size() && sol.grid[j] <= R * (1 + 1e-12); ++j) {
    diag.sup_ratio = std::max(diag.sup_ratio, std::abs(sol.du[j]) / sol.u[j]);
    u_max = std::max(u_max, sol.u[j]);
    u_min = std::min(u_min, sol.u[j]);
  }
  const double norm = 1.0 + std::sqrt(space.K()) * R;
  diag.c_hat = diag.sup_ratio * R / norm;
  diag.harnack_log = std::log(u_max / u_min) / norm;
  return sol;
}

RadialDiagnostics verify_estimate(const RadialSolution& sol, const ModelSpace& space,
                                  double R) {
  (void)space;
  if (!sol.diagnostics.positive_ok)
    throw precondition_error("verify_estimate: solution not positive on the double ball");
  if (sol.grid.empty() || sol.grid.back() < 2.0 * R * (1 - 1e-12))
    throw precondition_error("verify_estimate: solution does not reach radius 2R");
  return sol.diagnostics;
}

std::vector<SweepRow> sweep_radii(const PhiSpec& phi, const PsiSpec& psi,
                                  const ModelSpace& space, double u0,
                                  const std::vector<double>& radii, double h) {
  for (std::size_t i = 1; i < radii.size(); ++i)
    if (!(radii[i] > radii[i - 1]))
      throw precondition_error("sweep_radii: radii must be increasing");
  std::vector<SweepRow> rows;
  for (double R : radii) {
    const RadialSolution sol = solve_radial(phi, psi, space, u0, R, h);
    rows.push_back({R, sol.diagnostics.c_hat, sol.diagnostics.harnack_log,
                    sol.diagnostics.positive_ok, sol.diagnostics.residual_max});
  }
  return rows;
}

}  // namespace phigrad
