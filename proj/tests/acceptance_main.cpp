// End-to-end acceptance gate.  Each criterion prints exactly one PASS/FAIL
// line; the process exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "phigrad/coupling.hpp"
#include "phigrad/degree.hpp"
#include "phigrad/radial.hpp"
#include "phigrad/reports.hpp"
#include "phigrad/verdict.hpp"

using namespace phigrad;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Outcome {
  bool pass;
  std::string detail;
};

std::vector<double> linspace(double lo, double hi, int steps) {
  std::vector<double> out;
  for (int i = 0; i < steps; ++i)
    out.push_back(steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1));
  return out;
}

// ---------------------------------------------------------------- 1
Outcome closed_form_profiles() {
  std::ostringstream why;
  bool ok = true;
  const auto expect = [&](bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      why << what << "; ";
    }
  };
  for (int n : {3, 5}) {
    const auto plain = analyze_degree(PhiSpec::constant_one(), n);
    expect(plain.l == 0.0 && plain.d == 0.0 && plain.Gamma == 1.0 / (n - 1) &&
               plain.gamma == 1.0 / (n - 1),
           "plain operator profile");
    for (double p : {1.5, 2.0, 3.0}) {
      const auto prof = analyze_degree(PhiSpec::power_law(p), n);
      expect(prof.l == p - 2.0 && prof.d == p - 2.0 &&
                 prof.Gamma == (p - 1.0) * (p - 1.0) / (n - 1),
             "single-exponent profile");
      expect(prof.gamma >= *prof.gamma_closed - 1e-9, "single-exponent gamma");
    }
    for (auto [p, q] : {std::pair{2.0, 4.0}, {3.0, 5.0}}) {
      const auto prof = analyze_degree(PhiSpec::sum_of_powers({{1, p}, {1, q}}), n);
      expect(prof.l == p - 2.0 && prof.d == q - 2.0, "two-exponent degree bounds");
      expect(prof.Gamma == (q - 1.0) * (q - 1.0) / (n - 1), "two-exponent Gamma");
      expect(prof.gamma >= *prof.gamma_closed - 1e-9, "two-exponent gamma");
    }
    const auto wt =
        analyze_degree(PhiSpec::sum_of_powers({{1, 2}, {1, 2.5}, {1, 3}}), n);
    expect(wt.l == 0.0 && wt.d == 1.0 && wt.Gamma == 4.0 / (n - 1),
           "weighted profile");
    expect(wt.gamma >= *wt.gamma_closed - 1e-9, "weighted gamma");
  }
  return {ok, why.str()};
}

// ---------------------------------------------------------------- 2
Outcome corollary_oracle_grid() {
  int checked = 0, mismatches = 0;
  for (double p : linspace(1.0 + 4.0 / 30.0, 5.0, 30)) {
    for (double q : linspace(1.0 + 4.0 / 30.0, 5.0, 30)) {
      const PhiSpec phi = (p == q)
          ? PhiSpec::sum_of_powers({{1.0, p}})
          : PhiSpec::sum_of_powers({{1.0, std::min(p, q)}, {1.0, std::max(p, q)}});
      for (int n = 2; n <= 10; ++n) {
        const double margin = 4.0 * (p - 1.0) * (q - 1.0) - (n - 1.0) * (p - q) * (p - q);
        if (std::abs(margin) < 1e-10) continue;
        const Verdict v = classify(phi, PsiSpec::zero(), n, false);
        const bool applicable = v.status != Verdict::Status::NotApplicable;
        ++checked;
        if (applicable != (margin > 0.0)) ++mismatches;
      }
    }
  }
  std::ostringstream why;
  why << checked << " cells, " << mismatches << " mismatches";
  return {mismatches == 0, why.str()};
}

// ---------------------------------------------------------------- 3
Outcome specialized_rows() {
  int mismatches = 0, checked = 0;
  for (double p : linspace(1.2, 3.0, 8)) {
    for (int n : {2, 3, 5}) {
      const auto prof = analyze_degree(PhiSpec::power_law(p), n);
      const double cap = (n + 3.0) / (n - 1.0) * (p - 1.0);
      for (double q : linspace(0.2, 6.0, 30)) {
        for (double a : {1.0, -1.0}) {
          const double boundary = (a > 0) ? cap : p - 1.0;
          if (std::abs(q - boundary) < 1e-9) continue;
          const auto cp = analyze_coupling(PhiSpec::power_law(p), PsiSpec::power(a, q), prof);
          const bool expected = (a > 0) ? q < cap : q > p - 1.0;
          ++checked;
          if (cp.psi2_ok != expected) ++mismatches;
        }
        // double-power reaction, m = q against a spread of k
        for (double k : {0.6, 1.4, 2.7, 6.5}) {
          if (!(q < k)) continue;
          if (std::abs(q - cap) < 1e-9 || std::abs(k - (p - 1.0)) < 1e-9) continue;
          const auto cp = analyze_coupling(PhiSpec::power_law(p),
                                           PsiSpec::double_power(q, k), prof);
          ++checked;
          if (cp.psi2_ok != (q < cap && k > p - 1.0)) ++mismatches;
        }
        // log reaction: admissible iff p-1 < q < cap
        if (q <= 0.0) continue;
        if (std::abs(q - cap) < 1e-9 || std::abs(q - (p - 1.0)) < 1e-9) continue;
        const auto cp_log =
            analyze_coupling(PhiSpec::power_law(p), PsiSpec::log_power(-1.0, q, 1.0), prof);
        ++checked;
        if (cp_log.psi2_ok != (q > p - 1.0 && q < cap)) ++mismatches;
      }
    }
  }
  std::ostringstream why;
  why << checked << " cells, " << mismatches << " mismatches";
  return {mismatches == 0, why.str()};
}

// ---------------------------------------------------------------- 4
Outcome critical_dimension_checks() {
  std::ostringstream why;
  bool ok = true;
  const auto [n1, n2] = critical_dimensions(2.0, 3.0);
  if (!(n1 == 3.0 && n2 == 1.0)) {
    ok = false;
    why << "N(2,3) = (" << n1 << ", " << n2 << "); ";
  }
  const auto same = critical_dimensions(2.7, 2.7);
  if (!(same.first == kInf && same.second == kInf)) {
    ok = false;
    why << "N(p,p) not infinite; ";
  }
  bool threw = false;
  try {
    theorem_double_power(2.0, 3.0, 1.0, 3.0, 3);  // N1 = 3, n = 3 is not below it
  } catch (const precondition_error&) {
    threw = true;
  }
  if (!threw) {
    ok = false;
    why << "dimension gate not enforced; ";
  }
  return {ok, why.str()};
}

// ---------------------------------------------------------------- 5
Outcome theta_sampling_oracle() {
  std::mt19937 rng(20240826);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int worst_idx = -1;
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const double p1 = 1.3 + 1.5 * u(rng);
    const double pr = p1 + 0.5 + 1.5 * u(rng);
    PhiSpec phi = PhiSpec::constant_one();
    switch (trial % 3) {
      case 0: phi = PhiSpec::power_law(p1); break;
      case 1: phi = PhiSpec::sum_of_powers({{1.0, p1}, {0.5 + u(rng), pr}}); break;
      default: break;
    }
    PsiSpec psi = PsiSpec::power(u(rng) < 0.5 ? 1.0 : -1.0, 0.5 + 4.0 * u(rng));
    if (trial % 2 == 0) {
      const double m = 3.0 * u(rng) - 0.5;
      psi = PsiSpec::double_power(m, m + 0.7 + 2.5 * u(rng));
    }
    const int n = 2 + trial % 6;

    const IntervalSet set = compute_i_psi(phi, psi, n);
    const double theta = compute_theta_big(phi, psi, n, set);

    // dense sampling: 400 log-spaced points per axis, plus exact finite
    // endpoints and the analytic limits of both degree functions
    const auto db = degree_bounds(phi);
    std::vector<double> dphi_vals = {db.lo, db.hi};
    for (int i = 0; i <= 400; ++i)
      dphi_vals.push_back(eval_delta_phi(phi, std::exp(-40.0 + 80.0 * i / 400.0)));
    std::vector<double> dpsi_vals;
    const auto push_t = [&](double t) {
      try {
        dpsi_vals.push_back(eval_delta_psi(psi, t));
      } catch (const pole_error&) {
      }
    };
    const IntervalSet comp = set.complement_in_positive();
    for (const auto& part : comp.parts()) {
      if (part.lo == 0.0)
        dpsi_vals.push_back(psi.kind() == PsiKind::DoublePower ? psi.m() - 1.0
                                                               : psi.q() - 1.0);
      else
        push_t(part.lo);
      if (std::isinf(part.hi))
        dpsi_vals.push_back(psi.kind() == PsiKind::DoublePower ? psi.k() - 1.0
                                                               : psi.q() - 1.0);
      else
        push_t(part.hi);
      const double a = std::max(part.lo, 1e-12);
      const double b = std::isinf(part.hi) ? 1e12 : part.hi;
      if (b > a)
        for (int i = 0; i <= 400; ++i)
          push_t(std::exp(std::log(a) + (std::log(b) - std::log(a)) * i / 400.0));
    }
    double sampled = -kInf;
    for (double dpsi : dpsi_vals)
      for (double dphi : dphi_vals) {
        const double br = ((n + 1) * (dphi + 1.0) - (n - 1) * (dpsi + 1.0)) / (n - 1);
        sampled = std::max(sampled, br * br);
      }

    if (theta == -kInf && sampled == -kInf) continue;
    const double rel = std::abs(theta - sampled) / std::max(std::abs(sampled), 1e-300);
    if (rel > worst) {
      worst = rel;
      worst_idx = trial;
    }
  }
  std::ostringstream why;
  why << "worst relative deviation " << worst << " (trial " << worst_idx << ")";
  return {worst <= 1e-6, why.str()};
}

// ---------------------------------------------------------------- 6
Outcome radial_convergence() {
  const ModelSpace space{3, 0.0};
  std::vector<double> errs;
  for (double h : {4e-3, 2e-3, 1e-3}) {
    const auto sol = solve_radial(PhiSpec::constant_one(), PsiSpec::power(1.0, 1.0),
                                  space, 1.0, 1.0, h);
    double max_err = 0.0;
    for (std::size_t j = 0; j < sol.grid.size(); ++j) {
      const double r = sol.grid[j];
      const double exact = r == 0.0 ? 1.0 : std::sin(r) / r;
      max_err = std::max(max_err, std::abs(sol.u[j] - exact));
    }
    errs.push_back(max_err);
  }
  const double order1 = std::log2(errs[0] / errs[1]);
  const double order2 = std::log2(errs[1] / errs[2]);
  std::ostringstream why;
  why << "max error at h=1e-3: " << errs[2] << ", observed orders " << order1 << ", "
      << order2;
  return {errs[2] < 1e-9 && order1 >= 3.5 && order2 >= 3.5, why.str()};
}

// ---------------------------------------------------------------- 7
Outcome gradient_estimate_surrogate() {
  const ModelSpace space{3, 0.0};
  const PsiSpec ac = PsiSpec::double_power(1.0, 3.0);
  std::ostringstream why;
  bool ok = true;
  for (double u0 : {0.3, 0.5, 0.8}) {
    const auto rows =
        sweep_radii(PhiSpec::constant_one(), ac, space, u0, {1.0, 2.0, 4.0, 8.0}, 1e-3);
    std::vector<double> c;
    for (const auto& row : rows) {
      if (!row.positive_ok) {
        ok = false;
        why << "u0=" << u0 << " R=" << row.R << " lost positivity; ";
      }
      c.push_back(row.c_hat);
    }
    std::vector<double> sorted = c;
    std::sort(sorted.begin(), sorted.end());
    const double median = 0.5 * (sorted[1] + sorted[2]);
    const double max = sorted.back();
    if (median > 0.0 && max > 1.25 * median) {
      ok = false;
      why << "u0=" << u0 << " c_hat max " << max << " > 1.25x median " << median
          << "; ";
    }
  }
  const auto fixed =
      sweep_radii(PhiSpec::constant_one(), ac, space, 1.0, {1.0, 2.0, 4.0, 8.0}, 1e-3);
  for (const auto& row : fixed)
    if (row.c_hat > 1e-12) {
      ok = false;
      why << "constant-root run has c_hat " << row.c_hat << "; ";
    }
  return {ok, why.str()};
}

// ---------------------------------------------------------------- 8
Outcome figure3_scan() {
  RunConfig cfg;
  cfg.n = 3;
  ScanConfig sc;
  sc.mode = "mk";
  sc.min1 = 0.25; sc.max1 = 4.75; sc.steps1 = 10;
  sc.min2 = 0.75; sc.max2 = 5.25; sc.steps2 = 10;
  sc.compare_layer = true;
  cfg.scan = sc;

  std::ostringstream csv, err;
  ReportOptions opts;
  const int code = run_command("scan", cfg, csv, err, opts);
  if (code != 0) return {false, "scan exited with " + std::to_string(code)};

  std::istringstream in(csv.str());
  std::string line;
  std::getline(in, line);  // header
  bool ok = true;
  bool strictly_larger = false;
  std::ostringstream why;
  while (std::getline(in, line)) {
    double m, k, margin;
    int value, compare;
    if (std::sscanf(line.c_str(), "%lf,%lf,%d,%lf,%d", &m, &k, &value, &margin,
                    &compare) != 5)
      return {false, "unparseable CSV row: " + line};
    const bool expected = m < 3.0 && k > 1.0 && m < k;
    if (value == 2) continue;  // boundary cells are marked, not classified
    if ((value == 1) != expected) {
      ok = false;
      why << "cell (" << m << "," << k << ") value " << value << "; ";
    }
    if (compare == 1 && value != 1) {
      ok = false;
      why << "comparison region escapes the admissible set at (" << m << "," << k
          << "); ";
    }
    if (value == 1 && compare == 0) strictly_larger = true;
  }
  if (!strictly_larger) {
    ok = false;
    why << "admissible set does not strictly contain the comparison region; ";
  }
  return {ok, why.str()};
}

// ---------------------------------------------------------------- 9
Outcome determinism() {
#ifndef PHIGRAD_CLI_PATH
  return {false, "CLI path not provided"};
#else
  const std::string cli = PHIGRAD_CLI_PATH;
  const std::string dir = "acceptance_tmp";
  if (std::system(("mkdir -p " + dir).c_str()) != 0)
    return {false, "could not create scratch directory"};
  const std::string cfg_scan = dir + "/scan.cfg";
  {
    std::ofstream f(cfg_scan);
    f << "n = 4\nscan.mode = pq\nscan.min1 = 1.1\nscan.max1 = 5\nscan.steps1 = 40\n"
         "scan.min2 = 1.1\nscan.max2 = 5\nscan.steps2 = 40\n";
  }
  const std::string cfg_verify = dir + "/verify.cfg";
  {
    std::ofstream f(cfg_verify);
    f << "psi.kind = power\npsi.a = 1\npsi.q = 1\nsolver.u0 = 1\n"
         "solver.radii = 0.5, 1\nsolver.h = 0.005\n";
  }
  const auto slurp = [](const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
  };
  for (const auto& [name, cfg] :
       {std::pair{std::string("scan"), cfg_scan}, {std::string("verify"), cfg_verify}}) {
    for (int run = 1; run <= 2; ++run) {
      const std::string cmd = cli + " " + name + " --config " + cfg + " --csv " + dir +
                              "/" + name + std::to_string(run) + ".csv > /dev/null";
      if (std::system(cmd.c_str()) != 0)
        return {false, name + " run " + std::to_string(run) + " failed"};
    }
    const std::string a = slurp(dir + "/" + name + "1.csv");
    const std::string b = slurp(dir + "/" + name + "2.csv");
    if (a.empty() || a != b) return {false, name + " CSV outputs differ"};
  }
  return {true, ""};
#endif
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> fn;
    double budget_seconds;
  };
  const std::vector<Criterion> criteria = {
      {"1 closed-form operator profiles", closed_form_profiles, 5.0},
      {"2 two-exponent corollary vs classifier grid", corollary_oracle_grid, 60.0},
      {"3 specialized reaction rows vs general path", specialized_rows, 120.0},
      {"4 critical dimensions", critical_dimension_checks, 30.0},
      {"5 coupling supremum vs dense sampling", theta_sampling_oracle, 30.0},
      {"6 radial solver accuracy and order", radial_convergence, 10.0},
      {"7 gradient-estimate surrogate boundedness", gradient_estimate_surrogate, 120.0},
      {"8 admissible-region scan and comparison layer", figure3_scan, 30.0},
      {"9 CSV determinism", determinism, 60.0},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome{false, "unhandled exception"};
    try {
      outcome = c.fn();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) {
      outcome.pass = false;
      outcome.detail += " [over time budget]";
    }
    std::printf("[%s] criterion %s (%.2fs)%s%s\n", outcome.pass ? "PASS" : "FAIL",
                c.name, secs, outcome.detail.empty() ? "" : " — ",
                outcome.detail.c_str());
    if (!outcome.pass) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
