#include "phigrad/reports.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

#include "phigrad/coupling.hpp"
#include "phigrad/degree.hpp"
#include "phigrad/radial.hpp"
#include "phigrad/verdict.hpp"

namespace phigrad {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string describe(const Witness& w, int prec) {
  switch (w.kind) {
    case Witness::Kind::AtPoint: return "at t=" + format_number(w.t, prec);
    case Witness::Kind::AtZeroLimit: return "limit t->0";
    case Witness::Kind::AtInfinityLimit: return "limit t->inf";
    case Witness::Kind::AllT: return "all t";
  }
  return "?";
}

std::string describe(const IntervalSet& set, int prec) {
  if (set.empty()) return "empty";
  std::string out;
  for (const auto& iv : set.parts()) {
    if (!out.empty()) out += " U ";
    if (iv.lo == iv.hi) {
      out += "{" + format_number(iv.lo, prec) + "}";
    } else {
      out += (iv.lo_closed ? "[" : "(") + format_number(iv.lo, prec) + ", " +
             format_number(iv.hi, prec) + (iv.hi_closed ? "]" : ")");
    }
  }
  return out;
}

struct CsvSink {
  std::ostream* stream;
  std::ofstream file;

  CsvSink(const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
      stream = &fallback;
    } else {
      file.open(path, std::ios::binary);  // binary: LF endings everywhere
      if (!file) throw config_error("cannot open CSV output: " + path);
      stream = &file;
    }
  }
  std::ostream& os() { return *stream; }
};

std::pair<double, double> operator_exponent_range(const PhiSpec& phi) {
  switch (phi.kind()) {
    case PhiKind::ConstantOne: return {2.0, 2.0};
    case PhiKind::PowerLaw: return {phi.exponent(), phi.exponent()};
    case PhiKind::SumOfPowers: return {phi.min_exponent(), phi.max_exponent()};
    default:
      throw unsupported_family_error("scan: operator family has no exponent range");
  }
}

struct ScanCell {
  double x, y;
  int value;      // 0 not admissible, 1 admissible, 2 boundary
  double margin;
  int compare;    // comparison layer (mk mode only), else -1
};

int cell_value(bool admissible, double margin) {
  if (std::isfinite(margin) && std::abs(margin) < 1e-12) return 2;
  return admissible ? 1 : 0;
}

std::vector<double> linspace(double lo, double hi, int steps) {
  std::vector<double> out;
  for (int i = 0; i < steps; ++i)
    out.push_back(steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1));
  return out;
}

std::vector<ScanCell> scan_cells(const RunConfig& cfg) {
  const ScanConfig& sc = *cfg.scan;
  const int n = cfg.n;
  std::vector<ScanCell> cells;
  cells.reserve(static_cast<std::size_t>(sc.steps1) * sc.steps2);

  if (sc.mode == "pq") {
    for (double p : linspace(sc.min1, sc.max1, sc.steps1)) {
      for (double q : linspace(sc.min2, sc.max2, sc.steps2)) {
        const double margin = (p == q)
            ? kInf
            : 4.0 * (p - 1.0) * (q - 1.0) / ((p - q) * (p - q)) - (n - 1.0);
        cells.push_back({p, q, cell_value(corollary_pq(p, q, n), margin), margin, -1});
      }
    }
    return cells;
  }

  // mk: double-power reaction u^m - u^k over the configured operator.
  const auto [p1, pr] = operator_exponent_range(cfg.phi);
  const auto [n1, n2] = critical_dimensions(p1, pr);
  if (!(static_cast<double>(n) < n1))
    throw precondition_error("scan: dimension at or above the first critical dimension");
  const double ratio = (n + 1.0) / (n - 1.0);
  const bool sharp = static_cast<double>(n) < n2;
  const double slack = sharp
      ? 2.0 * std::sqrt((p1 - 1.0) * (p1 - 1.0) / ((n - 1.0) * (n - 1.0)) -
                        (pr - p1) * (pr - p1) / (2.0 * (n - 1.0)))
      : 0.0;
  const double ref_cap = (n + 3.0) / (n - 1.0);

  for (double m : linspace(sc.min1, sc.max1, sc.steps1)) {
    for (double k : linspace(sc.min2, sc.max2, sc.steps2)) {
      double margin;
      bool admissible;
      if (!(m < k)) {
        margin = k - m;
        admissible = false;
      } else {
        margin = sharp
            ? std::min({ratio - (m - slack) / (p1 - 1.0),
                        (k + slack) / (pr - 1.0) - ratio, k - m})
            : std::min({ratio - m / (p1 - 1.0), k / (pr - 1.0) - ratio, k - m});
        admissible = theorem_double_power(p1, pr, m, k, n);
      }
      const int compare = sc.compare_layer
          ? (((m > 1.0 && m < ref_cap) || (k > 1.0 && k < ref_cap)) && m < k ? 1 : 0)
          : -1;
      cells.push_back({m, k, cell_value(admissible, margin), margin, compare});
    }
  }
  return cells;
}

void write_scan_svg(const std::string& path, const ScanConfig& sc,
                    const std::vector<ScanCell>& cells) {
  std::ofstream svg(path, std::ios::binary);
  if (!svg) throw config_error("cannot open SVG output: " + path);
  const int cell_px = 8, margin_px = 40;
  const int w = margin_px * 2 + sc.steps1 * cell_px;
  const int h = margin_px * 2 + sc.steps2 * cell_px;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w
      << "\" height=\"" << h << "\">\n";
  std::size_t idx = 0;
  for (int i = 0; i < sc.steps1; ++i) {
    for (int j = 0; j < sc.steps2; ++j, ++idx) {
      const ScanCell& c = cells[idx];
      const char* fill = c.value == 1 ? "#2e7d32" : c.value == 2 ? "#ef6c00" : "#eceff1";
      svg << "<rect x=\"" << margin_px + i * cell_px << "\" y=\""
          << margin_px + (sc.steps2 - 1 - j) * cell_px << "\" width=\"" << cell_px
          << "\" height=\"" << cell_px << "\" fill=\"" << fill << "\"";
      if (c.compare == 1) svg << " stroke=\"#1565c0\" stroke-width=\"1\"";
      svg << "/>\n";
    }
  }
  svg << "<text x=\"" << margin_px << "\" y=\"" << h - 12 << "\" font-size=\"12\">"
      << format_number(sc.min1, 6) << " .. " << format_number(sc.max1, 6)
      << "</text>\n";
  svg << "<text x=\"4\" y=\"" << margin_px << "\" font-size=\"12\">"
      << format_number(sc.max2, 6) << "</text>\n";
  svg << "<text x=\"4\" y=\"" << h - margin_px << "\" font-size=\"12\">"
      << format_number(sc.min2, 6) << "</text>\n";
  svg << "</svg>\n";
}

}  // namespace

std::string format_number(double v, int precision) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

int run_analyze(const RunConfig& cfg, std::ostream& out, const ReportOptions& opts) {
  const int prec = opts.precision;
  const DegreeProfile prof = analyze_degree(cfg.phi, cfg.n);
  out << "n = " << cfg.n << "\n";
  out << "l = " << format_number(prof.l, prec) << " (" << describe(prof.l_witness, prec)
      << "), d = " << format_number(prof.d, prec) << " (" << describe(prof.d_witness, prec)
      << ")\n";
  out << "gamma = " << format_number(prof.gamma, prec) << " ("
      << describe(prof.gamma_witness, prec) << "), Gamma = "
      << format_number(prof.Gamma, prec) << " (" << describe(prof.Gamma_witness, prec)
      << ")\n";
  if (prof.gamma_closed)
    out << "closed-form reference: gamma >= " << format_number(*prof.gamma_closed, prec)
        << ", Gamma = " << format_number(*prof.Gamma_closed, prec) << "\n";
  out << "method = "
      << (prof.method == DegreeProfile::Method::ClosedForm ? "closed_form" : "numeric")
      << "\n";
  if (!prof.phi1_ok) {
    out << "(phi1) fails: degree range [" << format_number(prof.l, prec) << ", "
        << format_number(prof.d, prec) << "] is not admissible\n";
    return kExitOk;
  }
  out << "(phi1) holds\n";
  out << ((prof.phi2_ok) ? "(phi2) holds\n" : "(phi2) fails\n");

  const CouplingProfile cp = analyze_coupling(cfg.phi, cfg.psi, prof);
  out << "I_psi = " << describe(cp.i_psi, prec) << "\n";
  out << "Theta = " << format_number(cp.theta_big, prec) << ", threshold 4*gamma/(n-1) = "
      << format_number(cp.threshold, prec) << "\n";
  out << ((cp.psi2_ok) ? "(psi2) holds\n" : "(psi2) fails\n");
  if (cp.psi2_ok)
    out << "theta = " << format_number(cp.theta_small, prec)
        << ", alpha = " << format_number(cp.alpha, prec) << "\n";
  out << "coupling method = "
      << (cp.method == CouplingProfile::Method::ClosedForm ? "closed_form" : "sampled")
      << "\n";

  if (!opts.csv_path.empty()) {
    CsvSink sink(opts.csv_path, out);
    sink.os() << "l,d,gamma,Gamma,theta_big,threshold,psi2_ok,theta,alpha\n"
              << format_number(prof.l, prec) << ',' << format_number(prof.d, prec) << ','
              << format_number(prof.gamma, prec) << ',' << format_number(prof.Gamma, prec)
              << ',' << format_number(cp.theta_big, prec) << ','
              << format_number(cp.threshold, prec) << ',' << (cp.psi2_ok ? 1 : 0) << ','
              << format_number(cp.theta_small, prec) << ','
              << format_number(cp.alpha, prec) << "\n";
  }
  return kExitOk;
}

int run_verdict(const RunConfig& cfg, std::ostream& out, const ReportOptions& opts) {
  const int prec = opts.precision;
  const Verdict v = classify(cfg.phi, cfg.psi, cfg.n, /*assume_nonneg_ricci_bounded=*/true);
  switch (v.status) {
    case Verdict::Status::NotApplicable: {
      const char* cond = v.failed == Verdict::FailedCondition::Phi1   ? "phi1"
                         : v.failed == Verdict::FailedCondition::Phi2 ? "phi2"
                                                                     : "psi2";
      out << "The gradient estimate does not apply: condition (" << cond
          << ") fails.\n  " << v.detail << "\n";
      out << "verdict=not_applicable failed=" << cond << "\n";
      return kExitNotApplicable;
    }
    case Verdict::Status::EstimateHolds:
      out << "The gradient estimate applies.\n";
      out << "verdict=estimate_holds\n";
      return kExitOk;
    case Verdict::Status::Liouville:
      out << "The gradient estimate applies; with nonnegative Ricci curvature and "
             "bounded u:\n";
      if (v.liouville == Verdict::LiouvilleKind::ConstantSolution) {
        if (std::isnan(v.constant_value)) {
          out << "  every positive bounded solution is constant.\n";
          out << "verdict=liouville_constant value=any\n";
        } else {
          out << "  u is identically " << format_number(v.constant_value, prec) << ".\n";
          out << "verdict=liouville_constant value="
              << format_number(v.constant_value, prec) << "\n";
        }
      } else {
        out << "  there is no positive bounded solution.\n";
        out << "verdict=no_positive_bounded_solution\n";
      }
      return kExitOk;
  }
  return kExitOk;
}

int run_scan(const RunConfig& cfg, std::ostream& out, const ReportOptions& opts) {
  if (!cfg.scan) throw config_error("scan command requires scan.* configuration");
  const ScanConfig& sc = *cfg.scan;
  if (static_cast<long long>(sc.steps1) * sc.steps2 > 10'000'000LL) {
    out << "scan grid too large\n";
    return kExitResource;
  }
  const std::vector<ScanCell> cells = scan_cells(cfg);
  const int prec = opts.precision;

  CsvSink sink(opts.csv_path, out);
  const bool mk = sc.mode == "mk";
  sink.os() << (mk ? "m,k,admissible,margin" : "p,q,admissible,margin");
  if (mk && sc.compare_layer) sink.os() << ",compare";
  sink.os() << "\n";
  for (const ScanCell& c : cells) {
    sink.os() << format_number(c.x, prec) << ',' << format_number(c.y, prec) << ','
              << c.value << ',' << format_number(c.margin, prec);
    if (mk && sc.compare_layer) sink.os() << ',' << c.compare;
    sink.os() << "\n";
  }
  if (!opts.svg_path.empty()) write_scan_svg(opts.svg_path, sc, cells);
  if (!opts.csv_path.empty()) {
    std::size_t adm = 0;
    for (const ScanCell& c : cells) adm += c.value == 1;
    out << "cells=" << cells.size() << " admissible=" << adm << "\n";
  }
  return kExitOk;
}

int run_verify(const RunConfig& cfg, std::ostream& out, const ReportOptions& opts) {
  const std::vector<double> radii =
      cfg.solver.radii.empty() ? std::vector<double>{cfg.solver.R} : cfg.solver.radii;
  const ModelSpace space{cfg.n, cfg.space_k};
  const auto rows =
      sweep_radii(cfg.phi, cfg.psi, space, cfg.solver.u0, radii, cfg.solver.h);
  const int prec = opts.precision;
  CsvSink sink(opts.csv_path, out);
  sink.os() << "R,c_hat,harnack_log,positive_ok,residual_max\n";
  for (const SweepRow& r : rows)
    sink.os() << format_number(r.R, prec) << ',' << format_number(r.c_hat, prec) << ','
              << format_number(r.harnack_log, prec) << ',' << (r.positive_ok ? 1 : 0)
              << ',' << format_number(r.residual_max, prec) << "\n";
  return kExitOk;
}

int run_constants(const RunConfig& cfg, std::ostream& out, const ReportOptions& opts) {
  const int prec = opts.precision;
  const DegreeProfile prof = analyze_degree(cfg.phi, cfg.n);
  if (!prof.phi1_ok || !prof.phi2_ok) {
    out << "conditions fail: " << (prof.phi1_ok ? "(phi2)" : "(phi1)") << "\n";
    return kExitNotApplicable;
  }
  const CouplingProfile cp = analyze_coupling(cfg.phi, cfg.psi, prof);
  if (!cp.psi2_ok) {
    out << "conditions fail: (psi2)\n";
    return kExitNotApplicable;
  }
  const IterationConstants c = iteration_constants(prof);
  out << "a0 = " << format_number(c.a0, prec) << "\n";
  out << "a1 = " << format_number(c.a1, prec) << "\n";
  out << "a2 = " << format_number(c.a2, prec) << "\n";
  out << "a3 = " << format_number(c.a3, prec) << "\n";
  out << "theta = " << format_number(cp.theta_small, prec) << "\n";
  out << "alpha = " << format_number(cp.alpha, prec) << "\n";
  out << "b > " << format_number(c.b_threshold, prec) << "\n";
  return kExitOk;
}

int run_command(const std::string& command, const RunConfig& cfg,
                std::ostream& out, std::ostream& err, const ReportOptions& opts) {
  try {
    if (command == "analyze") return run_analyze(cfg, out, opts);
    if (command == "verdict") return run_verdict(cfg, out, opts);
    if (command == "scan") return run_scan(cfg, out, opts);
    if (command == "verify") return run_verify(cfg, out, opts);
    if (command == "constants") return run_constants(cfg, out, opts);
    err << "unknown command: " << command << "\n";
    return kExitConfig;
  } catch (const config_error& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const unsupported_family_error& e) {
    err << "unsupported family: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const solver_error& e) {
    err << "solver failure: " << e.what() << "\n";
    return kExitSolver;
  } catch (const non_invertible_error& e) {
    err << "solver failure: " << e.what() << "\n";
    return kExitSolver;
  } catch (const pole_error& e) {
    err << "solver failure: " << e.what() << "\n";
    return kExitSolver;
  } catch (const precondition_error& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  }
}

}  // namespace phigrad
