#pragma once

#include <ostream>
#include <string>

#include "phigrad/config.hpp"

namespace phigrad {

// BSD-style exit codes used by the CLI surface.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNotApplicable = 2;
inline constexpr int kExitConfig = 64;
inline constexpr int kExitUnsupported = 65;
inline constexpr int kExitResource = 66;
inline constexpr int kExitSolver = 70;

struct ReportOptions {
  std::string csv_path;  // empty: CSV-producing commands print to `out`
  std::string svg_path;  // empty: no SVG
  int precision = 12;    // significant digits, clamped to [6, 17] by the CLI
};

/// %.{precision}g with non-finite values spelled inf/-inf/nan.
std::string format_number(double v, int precision);

int run_analyze(const RunConfig& cfg, std::ostream& out, const ReportOptions& opts);
int run_verdict(const RunConfig& cfg, std::ostream& out, const ReportOptions& opts);
int run_scan(const RunConfig& cfg, std::ostream& out, const ReportOptions& opts);
int run_verify(const RunConfig& cfg, std::ostream& out, const ReportOptions& opts);
int run_constants(const RunConfig& cfg, std::ostream& out, const ReportOptions& opts);

/// Dispatch by command name with the documented exit-code mapping; errors
/// are reported on `err`.
int run_command(const std::string& command, const RunConfig& cfg,
                std::ostream& out, std::ostream& err, const ReportOptions& opts);

}  // namespace phigrad
