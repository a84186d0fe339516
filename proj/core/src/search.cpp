#include "phigrad/search.hpp"

#include <algorithm>
#include <array>
#include <vector>

namespace phigrad {

namespace {

constexpr int kGridPoints = 100000;
constexpr double kLogLo = -12.0 * 2.302585092994046;  // ln(1e-12)
constexpr double kLogHi = 12.0 * 2.302585092994046;   // ln(1e12)
constexpr int kRefineCount = 8;
constexpr double kRelTol = 1e-10;

const std::vector<double>& log_grid() {
  static const std::vector<double> grid = [] {
    std::vector<double> g(kGridPoints);
    for (int i = 0; i < kGridPoints; ++i)
      g[i] = kLogLo + (kLogHi - kLogLo) * i / (kGridPoints - 1);
    return g;
  }();
  return grid;
}

struct Extremum {
  double value;
  int index;
};

}  // namespace

std::pair<double, double> golden_min_log(const std::function<double(double)>& f,
                                         double a, double b, double rel_tol) {
  constexpr double invphi = 0.6180339887498949;
  double xa = std::log(a), xb = std::log(b);
  double x1 = xb - invphi * (xb - xa);
  double x2 = xa + invphi * (xb - xa);
  double f1 = f(std::exp(x1));
  double f2 = f(std::exp(x2));
  while (xb - xa > rel_tol) {
    if (f1 < f2) {
      xb = x2;
      x2 = x1;
      f2 = f1;
      x1 = xb - invphi * (xb - xa);
      f1 = f(std::exp(x1));
    } else {
      xa = x1;
      x1 = x2;
      f1 = f2;
      x2 = xa + invphi * (xb - xa);
      f2 = f(std::exp(x2));
    }
  }
  const double x = 0.5 * (xa + xb);
  const double t = std::exp(x);
  return {t, f(t)};
}

InfSupResult numeric_inf_sup_fast(const std::function<double(double, double)>& f,
                                  double limit_at_zero, double limit_at_inf) {
  const auto& grid = log_grid();
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    values[i] = f(std::exp(grid[i]), grid[i]);

  auto collect = [&](bool minima) {
    std::vector<Extremum> out;
    for (std::size_t i = 1; i + 1 < values.size(); ++i) {
      const bool is_ext = minima
          ? (values[i] < values[i - 1] && values[i] <= values[i + 1])
          : (values[i] > values[i - 1] && values[i] >= values[i + 1]);
      if (is_ext) out.push_back({values[i], static_cast<int>(i)});
    }
    std::sort(out.begin(), out.end(), [&](const Extremum& a, const Extremum& b) {
      return minima ? a.value < b.value : a.value > b.value;
    });
    if (out.size() > kRefineCount) out.resize(kRefineCount);
    return out;
  };

  auto f_plain = [&](double t) { return f(t, std::log(t)); };

  InfSupResult result;
  result.inf = std::numeric_limits<double>::infinity();
  result.sup = -std::numeric_limits<double>::infinity();

  // Grid extremes without interior local structure (monotone functions).
  const std::size_t n = values.size();
  const std::array<std::size_t, 2> ends = {0, n - 1};
  for (std::size_t i : ends) {
    if (values[i] < result.inf) {
      result.inf = values[i];
      result.inf_witness = Witness::at(std::exp(grid[i]));
    }
    if (values[i] > result.sup) {
      result.sup = values[i];
      result.sup_witness = Witness::at(std::exp(grid[i]));
    }
  }

  for (const Extremum& e : collect(true)) {
    const double a = std::exp(grid[e.index - 1]);
    const double b = std::exp(grid[e.index + 1]);
    auto [t, v] = golden_min_log(f_plain, a, b, kRelTol);
    if (v < result.inf) {
      result.inf = v;
      result.inf_witness = Witness::at(t);
    }
  }
  for (const Extremum& e : collect(false)) {
    const double a = std::exp(grid[e.index - 1]);
    const double b = std::exp(grid[e.index + 1]);
    auto neg = [&](double t) { return -f_plain(t); };
    auto [t, v] = golden_min_log(neg, a, b, kRelTol);
    if (-v > result.sup) {
      result.sup = -v;
      result.sup_witness = Witness::at(t);
    }
  }

  if (limit_at_zero <= result.inf) {
    result.inf = limit_at_zero;
    result.inf_witness = Witness::zero_limit();
  }
  if (limit_at_inf <= result.inf) {
    result.inf = limit_at_inf;
    result.inf_witness = Witness::infinity_limit();
  }
  if (limit_at_zero >= result.sup) {
    result.sup = limit_at_zero;
    result.sup_witness = Witness::zero_limit();
  }
  if (limit_at_inf >= result.sup) {
    result.sup = limit_at_inf;
    result.sup_witness = Witness::infinity_limit();
  }
  return result;
}

InfSupResult numeric_inf_sup(const std::function<double(double)>& f,
                             double limit_at_zero, double limit_at_inf) {
  return numeric_inf_sup_fast([&](double t, double) { return f(t); },
                              limit_at_zero, limit_at_inf);
}

}  // namespace phigrad
